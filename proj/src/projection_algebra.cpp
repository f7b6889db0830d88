#include "exel/projection_algebra.hpp"

#include <algorithm>

namespace exel {

ProjectionAlgebra::ProjectionAlgebra(const FiniteGroupoid& g) : groupoid_(g) {
  sets_.push_back({});  // the unit
  for (ElementId e : g.identities()) {
    const auto& cls = g.x_class(e);
    if (cls.size() > 20)
      throw BudgetExceeded("projection algebra limited to range classes of <= 20 elements");
    for (std::uint64_t mask = 1; mask < (1ull << cls.size()); ++mask) {
      std::vector<ElementId> set;
      for (std::size_t i = 0; i < cls.size(); ++i)
        if (mask & (1ull << i)) set.push_back(cls[i]);
      sets_.push_back(std::move(set));
    }
  }
  std::sort(sets_.begin(), sets_.end());
}

std::optional<BasisId> ProjectionAlgebra::index_of(
    std::vector<ElementId> set) const {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  auto it = std::lower_bound(sets_.begin(), sets_.end(), set);
  if (it == sets_.end() || *it != set) return std::nullopt;
  return static_cast<BasisId>(it - sets_.begin());
}

AlgebraElement ProjectionAlgebra::p(const std::vector<ElementId>& set) const {
  for (ElementId x : set)
    if (x >= groupoid_.size())
      throw UnknownElement("projection set member out of range");
  auto idx = index_of(set);
  if (!idx) return {};
  return {{*idx, Rational(1)}};
}

AlgebraElement ProjectionAlgebra::multiply(const AlgebraElement& a,
                                           const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [i, ci] : a) {
    for (const auto& [j, cj] : b) {
      std::vector<ElementId> u = sets_[i];
      u.insert(u.end(), sets_[j].begin(), sets_[j].end());
      auto k = index_of(std::move(u));
      if (!k) continue;
      Rational& slot = out[*k];
      slot += ci * cj;
      if (slot == 0) out.erase(*k);
    }
  }
  return out;
}

AlgebraElement ProjectionAlgebra::act(ElementId t, const AlgebraElement& a) const {
  if (t >= groupoid_.size()) throw UnknownElement("action index out of range");
  AlgebraElement out;
  for (const auto& [i, c] : a) {
    std::vector<ElementId> moved;
    bool defined = true;
    for (ElementId x : sets_[i]) {
      auto tx = groupoid_.compose(t, x);
      if (!tx) {
        defined = false;
        break;
      }
      moved.push_back(*tx);
    }
    if (!defined) continue;
    // translates of an admissible set stay admissible
    BasisId k = index_of(std::move(moved)).value();
    Rational& slot = out[k];
    slot += c;
    if (slot == 0) out.erase(k);
  }
  return out;
}

BasedAlgebra ProjectionAlgebra::to_based_algebra() const {
  BasedAlgebra alg;
  alg.dim = sets_.size();
  for (BasisId i = 0; i < sets_.size(); ++i)
    alg.labels.push_back(basis_label(i));
  alg.product_table.assign(alg.dim * alg.dim, kZeroProduct);
  for (BasisId i = 0; i < alg.dim; ++i) {
    for (BasisId j = 0; j < alg.dim; ++j) {
      std::vector<ElementId> u = sets_[i];
      u.insert(u.end(), sets_[j].begin(), sets_[j].end());
      auto k = index_of(std::move(u));
      if (k) alg.product_table[i * alg.dim + j] = *k;
    }
  }
  return alg;
}

GroupoidPartialAction ProjectionAlgebra::translation_action() const {
  const FiniteGroupoid& g = groupoid_;
  GroupoidPartialAction action;
  action.n_points = sets_.size();
  action.domains.resize(g.size());
  action.maps.resize(g.size());
  for (ElementId t = 0; t < g.size(); ++t) {
    const auto& cls = g.x_class(t);
    for (BasisId i = 0; i < sets_.size(); ++i) {
      const auto& set = sets_[i];
      if (set.empty()) continue;
      bool anchored = std::binary_search(set.begin(), set.end(), t) &&
                      std::binary_search(set.begin(), set.end(), g.range(t));
      bool inside = std::includes(cls.begin(), cls.end(), set.begin(), set.end());
      if (anchored && inside) action.domains[t].push_back(i);
    }
  }
  for (ElementId t = 0; t < g.size(); ++t) {
    std::vector<std::pair<Point, Point>> pairs;
    for (BasisId i : action.domains[g.inverse(t)]) {
      std::vector<ElementId> moved;
      for (ElementId x : sets_[i]) moved.push_back(g.compose(t, x).value());
      pairs.emplace_back(i, index_of(std::move(moved)).value());
    }
    action.maps[t] = PartialBijection::from_pairs(sets_.size(), pairs);
  }
  return action;
}

std::string ProjectionAlgebra::basis_label(BasisId i) const {
  std::string out = "P{";
  const auto& set = sets_[i];
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) out += ",";
    out += groupoid_.label(set[k]);
  }
  return out + "}";
}

CPElement CpStarAlgebra::monomial(std::uint32_t i) const {
  return cp_monomial(ctx, basis[i].grp, {{basis[i].set, Rational(1)}});
}

std::optional<std::uint32_t> CpStarAlgebra::index_of(ElementId grp,
                                                     BasisId set) const {
  for (std::uint32_t i = 0; i < basis.size(); ++i)
    if (basis[i].grp == grp && basis[i].set == set) return i;
  return std::nullopt;
}

std::string CpStarAlgebra::monomial_label(std::uint32_t i) const {
  return proj.basis_label(basis[i].set) + "d_" +
         ctx.groupoid.label(basis[i].grp);
}

namespace {

// Particular solution of a linear system given as (sparse row, rhs) pairs,
// free variables pinned to zero. Returns nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_exact(
    std::size_t n_vars,
    std::vector<std::pair<std::map<std::size_t, Rational>, Rational>> rows) {
  std::map<std::size_t, std::pair<std::map<std::size_t, Rational>, Rational>>
      pivots;  // pivot column -> normalized row
  for (auto& [row, rhs] : rows) {
    for (auto it = row.begin(); it != row.end();) {
      auto hit = pivots.find(it->first);
      if (hit == pivots.end()) {
        ++it;
        continue;
      }
      Rational factor = it->second;
      for (const auto& [c, v] : hit->second.first) {
        Rational& slot = row[c];
        slot -= factor * v;
        if (slot == 0) row.erase(c);
      }
      rhs -= factor * hit->second.second;
      it = row.begin();
    }
    if (row.empty()) {
      if (rhs != 0) return std::nullopt;
      continue;
    }
    // Normalize so the pivot coefficient is one, then eliminate the new
    // pivot column from previously stored rows.
    Rational lead = row.begin()->second;
    for (auto& [c, v] : row) v /= lead;
    rhs /= lead;
    std::size_t col = row.begin()->first;
    for (auto& [pc, prow] : pivots) {
      auto found = prow.first.find(col);
      if (found == prow.first.end()) continue;
      Rational factor = found->second;
      for (const auto& [c, v] : row) {
        Rational& slot = prow.first[c];
        slot -= factor * v;
        if (slot == 0) prow.first.erase(c);
      }
      prow.second -= factor * rhs;
    }
    pivots.emplace(col, std::make_pair(std::move(row), rhs));
  }
  std::vector<Rational> solution(n_vars, Rational(0));
  for (const auto& [col, row] : pivots) {
    // row = x_col + combination of free variables = rhs; free vars are zero.
    solution[col] = row.second;
  }
  return solution;
}

}  // namespace

CpStarAlgebra build_cp_star_algebra(const FiniteGroupoid& g) {
  ProjectionAlgebra proj(g);
  CpStarAlgebra cp{make_crossed_context(g, proj.to_based_algebra(),
                                        proj.translation_action()),
                   std::move(proj)};

  for (ElementId t = 0; t < g.size(); ++t)
    for (Point set : cp.ctx.action.domains[t])
      cp.basis.push_back({t, static_cast<BasisId>(set)});
  cp.dimension = cp.basis.size();

  cp.product_table.assign(cp.dimension * cp.dimension, kZeroProduct);
  cp.star_table.assign(cp.dimension, 0);
  for (std::uint32_t i = 0; i < cp.dimension; ++i) {
    for (std::uint32_t j = 0; j < cp.dimension; ++j) {
      CPElement prod = cp_multiply(cp.ctx, cp.monomial(i), cp.monomial(j));
      if (prod.terms.empty()) continue;
      if (prod.terms.size() != 1 || prod.terms.begin()->second.size() != 1 ||
          prod.terms.begin()->second.begin()->second != 1)
        throw Error("internal: monomial product is not a monomial");
      cp.product_table[i * cp.dimension + j] =
          cp.index_of(prod.terms.begin()->first,
                      prod.terms.begin()->second.begin()->first)
              .value();
    }
    CPElement st = cp_star(cp.ctx, cp.monomial(i));
    if (st.terms.size() != 1 || st.terms.begin()->second.size() != 1)
      throw Error("internal: monomial star is not a monomial");
    cp.star_table[i] = cp.index_of(st.terms.begin()->first,
                                   st.terms.begin()->second.begin()->first)
                           .value();
  }

  // A unit, if the structure constants admit one: solve u b = b = b u.
  std::vector<std::pair<std::map<std::size_t, Rational>, Rational>> rows;
  for (std::uint32_t j = 0; j < cp.dimension; ++j) {
    for (std::uint32_t k = 0; k < cp.dimension; ++k) {
      std::map<std::size_t, Rational> left, right;
      for (std::uint32_t i = 0; i < cp.dimension; ++i) {
        if (cp.product_table[i * cp.dimension + j] == k) left[i] += 1;
        if (cp.product_table[j * cp.dimension + i] == k) right[i] += 1;
      }
      Rational rhs = (j == k) ? 1 : 0;
      rows.emplace_back(std::move(left), rhs);
      rows.emplace_back(std::move(right), rhs);
    }
  }
  if (auto u = solve_exact(cp.dimension, std::move(rows))) {
    CPElement unit;
    for (std::uint32_t i = 0; i < cp.dimension; ++i) {
      if ((*u)[i] == 0) continue;
      unit = cp_add(unit, cp.monomial(i), (*u)[i]);
    }
    // solve_exact pins free variables, so double-check the candidate.
    bool works = true;
    for (std::uint32_t j = 0; j < cp.dimension && works; ++j) {
      CPElement b = cp.monomial(j);
      works = cp_multiply(cp.ctx, unit, b) == b &&
              cp_multiply(cp.ctx, b, unit) == b;
    }
    if (works) cp.unit = std::move(unit);
  }
  return cp;
}

}  // namespace exel
