#include "exel/crossed_product.hpp"

#include <algorithm>
#include <random>

#include "exel/parallel.hpp"

namespace exel {

namespace {

bool in_ideal(const std::vector<Point>& ideal, const AlgebraElement& a) {
  for (const auto& [b, c] : a)
    if (!std::binary_search(ideal.begin(), ideal.end(), b)) return false;
  return true;
}

// Relabels the basis of an ideal element along a partial bijection that is
// total on its support.
AlgebraElement transport(const PartialBijection& f, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [b, c] : a) {
    auto y = f(b);
    if (!y)
      throw ContextMismatch("coefficient escapes the ideal it must live in");
    out[*y] = c;
  }
  return out;
}

std::string coeff_to_string(const BasedAlgebra& alg, const AlgebraElement& a) {
  if (a.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : a) {
    if (!first) out += " + ";
    first = false;
    if (c != 1) {
      out += std::to_string(c.numerator());
      if (c.denominator() != 1) out += "/" + std::to_string(c.denominator());
      out += "*";
    }
    out += alg.labels[b];
  }
  return out;
}

}  // namespace

CrossedProductContext make_crossed_context(FiniteGroupoid groupoid,
                                           BasedAlgebra algebra,
                                           GroupoidPartialAction action) {
  if (action.n_points != algebra.dim)
    throw InvalidInput("partial action must act on the algebra's basis");
  CheckReport check = validate_partial_action(groupoid, action);
  if (!check.ok())
    throw InvalidInput("algebra partial action invalid: " +
                       check.issues.front().law + ": " +
                       check.issues.front().witness);
  CrossedProductContext ctx;
  ctx.sg_elements = sg::enumerate(groupoid);
  ctx.sg_action = partial_to_sg(groupoid, action);
  ctx.groupoid = std::move(groupoid);
  ctx.algebra = std::move(algebra);
  ctx.action = std::move(action);
  return ctx;
}

CrossedProductContext fn_context_from_set_action(
    const FiniteGroupoid& groupoid, const GroupoidPartialAction& set_action) {
  return make_crossed_context(groupoid, fn_algebra(set_action.n_points),
                              set_action);
}

CPElement cp_monomial(const CrossedProductContext& ctx, ElementId grp,
                      AlgebraElement coeff) {
  if (grp >= ctx.groupoid.size())
    throw UnknownElement("monomial index out of range");
  if (!in_ideal(ctx.action.domains[grp], coeff))
    throw ContextMismatch("coefficient of delta_" + ctx.groupoid.label(grp) +
                          " not supported in D(" + ctx.groupoid.label(grp) + ")");
  CPElement x;
  if (!coeff.empty()) x.terms.emplace(grp, std::move(coeff));
  return x;
}

CPElement cp_add(CPElement x, const CPElement& y, const Rational& scale) {
  for (const auto& [g, a] : y.terms) {
    AlgebraElement& slot = x.terms[g];
    add_scaled(slot, a, scale);
    if (slot.empty()) x.terms.erase(g);
  }
  return x;
}

CPElement cp_multiply(const CrossedProductContext& ctx, const CPElement& x,
                      const CPElement& y) {
  CPElement out;
  for (const auto& [g, a] : x.terms) {
    if (!in_ideal(ctx.action.domains[g], a))
      throw ContextMismatch("left factor not supported in its ideal");
    const PartialBijection& back = ctx.action.maps[ctx.groupoid.inverse(g)];
    AlgebraElement pulled = transport(back, a);
    for (const auto& [h, b] : y.terms) {
      auto gh = ctx.groupoid.compose(g, h);
      if (!gh) continue;
      AlgebraElement prod = mul(ctx.algebra, pulled, b);
      if (prod.empty()) continue;
      AlgebraElement pushed = transport(ctx.action.maps[g], prod);
      AlgebraElement& slot = out.terms[*gh];
      add_scaled(slot, pushed, 1);
      if (slot.empty()) out.terms.erase(*gh);
    }
  }
  return out;
}

CPElement cp_star(const CrossedProductContext& ctx, const CPElement& x) {
  CPElement out;
  for (const auto& [g, a] : x.terms) {
    ElementId ginv = ctx.groupoid.inverse(g);
    AlgebraElement moved = transport(ctx.action.maps[ginv], a);
    AlgebraElement& slot = out.terms[ginv];
    add_scaled(slot, moved, 1);
    if (slot.empty()) out.terms.erase(ginv);
  }
  return out;
}

LElement l_monomial(const CrossedProductContext& ctx, const sg::Element& s,
                    AlgebraElement coeff) {
  std::size_t i = ctx.sg_action.index_of(ctx.groupoid, s);
  if (!in_ideal(ctx.sg_action.domains[i], coeff))
    throw ContextMismatch("coefficient of delta_" +
                          sg::to_string(ctx.groupoid, s) +
                          " not supported in its E-set");
  LElement x;
  if (!coeff.empty()) x.terms.emplace(s, std::move(coeff));
  return x;
}

LElement l_add(LElement x, const LElement& y, const Rational& scale) {
  for (const auto& [s, a] : y.terms) {
    AlgebraElement& slot = x.terms[s];
    add_scaled(slot, a, scale);
    if (slot.empty()) x.terms.erase(s);
  }
  return x;
}

LElement l_multiply(const CrossedProductContext& ctx, const LElement& x,
                    const LElement& y) {
  LElement out;
  for (const auto& [s, a] : x.terms) {
    std::size_t i = ctx.sg_action.index_of(ctx.groupoid, s);
    if (!in_ideal(ctx.sg_action.domains[i], a))
      throw ContextMismatch("left factor not supported in its E-set");
    sg::Element s_star = sg::star(ctx.groupoid, s);
    std::size_t i_star = ctx.sg_action.index_of(ctx.groupoid, s_star);
    AlgebraElement pulled = transport(ctx.sg_action.maps[i_star], a);
    for (const auto& [t, b] : y.terms) {
      auto st = sg::multiply(ctx.groupoid, s, t);
      if (!st) continue;
      AlgebraElement prod = mul(ctx.algebra, pulled, b);
      if (prod.empty()) continue;
      AlgebraElement pushed = transport(ctx.sg_action.maps[i], prod);
      AlgebraElement& slot = out.terms[*st];
      add_scaled(slot, pushed, 1);
      if (slot.empty()) out.terms.erase(*st);
    }
  }
  return out;
}

LElement l_star(const CrossedProductContext& ctx, const LElement& x) {
  LElement out;
  for (const auto& [s, a] : x.terms) {
    sg::Element s_star = sg::star(ctx.groupoid, s);
    std::size_t i_star = ctx.sg_action.index_of(ctx.groupoid, s_star);
    AlgebraElement moved = transport(ctx.sg_action.maps[i_star], a);
    AlgebraElement& slot = out.terms[s_star];
    add_scaled(slot, moved, 1);
    if (slot.empty()) out.terms.erase(s_star);
  }
  return out;
}

LElement l_lift(const CrossedProductContext& ctx, const CPElement& x) {
  LElement out;
  for (const auto& [g, a] : x.terms)
    out.terms.emplace(sg::generator(ctx.groupoid, g), a);
  return out;
}

CPElement quotient_normalize(const CrossedProductContext& ctx,
                             const LElement& x) {
  CPElement out;
  for (const auto& [s, a] : x.terms) {
    ElementId g = sg::degree(s);
    if (!in_ideal(ctx.action.domains[g], a))
      throw ContextMismatch("representative coefficient escapes its ideal");
    AlgebraElement& slot = out.terms[g];
    add_scaled(slot, a, 1);
    if (slot.empty()) out.terms.erase(g);
  }
  return out;
}

CPElement quotient_multiply(const CrossedProductContext& ctx,
                            const CPElement& x, const CPElement& y) {
  return quotient_normalize(ctx,
                            l_multiply(ctx, l_lift(ctx, x), l_lift(ctx, y)));
}

CPElement quotient_star(const CrossedProductContext& ctx, const CPElement& x) {
  return quotient_normalize(ctx, l_star(ctx, l_lift(ctx, x)));
}

CheckReport check_associativity(const CrossedProductContext& ctx,
                                const AssociativityPlan& plan) {
  std::vector<std::pair<ElementId, BasisId>> monomials;
  for (ElementId g = 0; g < ctx.groupoid.size(); ++g)
    for (Point b : ctx.action.domains[g]) monomials.emplace_back(g, b);

  const std::size_t m = monomials.size();
  std::vector<std::array<std::size_t, 3>> triples;
  if (m * m * m <= plan.exhaustive_cap) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) triples.push_back({i, j, k});
  } else {
    std::mt19937_64 rng(plan.seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (std::size_t t = 0; t < plan.trials; ++t)
      triples.push_back({pick(rng), pick(rng), pick(rng)});
  }

  std::vector<std::string> failures(triples.size());
  parallel_for(triples.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      auto [i, j, k] = triples[idx];
      CPElement x = cp_monomial(ctx, monomials[i].first,
                                {{monomials[i].second, Rational(1)}});
      CPElement y = cp_monomial(ctx, monomials[j].first,
                                {{monomials[j].second, Rational(1)}});
      CPElement z = cp_monomial(ctx, monomials[k].first,
                                {{monomials[k].second, Rational(1)}});
      CPElement lhs = cp_multiply(ctx, cp_multiply(ctx, x, y), z);
      CPElement rhs = cp_multiply(ctx, x, cp_multiply(ctx, y, z));
      if (!(lhs == rhs))
        failures[idx] = "(xy)z != x(yz) at (" + cp_to_string(ctx, x) + ", " +
                        cp_to_string(ctx, y) + ", " + cp_to_string(ctx, z) + ")";
    }
  });

  CheckReport report;
  report.checks_run = triples.size();
  for (const std::string& f : failures)
    if (!f.empty()) report.record("associativity", f);
  return report;
}

namespace {

// Exact rank of a set of sparse rows over the flattened L basis.
std::size_t rational_rank(std::vector<std::map<std::size_t, Rational>> rows) {
  std::size_t rank = 0;
  std::map<std::size_t, std::size_t> pivot_of_column;  // column -> row index
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = rows[r];
    while (!row.empty()) {
      auto [col, coeff] = *row.begin();
      auto hit = pivot_of_column.find(col);
      if (hit == pivot_of_column.end()) break;
      // eliminate with the previous pivot row
      const auto& pivot_row = rows[hit->second];
      Rational factor = coeff / pivot_row.begin()->second;
      for (const auto& [c, v] : pivot_row) {
        Rational& slot = row[c];
        slot -= factor * v;
        if (slot == 0) row.erase(c);
      }
    }
    if (!row.empty()) {
      pivot_of_column.emplace(row.begin()->first, r);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

IsoReport iso_roundtrip(const CrossedProductContext& ctx) {
  IsoReport iso;
  CheckReport& report = iso.report;
  const FiniteGroupoid& g = ctx.groupoid;

  for (ElementId x = 0; x < g.size(); ++x)
    iso.dim_crossed_product += ctx.action.domains[x].size();
  for (const auto& dom : ctx.sg_action.domains) iso.dim_l += dom.size();

  // Relation module N = < a delta_r - a delta_t : r <= t >, one generator
  // per (r, t, basis a in E[r]).
  auto flat = [&](std::size_t element_index, BasisId b) {
    return element_index * ctx.algebra.dim + b;
  };
  std::vector<std::map<std::size_t, Rational>> rows;
  const auto& els = ctx.sg_elements;
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (i == j || !sg::leq(g, els[i], els[j])) continue;
      for (Point b : ctx.sg_action.domains[i]) {
        std::map<std::size_t, Rational> row;
        row[flat(i, b)] = 1;
        row[flat(j, b)] -= 1;
        if (!row.empty()) rows.push_back(std::move(row));

        // Soundness: the canonical representative of each generator is zero.
        ++report.checks_run;
        LElement gen = l_add(
            l_monomial(ctx, els[i], {{b, Rational(1)}}),
            l_monomial(ctx, els[j], {{b, Rational(1)}}), Rational(-1));
        if (!quotient_normalize(ctx, gen).terms.empty())
          report.record("N-soundness",
                        "generator at (" + sg::to_string(g, els[i]) + ", " +
                            sg::to_string(g, els[j]) + ") does not normalize to 0");
      }
    }
  }
  iso.rank_relations = rational_rank(std::move(rows));
  iso.dim_quotient = iso.dim_l - iso.rank_relations;
  ++report.checks_run;
  if (iso.dim_quotient != iso.dim_crossed_product)
    report.record("dimension", "dim L/N = " + std::to_string(iso.dim_quotient) +
                                   " but dim crossed product = " +
                                   std::to_string(iso.dim_crossed_product));

  // phi(a delta_g) = class of a delta_{[g]};  psi(class of a delta_s) =
  // a delta_{degree(s)}. On representatives both are relabelings, so the
  // checks below exercise multiplicativity through the actual products.
  auto phi = [&](const CPElement& x) {
    return quotient_normalize(ctx, l_lift(ctx, x));
  };
  auto psi = [&](const CPElement& q) { return q; };  // representatives share shape

  std::vector<std::pair<ElementId, BasisId>> monomials;
  for (ElementId x = 0; x < g.size(); ++x)
    for (Point b : ctx.action.domains[x]) monomials.emplace_back(x, b);

  for (auto [gx, bx] : monomials) {
    CPElement x = cp_monomial(ctx, gx, {{bx, Rational(1)}});
    ++report.checks_run;
    if (!(psi(phi(x)) == x))
      report.record("roundtrip", "psi(phi(x)) != x at " + cp_to_string(ctx, x));
    ++report.checks_run;
    if (!(phi(cp_star(ctx, x)) == quotient_star(ctx, phi(x))))
      report.record("star", "phi(x*) != phi(x)* at " + cp_to_string(ctx, x));
    for (auto [gy, by] : monomials) {
      CPElement y = cp_monomial(ctx, gy, {{by, Rational(1)}});
      ++report.checks_run;
      CPElement lhs = phi(cp_multiply(ctx, x, y));
      CPElement rhs = quotient_multiply(ctx, phi(x), phi(y));
      if (!(lhs == rhs))
        report.record("phi-multiplicative",
                      "phi(xy) != phi(x)phi(y) at (" + cp_to_string(ctx, x) +
                          ", " + cp_to_string(ctx, y) + ")");
      ++report.checks_run;
      CPElement back = psi(quotient_multiply(ctx, phi(x), phi(y)));
      if (!(back == cp_multiply(ctx, psi(phi(x)), psi(phi(y)))))
        report.record("psi-multiplicative",
                      "psi(q1 q2) != psi(q1)psi(q2) at (" +
                          cp_to_string(ctx, x) + ", " + cp_to_string(ctx, y) + ")");
    }
  }

  // Linearity survives a mixed combination.
  if (monomials.size() >= 2) {
    CPElement x = cp_monomial(ctx, monomials[0].first,
                              {{monomials[0].second, Rational(2, 3)}});
    CPElement y = cp_monomial(ctx, monomials.back().first,
                              {{monomials.back().second, Rational(-5)}});
    ++report.checks_run;
    if (!(phi(cp_add(x, y)) == cp_add(phi(x), phi(y))))
      report.record("linearity", "phi not linear on a mixed combination");
  }
  return iso;
}

std::string cp_to_string(const CrossedProductContext& ctx, const CPElement& x) {
  if (x.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, a] : x.terms) {
    if (!first) out += " + ";
    first = false;
    out += "(" + coeff_to_string(ctx.algebra, a) + ")d_" + ctx.groupoid.label(g);
  }
  return out;
}

}  // namespace exel
