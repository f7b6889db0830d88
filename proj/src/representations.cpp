#include "exel/representations.hpp"

#include <algorithm>
#include <boost/rational.hpp>

namespace exel {

namespace {

Matrix zero(std::size_t n) { return Matrix::Zero(n, n); }

bool is_projection(const Matrix& p, double tau) {
  return approx_equal(p, p.adjoint(), tau) && approx_equal(p * p, p, tau);
}

}  // namespace

bool approx_equal(const Matrix& a, const Matrix& b, double tau) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.size() == 0) return true;
  return (a - b).cwiseAbs().maxCoeff() <= tau;
}

bool approx_zero(const Matrix& a, double tau) {
  if (a.size() == 0) return true;
  return a.cwiseAbs().maxCoeff() <= tau;
}

CheckReport check_partial_rep(const FiniteGroupoid& g, const PartialRep& rep,
                              double tau) {
  CheckReport report;
  if (rep.pi.size() != g.size()) {
    report.record("structure", "one matrix per groupoid element required");
    return report;
  }
  for (const Matrix& m : rep.pi) {
    if (m.rows() != static_cast<Eigen::Index>(rep.dim) ||
        m.cols() != static_cast<Eigen::Index>(rep.dim)) {
      report.record("structure", "matrix dimensions differ from rep dimension");
      return report;
    }
  }

  for (ElementId s = 0; s < g.size(); ++s) {
    ++report.checks_run;
    if (!approx_equal(rep.pi[g.inverse(s)], rep.pi[s].adjoint(), tau))
      report.record("PR2", "pi(inv " + g.label(s) + ") != pi(" + g.label(s) + ")*");
  }
  for (ElementId e : g.identities()) {
    ++report.checks_run;
    if (!is_projection(rep.pi[e], tau))
      report.record("PR3", "pi(" + g.label(e) + ") is not an orthogonal projection");
  }
  for (auto [s, t] : g.composable_pairs()) {
    ElementId st = *g.compose(s, t);
    ++report.checks_run;
    const Matrix& inv_t = rep.pi[g.inverse(t)];
    if (!approx_equal(rep.pi[s] * rep.pi[t] * inv_t, rep.pi[st] * inv_t, tau))
      report.record("PR1", "pi(s)pi(t)pi(inv t) != pi(st)pi(inv t) at (" +
                               g.label(s) + ", " + g.label(t) + ")");
    ++report.checks_run;
    const Matrix& inv_s = rep.pi[g.inverse(s)];
    if (!approx_equal(inv_s * rep.pi[s] * rep.pi[t], inv_s * rep.pi[st], tau))
      report.record("PR1-sym", "pi(inv s)pi(s)pi(t) != pi(inv s)pi(st) at (" +
                                   g.label(s) + ", " + g.label(t) + ")");
  }
  return report;
}

const Matrix& SGRep::at(const FiniteGroupoid& g, const sg::Element& el) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), el);
  if (it == elements.end() || *it != el)
    throw InvalidInput("S(G) element " + sg::to_string(g, el) +
                       " missing from representation");
  return pi[static_cast<std::size_t>(it - elements.begin())];
}

CheckReport check_sg_rep(const FiniteGroupoid& g, const SGRep& rep, double tau) {
  CheckReport report;
  std::vector<sg::Element> expected = sg::enumerate(g);
  if (rep.elements != expected || rep.pi.size() != expected.size()) {
    report.record("structure", "rep is not indexed by the enumeration of S(G)");
    return report;
  }
  for (const Matrix& m : rep.pi) {
    if (m.rows() != static_cast<Eigen::Index>(rep.dim) ||
        m.cols() != static_cast<Eigen::Index>(rep.dim)) {
      report.record("structure", "matrix dimensions differ from rep dimension");
      return report;
    }
  }

  const std::size_t count = rep.elements.size();
  for (std::size_t i = 0; i < count; ++i) {
    const sg::Element& a = rep.elements[i];
    ++report.checks_run;
    if (!approx_equal(rep.at(g, sg::star(g, a)), rep.pi[i].adjoint(), tau))
      report.record("R2", "pi(star) != pi()* at " + sg::to_string(g, a));
    if (sg::is_idempotent(g, a)) {
      ++report.checks_run;
      if (!is_projection(rep.pi[i], tau))
        report.record("R3", "pi(" + sg::to_string(g, a) +
                                ") is not an orthogonal projection");
    }
    for (std::size_t j = 0; j < count; ++j) {
      auto prod = sg::multiply(g, a, rep.elements[j]);
      if (!prod) continue;
      ++report.checks_run;
      if (!approx_equal(rep.pi[i] * rep.pi[j], rep.at(g, *prod), tau))
        report.record("R1", "pi(ab) != pi(a)pi(b) at (" + sg::to_string(g, a) +
                                ", " + sg::to_string(g, rep.elements[j]) + ")");
    }
  }
  return report;
}

PartialRep regular_partial_rep(const FiniteGroupoid& g,
                               const GroupoidPartialAction& action) {
  CheckReport check = validate_partial_action(g, action);
  if (!check.ok())
    throw InvalidInput("regular model needs a valid partial action: " +
                       check.issues.front().law);
  PartialRep rep;
  rep.dim = action.n_points;
  rep.pi.reserve(g.size());
  for (ElementId x = 0; x < g.size(); ++x) {
    Matrix m = zero(action.n_points);
    for (Point p = 0; p < action.n_points; ++p)
      if (auto q = action.maps[x](p)) m(*q, p) = 1.0;
    rep.pi.push_back(std::move(m));
  }
  return rep;
}

SGRep rep_g_to_sg(const FiniteGroupoid& g, const PartialRep& rep, double tau) {
  CheckReport check = check_partial_rep(g, rep, tau);
  if (!check.ok())
    throw InvalidInput("partial representation invalid: " +
                       check.issues.front().law + ": " +
                       check.issues.front().witness);
  SGRep out;
  out.dim = rep.dim;
  out.elements = sg::enumerate(g);
  out.pi.reserve(out.elements.size());
  for (const sg::Element& el : out.elements) {
    Matrix m = Matrix::Identity(rep.dim, rep.dim);
    for (ElementId r : el.eps) m = m * rep.pi[r] * rep.pi[g.inverse(r)];
    m = m * rep.pi[el.anchor];
    out.pi.push_back(std::move(m));
  }
  return out;
}

PartialRep rep_sg_to_g(const FiniteGroupoid& g, const SGRep& rep, double tau) {
  CheckReport check = check_sg_rep(g, rep, tau);
  if (!check.ok())
    throw InvalidInput("S(G) representation invalid: " +
                       check.issues.front().law + ": " +
                       check.issues.front().witness);
  PartialRep out;
  out.dim = rep.dim;
  out.pi.reserve(g.size());
  for (ElementId x = 0; x < g.size(); ++x)
    out.pi.push_back(rep.at(g, sg::generator(g, x)));
  return out;
}

Matrix q_matrix(const FiniteGroupoid& g, const SGRep& rep,
                const std::vector<ElementId>& subset) {
  if (subset.empty()) return Matrix::Identity(rep.dim, rep.dim);
  ElementId cls = g.range(subset.front());
  for (ElementId x : subset)
    if (g.range(x) != cls) return zero(rep.dim);
  sg::Element acc = sg::epsilon(g, subset.front());
  for (std::size_t i = 1; i < subset.size(); ++i) {
    auto next = sg::multiply(g, acc, sg::epsilon(g, subset[i]));
    acc = next.value();  // same range class, products exist
  }
  return rep.at(g, acc);
}

CStarRep rep_sg_to_cstar(const CpStarAlgebra& cp, const SGRep& rep, double tau) {
  CheckReport check = check_sg_rep(cp.ctx.groupoid, rep, tau);
  if (!check.ok())
    throw InvalidInput("S(G) representation invalid: " +
                       check.issues.front().law + ": " +
                       check.issues.front().witness);
  CStarRep out;
  out.dim = rep.dim;
  out.images.reserve(cp.dimension);
  for (const auto& mono : cp.basis) {
    Matrix q = q_matrix(cp.ctx.groupoid, rep, cp.proj.basis_set(mono.set));
    out.images.push_back(
        q * rep.at(cp.ctx.groupoid, sg::generator(cp.ctx.groupoid, mono.grp)));
  }
  return out;
}

CheckReport check_cstar_rep(const CpStarAlgebra& cp, const CStarRep& rep,
                            double tau) {
  CheckReport report;
  if (rep.images.size() != cp.dimension) {
    report.record("structure", "one matrix per basis monomial required");
    return report;
  }
  for (std::uint32_t i = 0; i < cp.dimension; ++i) {
    ++report.checks_run;
    if (!approx_equal(rep.images[cp.star_table[i]], rep.images[i].adjoint(), tau))
      report.record("star", "phi(x*) != phi(x)* at " + cp.monomial_label(i));
    for (std::uint32_t j = 0; j < cp.dimension; ++j) {
      ++report.checks_run;
      Matrix lhs = rep.images[i] * rep.images[j];
      auto k = cp.mul(i, j);
      bool ok = k ? approx_equal(lhs, rep.images[*k], tau)
                  : approx_zero(lhs, tau);
      if (!ok)
        report.record("multiplicative", "phi(xy) != phi(x)phi(y) at (" +
                                            cp.monomial_label(i) + ", " +
                                            cp.monomial_label(j) + ")");
    }
  }
  return report;
}

PartialRep rep_cstar_to_g(const CpStarAlgebra& cp, const CStarRep& rep,
                          double tau) {
  CheckReport check = check_cstar_rep(cp, rep, tau);
  if (!check.ok())
    throw InvalidInput("representation is not a star-homomorphism: " +
                       check.issues.front().law + ": " +
                       check.issues.front().witness);
  const FiniteGroupoid& g = cp.ctx.groupoid;
  PartialRep out;
  out.dim = rep.dim;
  out.pi.reserve(g.size());
  for (ElementId t = 0; t < g.size(); ++t) {
    auto set_idx = cp.proj.index_of({g.range(t), t});
    std::optional<std::uint32_t> mono;
    if (set_idx) mono = cp.index_of(t, *set_idx);
    if (!mono)
      throw InvalidInput("basis monomial for element " + g.label(t) +
                         " missing from the algebra");
    out.pi.push_back(rep.images[*mono]);
  }
  return out;
}

Matrix cstar_apply(const CpStarAlgebra& cp, const CStarRep& rep,
                   const CPElement& x) {
  Matrix out = zero(rep.dim);
  for (const auto& [g, coeff] : x.terms) {
    for (const auto& [b, c] : coeff) {
      auto mono = cp.index_of(g, b);
      if (!mono)
        throw ContextMismatch("element is not supported on the monomial basis");
      out += boost::rational_cast<double>(c) * rep.images[*mono];
    }
  }
  return out;
}

CovariantRep covariant_from_sg_rep(const CpStarAlgebra& cp, const SGRep& rep) {
  const FiniteGroupoid& g = cp.ctx.groupoid;
  CovariantRep cov;
  cov.dim = rep.dim;
  cov.pi.reserve(cp.proj.dim());
  for (BasisId i = 0; i < cp.proj.dim(); ++i)
    cov.pi.push_back(q_matrix(g, rep, cp.proj.basis_set(i)));
  cov.u.reserve(g.size());
  for (ElementId x = 0; x < g.size(); ++x)
    cov.u.push_back(rep.at(g, sg::generator(g, x)));
  return cov;
}

CheckReport check_covariant(const CpStarAlgebra& cp, const CovariantRep& cov,
                            double tau) {
  CheckReport report;
  const FiniteGroupoid& g = cp.ctx.groupoid;
  const GroupoidPartialAction& tr = cp.ctx.action;
  if (cov.pi.size() != cp.proj.dim() || cov.u.size() != g.size()) {
    report.record("structure", "pi must cover the projection basis and u the groupoid");
    return report;
  }

  // pi must be a star-representation of the projection algebra.
  BasedAlgebra alg = cp.proj.to_based_algebra();
  for (BasisId i = 0; i < alg.dim; ++i) {
    ++report.checks_run;
    if (!approx_equal(cov.pi[i], cov.pi[i].adjoint(), tau))
      report.record("pi-star", "pi(" + alg.labels[i] + ") not self-adjoint");
    for (BasisId j = 0; j < alg.dim; ++j) {
      ++report.checks_run;
      auto k = alg.mul(i, j);
      Matrix lhs = cov.pi[i] * cov.pi[j];
      bool ok = k ? approx_equal(lhs, cov.pi[*k], tau) : approx_zero(lhs, tau);
      if (!ok)
        report.record("pi-multiplicative", "pi not multiplicative at (" +
                                               alg.labels[i] + ", " +
                                               alg.labels[j] + ")");
    }
  }

  for (ElementId x = 0; x < g.size(); ++x) {
    ++report.checks_run;
    const Matrix& u = cov.u[x];
    if (!approx_equal(u * u.adjoint() * u, u, tau))
      report.record("partial-isometry", "u(" + g.label(x) + ") u* u != u");
    ++report.checks_run;
    if (!approx_equal(cov.u[g.inverse(x)], u.adjoint(), tau))
      report.record("CR3", "u(inv " + g.label(x) + ") != u(" + g.label(x) + ")*");
  }

  for (ElementId x = 0; x < g.size(); ++x) {
    const Matrix& u = cov.u[x];
    const Matrix& u_inv = cov.u[g.inverse(x)];
    for (Point b : tr.domains[g.inverse(x)]) {
      ++report.checks_run;
      Point moved = tr.maps[x](b).value();
      if (!approx_equal(u * cov.pi[b] * u_inv, cov.pi[moved], tau))
        report.record("CR1", "u pi(x) u(inv) != pi(alpha(x)) at " +
                                 alg.labels[b] + ", g = " + g.label(x));
    }
    // Absorption on the ideal attached to x.
    for (Point b : tr.domains[x]) {
      ++report.checks_run;
      if (!approx_equal(cov.pi[b] * u * u_inv, cov.pi[b], tau))
        report.record("absorption", "pi(x) u u* != pi(x) at " + alg.labels[b] +
                                        ", g = " + g.label(x));
      ++report.checks_run;
      if (!approx_equal(u * u_inv * cov.pi[b], cov.pi[b], tau))
        report.record("absorption", "u u* pi(x) != pi(x) at " + alg.labels[b] +
                                        ", g = " + g.label(x));
    }
  }

  for (ElementId s = 0; s < g.size(); ++s) {
    for (ElementId t = 0; t < g.size(); ++t) {
      auto st = g.compose(s, t);
      if (st) {
        std::vector<Point> both;
        std::set_intersection(tr.domains[s].begin(), tr.domains[s].end(),
                              tr.domains[*st].begin(), tr.domains[*st].end(),
                              std::back_inserter(both));
        for (Point b : both) {
          ++report.checks_run;
          if (!approx_equal(cov.pi[b] * cov.u[s] * cov.u[t],
                            cov.pi[b] * cov.u[*st], tau))
            report.record("CR2", "pi(x) u(s) u(t) != pi(x) u(st) at " +
                                     alg.labels[b] + ", (" + g.label(s) + ", " +
                                     g.label(t) + ")");
        }
      } else {
        // The zero branch, on the transported intersection ideal.
        std::vector<Point> mid;
        std::set_intersection(tr.domains[g.inverse(s)].begin(),
                              tr.domains[g.inverse(s)].end(),
                              tr.domains[t].begin(), tr.domains[t].end(),
                              std::back_inserter(mid));
        for (Point b : mid) {
          ++report.checks_run;
          Point moved = tr.maps[s](b).value();
          if (!approx_zero(cov.pi[moved] * cov.u[s] * cov.u[t], tau))
            report.record("CR2-zero", "pi(x) u(s) u(t) != 0 at " +
                                          alg.labels[moved] + ", (" +
                                          g.label(s) + ", " + g.label(t) + ")");
        }
      }
    }
  }
  return report;
}

}  // namespace exel
