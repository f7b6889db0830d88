#ifndef EXEL_REPRESENTATIONS_HPP_
#define EXEL_REPRESENTATIONS_HPP_

#include <Eigen/Dense>
#include <vector>

#include "exel/check_report.hpp"
#include "exel/groupoid.hpp"
#include "exel/partial_action.hpp"
#include "exel/projection_algebra.hpp"
#include "exel/semigroupoid.hpp"

namespace exel {

using Matrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTau = 1e-9;

/// Entrywise comparison with tolerance.
bool approx_equal(const Matrix& a, const Matrix& b, double tau = kDefaultTau);
bool approx_zero(const Matrix& a, double tau = kDefaultTau);

/// A candidate partial representation of the groupoid: one matrix per
/// element on a common finite-dimensional space.
struct PartialRep {
  std::size_t dim = 0;
  std::vector<Matrix> pi;  // indexed by ElementId
};

/// Laws checked:
///   (PR1) pi(s)pi(t)pi(inv t) = pi(st)pi(inv t) on composable pairs,
///   (PR2) pi(inv s) = pi(s)*,
///   (PR3) pi(e) is an orthogonal projection for identities e
///         (the finite-dimensional reading of "identity of its domain"),
/// plus the symmetric law pi(inv s)pi(s)pi(t) = pi(inv s)pi(st).
CheckReport check_partial_rep(const FiniteGroupoid& g, const PartialRep& rep,
                              double tau = kDefaultTau);

/// A candidate representation of S(G), indexed by the enumeration order.
struct SGRep {
  std::size_t dim = 0;
  std::vector<sg::Element> elements;
  std::vector<Matrix> pi;

  const Matrix& at(const FiniteGroupoid& g, const sg::Element& el) const;
};

/// (R1) multiplicativity on existing products, (R2) star, (R3) idempotents
/// map to orthogonal projections.
CheckReport check_sg_rep(const FiniteGroupoid& g, const SGRep& rep,
                         double tau = kDefaultTau);

/// 0/1 partial permutation matrices of a validated partial action on the
/// free span of its points. Throws InvalidInput on an invalid action.
PartialRep regular_partial_rep(const FiniteGroupoid& g,
                               const GroupoidPartialAction& action);

/// Extension of a partial representation to S(G): a canonical form (E, s)
/// maps to the product of pi(r)pi(inv r) over r in E times pi(s).
/// Throws InvalidInput when the input fails its checker.
SGRep rep_g_to_sg(const FiniteGroupoid& g, const PartialRep& rep,
                  double tau = kDefaultTau);

/// Restriction to the generators. Throws InvalidInput when the input fails
/// its checker.
PartialRep rep_sg_to_g(const FiniteGroupoid& g, const SGRep& rep,
                       double tau = kDefaultTau);

/// The projection matrix attached to an admissible subset: the image of the
/// product of the eps idempotents over the subset, the identity for the
/// empty set, and zero for an inadmissible subset.
Matrix q_matrix(const FiniteGroupoid& g, const SGRep& rep,
                const std::vector<ElementId>& subset);

/// A linear representation of the crossed product of the projection algebra,
/// stored by its value on every basis monomial P_E delta_t.
struct CStarRep {
  std::size_t dim = 0;
  std::vector<Matrix> images;  // indexed like CpStarAlgebra::basis
};

/// images[P_E delta_t] = Q_E pi([t]). Throws InvalidInput when the input
/// fails its checker.
CStarRep rep_sg_to_cstar(const CpStarAlgebra& cp, const SGRep& rep,
                         double tau = kDefaultTau);

/// Star-homomorphism check over all basis monomial pairs.
CheckReport check_cstar_rep(const CpStarAlgebra& cp, const CStarRep& rep,
                            double tau = kDefaultTau);

/// pi(t) = image of P_{{r(t), t}} delta_t. Throws InvalidInput when the
/// input fails the star-homomorphism check.
PartialRep rep_cstar_to_g(const CpStarAlgebra& cp, const CStarRep& rep,
                          double tau = kDefaultTau);

/// Value of the representation on a general element, coefficients cast to
/// complex scalars.
Matrix cstar_apply(const CpStarAlgebra& cp, const CStarRep& rep,
                   const CPElement& x);

/// A covariant pair for the projection-algebra dynamical system: an algebra
/// representation of the projection algebra together with one partial
/// isometry per groupoid element.
struct CovariantRep {
  std::size_t dim = 0;
  std::vector<Matrix> pi;  // indexed by projection-algebra basis id
  std::vector<Matrix> u;   // indexed by ElementId
};

/// pi(P_E) = Q_E, u(g) = rep([g]).
CovariantRep covariant_from_sg_rep(const CpStarAlgebra& cp, const SGRep& rep);

/// Checks that pi is a star-representation of the projection algebra, that
/// each u(g) is a partial isometry with u(g)* = u(inv g), the covariance
/// law u(g) pi(x) u(inv g) = pi(alpha_g(x)) on the ideal attached to inv g,
/// the composition law pi(x) u(g) u(h) = pi(x) u(gh) on composable pairs
/// (zero, on the transported ideal, for non-composable ones), and the two
/// derived absorption laws pi(x) u(g) u(inv g) = pi(x) = u(g) u(inv g) pi(x)
/// on the ideal attached to g.
CheckReport check_covariant(const CpStarAlgebra& cp, const CovariantRep& cov,
                            double tau = kDefaultTau);

}  // namespace exel

#endif  // EXEL_REPRESENTATIONS_HPP_
