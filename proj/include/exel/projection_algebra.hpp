#ifndef EXEL_PROJECTION_ALGEBRA_HPP_
#define EXEL_PROJECTION_ALGEBRA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "exel/based_algebra.hpp"
#include "exel/crossed_product.hpp"
#include "exel/groupoid.hpp"

namespace exel {

/// The commutative star-algebra spanned by projections P_E, one for each
/// finite subset E of the groupoid contained in a single range class (plus
/// the unit P for the empty set), with P_E P_F = P_{E u F} when the union
/// stays in one range class and 0 otherwise. Subsets not contained in any
/// range class are identified with zero.
class ProjectionAlgebra {
 public:
  explicit ProjectionAlgebra(const FiniteGroupoid& g);

  const FiniteGroupoid& groupoid() const { return groupoid_; }
  std::size_t dim() const { return sets_.size(); }

  /// Admissible subsets in canonical (sorted-vector) order; index 0 is the
  /// empty set, whose projection is the unit.
  const std::vector<ElementId>& basis_set(BasisId i) const { return sets_[i]; }
  BasisId unit() const { return 0; }

  /// Index of an admissible subset; std::nullopt when no range class
  /// contains it (its projection is zero).
  std::optional<BasisId> index_of(std::vector<ElementId> set) const;

  /// P_E as an element: zero when E is not admissible.
  AlgebraElement p(const std::vector<ElementId>& set) const;

  /// Bilinear product.
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

  /// Linear extension of the translation P_E -> P_{tE}, zero on basis
  /// projections whose set does not left-compose with t.
  AlgebraElement act(ElementId t, const AlgebraElement& a) const;

  BasedAlgebra to_based_algebra() const;

  /// The translation partial action on the basis: D_t is spanned by the
  /// P_E with t and r(t) in E inside X_t, and alpha_t relabels E to tE.
  GroupoidPartialAction translation_action() const;

  std::string basis_label(BasisId i) const;

 private:
  FiniteGroupoid groupoid_;
  std::vector<std::vector<ElementId>> sets_;  // sorted vectors, sorted overall
};

/// The algebraic model of the partial-groupoid star-algebra of G: the
/// crossed product of the projection algebra by the translation action,
/// with basis monomials P_E delta_t (t, r(t) in E inside X_t).
struct CpStarAlgebra {
  CpStarAlgebra(CrossedProductContext context, ProjectionAlgebra projections)
      : ctx(std::move(context)), proj(std::move(projections)) {}

  CrossedProductContext ctx;  // algebra = projection algebra, action = translation
  ProjectionAlgebra proj;

  struct Monomial {
    ElementId grp;
    BasisId set;
  };
  std::vector<Monomial> basis;
  std::size_t dimension = 0;

  /// Structure constants: basis products are single basis monomials with
  /// coefficient one, or zero.
  std::vector<std::uint32_t> product_table;  // kZeroProduct = 0
  std::vector<std::uint32_t> star_table;

  /// Multiplicative unit, when one exists.
  std::optional<CPElement> unit;

  std::optional<std::uint32_t> mul(std::uint32_t i, std::uint32_t j) const {
    std::uint32_t k = product_table[i * dimension + j];
    if (k == kZeroProduct) return std::nullopt;
    return k;
  }

  CPElement monomial(std::uint32_t i) const;
  std::optional<std::uint32_t> index_of(ElementId grp, BasisId set) const;
  std::string monomial_label(std::uint32_t i) const;
};

/// Assembles the crossed product of the projection algebra by translation:
/// basis enumeration, structure constants through the crossed-product
/// multiplication, involution, and a solved-for unit (reported as absent if
/// the linear system has no solution).
CpStarAlgebra build_cp_star_algebra(const FiniteGroupoid& g);

}  // namespace exel

#endif  // EXEL_PROJECTION_ALGEBRA_HPP_
