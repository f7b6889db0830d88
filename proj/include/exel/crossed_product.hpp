#ifndef EXEL_CROSSED_PRODUCT_HPP_
#define EXEL_CROSSED_PRODUCT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "exel/based_algebra.hpp"
#include "exel/check_report.hpp"
#include "exel/groupoid.hpp"
#include "exel/partial_action.hpp"
#include "exel/semigroupoid.hpp"

namespace exel {

/// Everything needed for crossed-product arithmetic over one partial action:
/// the groupoid, a based algebra, the partial action on its basis (points of
/// the action are basis ids), and the induced S(G)-action on the same basis.
struct CrossedProductContext {
  FiniteGroupoid groupoid;
  BasedAlgebra algebra;
  GroupoidPartialAction action;  // D[g], alpha[g] as basis permutations
  std::vector<sg::Element> sg_elements;
  SGAction sg_action;
};

/// Validates the action (throws InvalidInput on violation), derives the
/// S(G) side and packages the context.
CrossedProductContext make_crossed_context(FiniteGroupoid groupoid,
                                           BasedAlgebra algebra,
                                           GroupoidPartialAction action);

/// Function-algebra context pulled back from a set-level partial action:
/// the algebra of scalar functions on the point set, with ideals and
/// isomorphisms induced point by point.
CrossedProductContext fn_context_from_set_action(
    const FiniteGroupoid& groupoid, const GroupoidPartialAction& set_action);

/// Finitely supported sum of a_g delta_g with a_g supported inside D[g].
struct CPElement {
  std::map<ElementId, AlgebraElement> terms;
  friend bool operator==(const CPElement&, const CPElement&) = default;
};

/// Finitely supported sum of a_s delta_s over S(G), a_s inside E[s].
struct LElement {
  std::map<sg::Element, AlgebraElement> terms;
  friend bool operator==(const LElement&, const LElement&) = default;
};

/// a delta_g. Throws ContextMismatch unless the coefficient is supported in
/// D[g].
CPElement cp_monomial(const CrossedProductContext& ctx, ElementId grp,
                      AlgebraElement coeff);
CPElement cp_add(CPElement x, const CPElement& y, const Rational& scale = 1);

/// Twisted product: monomials with non-composable indices contribute zero,
/// otherwise (a delta_g)(b delta_h) = alpha_g(alpha_{g^{-1}}(a) b) delta_{gh}.
CPElement cp_multiply(const CrossedProductContext& ctx, const CPElement& x,
                      const CPElement& y);

/// Involution (a delta_g)* = alpha_{g^{-1}}(a) delta_{g^{-1}} (coefficients
/// are rational, so coefficient conjugation is the identity).
CPElement cp_star(const CrossedProductContext& ctx, const CPElement& x);

LElement l_monomial(const CrossedProductContext& ctx, const sg::Element& s,
                    AlgebraElement coeff);
LElement l_add(LElement x, const LElement& y, const Rational& scale = 1);
LElement l_multiply(const CrossedProductContext& ctx, const LElement& x,
                    const LElement& y);
LElement l_star(const CrossedProductContext& ctx, const LElement& x);

/// Embeds a crossed-product element into L, supported on generators.
LElement l_lift(const CrossedProductContext& ctx, const CPElement& x);

/// Canonical representative of x + N: every monomial a delta_s is pushed to
/// a delta_{[degree(s)]} (legal because s <= [degree(s)] and the E-sets are
/// monotone), then coefficients are collected generator by generator.
CPElement quotient_normalize(const CrossedProductContext& ctx, const LElement& x);

/// Multiplication of quotient classes through representatives.
CPElement quotient_multiply(const CrossedProductContext& ctx, const CPElement& x,
                            const CPElement& y);
CPElement quotient_star(const CrossedProductContext& ctx, const CPElement& x);

struct AssociativityPlan {
  /// Check all basis triples when their number is at most this; otherwise
  /// sample `trials` triples with the seeded generator.
  std::size_t exhaustive_cap = 200000;
  std::size_t trials = 2000;
  std::uint64_t seed = 0;
};

/// (xy)z = x(yz) over basis monomial triples a delta_g.
CheckReport check_associativity(const CrossedProductContext& ctx,
                                const AssociativityPlan& plan = {});

struct IsoReport {
  CheckReport report;
  std::size_t dim_crossed_product = 0;  // sum over g of |D[g]|
  std::size_t dim_l = 0;                // sum over s of |E[s]|
  std::size_t rank_relations = 0;       // rank of the relation module N
  std::size_t dim_quotient = 0;         // dim_l - rank_relations
};

/// Verifies that a delta_g <-> class of a delta_{[g]} are mutually inverse
/// star-algebra isomorphisms between the groupoid crossed product and L/N:
/// multiplicativity both ways on basis monomials, star preservation,
/// bijectivity of the basis map, soundness of the relation module, and the
/// dimension bookkeeping (with dim L/N computed independently by exact
/// Gaussian elimination on the relation generators).
IsoReport iso_roundtrip(const CrossedProductContext& ctx);

std::string cp_to_string(const CrossedProductContext& ctx, const CPElement& x);

}  // namespace exel

#endif  // EXEL_CROSSED_PRODUCT_HPP_
