#ifndef EXEL_SEMIGROUPOID_HPP_
#define EXEL_SEMIGROUPOID_HPP_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "exel/groupoid.hpp"

namespace exel::sg {

/// Canonical form of an element of the Exel inverse semigroupoid S(G):
/// a product of distinct commuting idempotents eps_{r} followed by one
/// generator [anchor], stored as the sorted set {r} plus the anchor.
///
/// Invariants (relative to the owning groupoid):
///   - every r in eps lies in the same range class as anchor,
///   - no r in eps is an identity or equals anchor,
///   - eps is strictly increasing.
/// Equality of S(G) elements is structural equality of canonical forms.
struct Element {
  std::vector<ElementId> eps;
  ElementId anchor = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

/// A word in the free semigroupoid on the generators [g].
using Word = std::vector<ElementId>;

/// Throws MixedGroupoids unless `a` satisfies every canonical-form invariant
/// with respect to `g`.
void check_element(const FiniteGroupoid& g, const Element& a);

/// The generator [x].
Element generator(const FiniteGroupoid& g, ElementId x);

/// eps_t = [t][t^{-1}]. Collapses to the bare generator [t] when t is an
/// identity, since [e][e] = [e].
Element epsilon(const FiniteGroupoid& g, ElementId t);

/// Product in S(G); std::nullopt when the degrees do not compose in G.
std::optional<Element> multiply(const FiniteGroupoid& g, const Element& a,
                                const Element& b);

/// The involutive anti-automorphism determined by [t]* = [t^{-1}].
Element star(const FiniteGroupoid& g, const Element& a);

/// The homomorphism S(G) -> G collapsing each generator to its element.
inline ElementId degree(const Element& a) { return a.anchor; }

/// True iff the canonical form is a pure product of eps's, i.e. the anchor
/// is an identity.
bool is_idempotent(const FiniteGroupoid& g, const Element& a);

/// Natural partial order: a <= b iff a = b i for some idempotent i, which
/// on canonical forms means equal anchors and eps(b) contained in eps(a).
bool leq(const FiniteGroupoid& g, const Element& a, const Element& b);

/// True iff the product exists, i.e. the degrees compose in G.
bool exists_product(const FiniteGroupoid& g, const Element& a, const Element& b);

/// Folds a non-empty word of generators into its canonical form.
/// Throws NonComposableWord when adjacent letters do not compose.
Element normalize_word(const FiniteGroupoid& g, const Word& word);

/// Applies the set-valued homomorphism value of `a` to a finite range-closed
/// subset, letter by letter along the canonical word of `a`. Throws
/// NotRClosed if the input subset is not range-closed.
std::vector<ElementId> lambda_apply(const FiniteGroupoid& g, const Element& a,
                                    std::vector<ElementId> subset);

/// All of S(G), sorted. Computed two independent ways -- combinatorially
/// from the canonical-form shape, and as the closure of the generators under
/// multiply and star -- which must agree.
std::vector<Element> enumerate(const FiniteGroupoid& g);

/// "eps(r1)eps(r2)[s]" with element labels, "[s]" when eps is empty.
std::string to_string(const FiniteGroupoid& g, const Element& a);

}  // namespace exel::sg

#endif  // EXEL_SEMIGROUPOID_HPP_
