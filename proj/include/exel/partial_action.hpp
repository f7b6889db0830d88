#ifndef EXEL_PARTIAL_ACTION_HPP_
#define EXEL_PARTIAL_ACTION_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "exel/check_report.hpp"
#include "exel/groupoid.hpp"
#include "exel/semigroupoid.hpp"

namespace exel {

using Point = std::uint32_t;
inline constexpr Point kNoPoint = std::numeric_limits<Point>::max();

/// An injective partial map of {0, ..., n-1} into itself.
class PartialBijection {
 public:
  PartialBijection() = default;
  explicit PartialBijection(std::size_t n) : map_(n, kNoPoint) {}

  static PartialBijection identity(std::size_t n, const std::vector<Point>& dom);
  /// Throws InvalidInput on out-of-range points or a non-injective graph.
  static PartialBijection from_pairs(
      std::size_t n, const std::vector<std::pair<Point, Point>>& pairs);

  std::size_t universe_size() const { return map_.size(); }

  std::optional<Point> operator()(Point x) const {
    if (x >= map_.size() || map_[x] == kNoPoint) return std::nullopt;
    return map_[x];
  }

  bool defined_at(Point x) const { return x < map_.size() && map_[x] != kNoPoint; }

  /// this after inner, on the maximal domain: defined at x iff inner is
  /// defined at x and this is defined at inner(x).
  PartialBijection after(const PartialBijection& inner) const;

  PartialBijection inverse() const;

  std::vector<Point> domain() const;
  std::vector<Point> image() const;

  friend bool operator==(const PartialBijection&, const PartialBijection&) = default;

 private:
  std::vector<Point> map_;
};

/// Every injective partial map on an n-point set, deterministic order.
/// Intended for exhaustive desk-scale searches (n <= 4 or so).
std::vector<PartialBijection> all_partial_bijections(std::size_t n);

/// A candidate partial action of a groupoid on {0, ..., n_points-1}:
/// subsets D[g] and partial bijections alpha[g] : D[inv g] -> D[g], both
/// indexed by ElementId. Plain data; validity is a checked property.
struct GroupoidPartialAction {
  std::size_t n_points = 0;
  std::vector<std::vector<Point>> domains;  // D[g], sorted
  std::vector<PartialBijection> maps;       // alpha[g]
};

/// A candidate action of S(G) on a finite set: subsets E and bijections
/// beta indexed by the enumeration of S(G).
struct SGAction {
  std::size_t n_points = 0;
  std::vector<sg::Element> elements;        // sorted as sg::enumerate
  std::vector<std::vector<Point>> domains;  // E[i], sorted
  std::vector<PartialBijection> maps;       // beta[i]

  std::size_t index_of(const FiniteGroupoid& g, const sg::Element& el) const;
};

/// Checks the partial-action axioms and their primed variants, plus the
/// structural requirements (alpha[g] maps D[inv g] onto D[g], and D[g] lies
/// inside D[r(g)]). Also cross-checks that the two axiom systems agree on
/// this instance. Violations are reported, never thrown.
CheckReport validate_partial_action(const FiniteGroupoid& g,
                                    const GroupoidPartialAction& action);

/// Checks the inverse-semigroupoid action axioms (identity on idempotent
/// domains; composition law), structure (E[s] = E[s s*], beta[s] maps E[s*]
/// onto E[s]) and the derived laws beta[s*] = beta[s]^{-1},
/// beta[s](E[t]) = E[st] and E[st] inside E[s].
CheckReport validate_sg_action(const FiniteGroupoid& g, const SGAction& action);

struct Lemma1Result {
  bool is_action = false;
  CheckReport report;
  /// Present iff is_action; domains reconstructed as D[t] = Im(alpha[t]).
  std::optional<GroupoidPartialAction> action;
};

/// Characterization of partial actions by composition identities alone:
/// a total family alpha : G -> I(X) is a partial action iff
///   (i)  alpha[s] alpha[t] alpha[inv t] = alpha[st] alpha[inv t] on G^2, and
///   (ii) alpha[e] is the identity of its domain for identities e.
/// When it is, the symmetric law alpha[inv s] alpha[s] alpha[t] =
/// alpha[inv s] alpha[st] is asserted as well.
Lemma1Result lemma1_characterize(const FiniteGroupoid& g, std::size_t n_points,
                                 const std::vector<PartialBijection>& alpha);

/// The S(G)-action induced by a partial action: beta on a canonical form
/// (E, s) is the composite of alpha[r] alpha[inv r] over r in E applied
/// after alpha[s], with E-sets the images. Throws InvalidInput if the input
/// fails validation.
SGAction partial_to_sg(const FiniteGroupoid& g, const GroupoidPartialAction& a);

/// Restriction of an S(G)-action to the generators. Throws InvalidInput if
/// the input fails validation.
GroupoidPartialAction sg_to_partial(const FiniteGroupoid& g, const SGAction& b);

}  // namespace exel

#endif  // EXEL_PARTIAL_ACTION_HPP_
