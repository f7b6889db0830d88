#ifndef EXEL_GROUPOID_HPP_
#define EXEL_GROUPOID_HPP_

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exel/check_report.hpp"
#include "exel/errors.hpp"

namespace exel {

/// Index of an element inside one FiniteGroupoid. Elements are sorted by
/// label at construction, so index order equals label order and every
/// iteration over a groupoid is deterministic.
using ElementId = std::uint32_t;

inline constexpr ElementId kNoElement = std::numeric_limits<ElementId>::max();

/// Raw groupoid description as it appears in spec files. Pairs absent from
/// `comp` are non-composable.
struct GroupoidSpec {
  std::vector<std::string> elements;
  std::map<std::string, std::string> inv;
  std::vector<std::array<std::string, 3>> comp;  // rows [a, b, ab]
};

/// A finite groupoid: a set with a partially defined associative product in
/// which every element has an inverse. Immutable after construction; safe to
/// share across threads.
///
/// Composition is partial by design: compose() returns std::nullopt for a
/// non-composable pair, and downstream algebra treats that as "the product
/// does not exist" (never as a zero element).
class FiniteGroupoid {
 public:
  /// An empty groupoid; useful only as a placeholder to assign over.
  FiniteGroupoid() = default;

  /// Validates every groupoid axiom on a well-formed spec and returns the
  /// violations. Throws MalformedSpec if the spec is referentially broken.
  static CheckReport check_spec(const GroupoidSpec& spec);

  /// Builds a groupoid, throwing AxiomViolation on the first failed law.
  static FiniteGroupoid from_spec(const GroupoidSpec& spec);

  /// One-object groupoid from a group multiplication table. `table[i][j]`
  /// is the label of elements[i] * elements[j]. Throws AxiomViolation if
  /// the table is not a group.
  static FiniteGroupoid from_group_table(
      const std::vector<std::string>& elements,
      const std::vector<std::vector<std::string>>& table);

  /// The cyclic group of order n >= 1 as a one-object groupoid, with
  /// elements labelled e, a, a2, ..., a{n-1}.
  static FiniteGroupoid cyclic_group(unsigned n);

  /// Tagged disjoint union: element labels become "<part>:<label>" and
  /// composition is defined only within a part.
  static FiniteGroupoid disjoint_union(const std::vector<FiniteGroupoid>& parts);

  std::size_t size() const { return labels_.size(); }

  const std::string& label(ElementId g) const {
    require(g);
    return labels_[g];
  }

  /// Throws UnknownElement if no element has this label.
  ElementId element(const std::string& label) const;

  /// st when d(s) = r(t); std::nullopt otherwise.
  std::optional<ElementId> compose(ElementId s, ElementId t) const {
    require(s);
    require(t);
    ElementId st = comp_[s * labels_.size() + t];
    if (st == kNoElement) return std::nullopt;
    return st;
  }

  bool composable(ElementId s, ElementId t) const {
    require(s);
    require(t);
    return comp_[s * labels_.size() + t] != kNoElement;
  }

  ElementId inverse(ElementId g) const {
    require(g);
    return inv_[g];
  }

  /// d(g) = g^{-1} g.
  ElementId source(ElementId g) const {
    require(g);
    return source_[g];
  }

  /// r(g) = g g^{-1}.
  ElementId range(ElementId g) const {
    require(g);
    return range_[g];
  }

  bool is_identity(ElementId g) const {
    require(g);
    return is_identity_[g];
  }

  /// G0, sorted.
  const std::vector<ElementId>& identities() const { return identities_; }

  /// X_g = { h : r(h) = r(g) }, sorted. X_g = X_{r(g)}.
  const std::vector<ElementId>& x_class(ElementId g) const;

  /// All (s, t) with d(s) = r(t), lexicographically ordered.
  const std::vector<std::pair<ElementId, ElementId>>& composable_pairs() const {
    return composable_pairs_;
  }

 private:
  // Builds tables without axiom validation; labels must be pre-sorted.
  static FiniteGroupoid raw_build(const GroupoidSpec& spec);
  CheckReport axiom_report() const;
  void derive_structure();  // fills source_/range_/identities_/x-classes

  void require(ElementId g) const {
    if (g >= labels_.size())
      throw UnknownElement("element id " + std::to_string(g) +
                           " out of range for groupoid of size " +
                           std::to_string(labels_.size()));
  }

  std::vector<std::string> labels_;  // sorted
  std::vector<ElementId> inv_;
  std::vector<ElementId> comp_;  // n*n row-major, kNoElement = undefined
  std::vector<ElementId> source_;
  std::vector<ElementId> range_;
  std::vector<bool> is_identity_;
  std::vector<ElementId> identities_;
  std::vector<std::vector<ElementId>> x_class_by_element_;
  std::vector<std::pair<ElementId, ElementId>> composable_pairs_;
};

}  // namespace exel

#endif  // EXEL_GROUPOID_HPP_
