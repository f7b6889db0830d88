#ifndef EXEL_TESTS_HELPERS_HPP_
#define EXEL_TESTS_HELPERS_HPP_

#include <vector>

#include "exel/groupoid.hpp"
#include "exel/partial_action.hpp"

namespace exel::testing {

inline FiniteGroupoid make_z1() { return FiniteGroupoid::cyclic_group(1); }
inline FiniteGroupoid make_z2() { return FiniteGroupoid::cyclic_group(2); }
inline FiniteGroupoid make_z3() { return FiniteGroupoid::cyclic_group(3); }

/// The four-element groupoid {g, g^{-1}, e, f} with two objects e = d(g),
/// f = r(g) and a single arrow between them.
inline GroupoidSpec g1_spec() {
  GroupoidSpec spec;
  spec.elements = {"g", "g^-1", "e", "f"};
  spec.inv = {{"g", "g^-1"}, {"g^-1", "g"}, {"e", "e"}, {"f", "f"}};
  spec.comp = {{"g", "g^-1", "f"}, {"g^-1", "g", "e"}, {"e", "e", "e"},
               {"f", "f", "f"},   {"g", "e", "g"},    {"e", "g^-1", "g^-1"},
               {"g^-1", "f", "g^-1"}, {"f", "g", "g"}};
  return spec;
}

inline FiniteGroupoid make_g1() { return FiniteGroupoid::from_spec(g1_spec()); }

/// X = {0, 1}, D_e = X, D_a = {0}, alpha_a the identity of {0}.
inline GroupoidPartialAction z2_example_action(const FiniteGroupoid& z2) {
  GroupoidPartialAction a;
  a.n_points = 2;
  a.domains.assign(z2.size(), {});
  a.maps.assign(z2.size(), PartialBijection(2));
  ElementId e = z2.element("e"), x = z2.element("a");
  a.domains[e] = {0, 1};
  a.domains[x] = {0};
  a.maps[e] = PartialBijection::identity(2, {0, 1});
  a.maps[x] = PartialBijection::identity(2, {0});
  return a;
}

/// A three-point partial action of the G1 groupoid: e acts on {0, 1},
/// f on {2}, and g carries 0 to 2.
inline GroupoidPartialAction g1_example_action(const FiniteGroupoid& g1) {
  GroupoidPartialAction a;
  a.n_points = 3;
  a.domains.assign(g1.size(), {});
  a.maps.assign(g1.size(), PartialBijection(3));
  ElementId e = g1.element("e"), f = g1.element("f");
  ElementId arrow = g1.element("g"), back = g1.element("g^-1");
  a.domains[e] = {0, 1};
  a.domains[f] = {2};
  a.domains[arrow] = {2};
  a.domains[back] = {0};
  a.maps[e] = PartialBijection::identity(3, {0, 1});
  a.maps[f] = PartialBijection::identity(3, {2});
  a.maps[arrow] = PartialBijection::from_pairs(3, {{0, 2}});
  a.maps[back] = PartialBijection::from_pairs(3, {{2, 0}});
  return a;
}

/// Visits every total assignment of `slots` partial bijections of an
/// n-point set; the raw material of the exhaustive action searches.
template <class Fn>
void for_each_family(std::size_t slots, std::size_t n_points, Fn&& fn) {
  std::vector<PartialBijection> pool = all_partial_bijections(n_points);
  std::vector<std::size_t> pick(slots, 0);
  std::vector<PartialBijection> family(slots, PartialBijection(n_points));
  const std::vector<PartialBijection>& view = family;
  while (true) {
    for (std::size_t i = 0; i < slots; ++i) family[i] = pool[pick[i]];
    fn(view);
    std::size_t i = 0;
    for (; i < slots; ++i) {
      if (++pick[i] < pool.size()) break;
      pick[i] = 0;
    }
    if (i == slots) break;
  }
}

}  // namespace exel::testing

#endif  // EXEL_TESTS_HELPERS_HPP_
