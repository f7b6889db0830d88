#include <doctest.h>

#include <map>
#include <set>

#include "exel/semigroupoid.hpp"
#include "exel/word_oracle.hpp"
#include "helpers.hpp"

using namespace exel;
using namespace exel::testing;

namespace {

// The oracle partition must coincide with the canonical-form arithmetic:
// two words share a class iff they normalize to the same element, and the
// classes biject onto the enumerated S(G).
void check_agreement(const FiniteGroupoid& g, std::size_t max_len) {
  sg::OracleResult oracle = sg::congruence_classes(g, max_len);
  REQUIRE(oracle.stable);

  std::map<std::uint32_t, sg::Element> rep_of_class;
  for (std::size_t i = 0; i < oracle.words.size(); ++i) {
    sg::Element canon = sg::normalize_word(g, oracle.words[i]);
    auto [it, fresh] = rep_of_class.emplace(oracle.class_of[i], canon);
    if (!fresh) CHECK(it->second == canon);
  }
  std::set<sg::Element> distinct;
  for (const auto& [cls, canon] : rep_of_class) distinct.insert(canon);
  CHECK(distinct.size() == oracle.class_count);
  CHECK(oracle.class_count == sg::enumerate(g).size());
}

}  // namespace

TEST_CASE("one-element groupoid collapses to a single class") {
  FiniteGroupoid z1 = make_z1();
  sg::OracleResult oracle = sg::congruence_classes(z1, 6);
  CHECK(oracle.class_count == 1);
  CHECK(oracle.stable);
}

TEST_CASE("Z2 words of length <= 6 fall into 3 classes") {
  FiniteGroupoid z2 = make_z2();
  sg::OracleResult oracle = sg::congruence_classes(z2, 6);
  CHECK(oracle.class_count == 3);
  CHECK(oracle.stable);
  // saturation already at length 5
  CHECK(oracle.class_count_at_len[4] == oracle.class_count_at_len[5]);
}

TEST_CASE("the two-object example groupoid has 6 classes") {
  FiniteGroupoid g1 = make_g1();
  sg::OracleResult oracle = sg::congruence_classes(g1, 6);
  CHECK(oracle.class_count == 6);
  CHECK(oracle.stable);
}

TEST_CASE("Z3 words of length <= 6 fall into 8 classes") {
  FiniteGroupoid z3 = make_z3();
  sg::OracleResult oracle = sg::congruence_classes(z3, 6);
  CHECK(oracle.class_count == 8);
  CHECK(oracle.stable);
}

TEST_CASE("oracle partition matches canonical forms") {
  check_agreement(make_z2(), 6);
  check_agreement(make_z3(), 6);
  check_agreement(make_g1(), 6);
}

TEST_CASE("idempotent words collapse as the defining relations demand") {
  FiniteGroupoid g1 = make_g1();
  ElementId arrow = g1.element("g"), back = g1.element("g^-1");
  ElementId f = g1.element("f");
  sg::OracleResult oracle = sg::congruence_classes(g1, 6);

  auto class_of = [&](const sg::Word& w) {
    for (std::size_t i = 0; i < oracle.words.size(); ++i)
      if (oracle.words[i] == w) return oracle.class_of[i];
    FAIL("word not enumerated");
    return std::uint32_t(0);
  };
  // [g][g^-1] absorbs the identity on the left and the generator pair on
  // the right.
  CHECK(class_of({arrow, back}) == class_of({f, arrow, back}));
  CHECK(class_of({arrow, back}) == class_of({arrow, back, arrow, back}));
  CHECK(class_of({arrow, back, arrow}) == class_of({arrow}));
  CHECK(class_of({arrow, back}) != class_of({f}));
}

TEST_CASE("word pool budget is enforced") {
  sg::OracleOptions opts;
  opts.max_internal_words = 10;
  CHECK_THROWS_AS(sg::congruence_classes(make_z3(), 6, opts), BudgetExceeded);
}
