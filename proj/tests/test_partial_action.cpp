#include <doctest.h>

#include "exel/partial_action.hpp"
#include "helpers.hpp"

using namespace exel;
using namespace exel::testing;

TEST_CASE("the Z2 example action is valid") {
  FiniteGroupoid z2 = make_z2();
  GroupoidPartialAction a = z2_example_action(z2);
  CheckReport report = validate_partial_action(z2, a);
  CHECK(report.ok());
}

TEST_CASE("an image escaping its domain set is reported") {
  FiniteGroupoid z2 = make_z2();
  GroupoidPartialAction a = z2_example_action(z2);
  a.maps[z2.element("a")] = PartialBijection::from_pairs(2, {{0, 1}});
  CheckReport report = validate_partial_action(z2, a);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.law_ok("structure"));
}

TEST_CASE("global actions validate and have full domains") {
  FiniteGroupoid z2 = make_z2();
  GroupoidPartialAction a;
  a.n_points = 2;
  a.domains = {{0, 1}, {0, 1}};  // labels sorted: a, e
  a.maps = {PartialBijection::from_pairs(2, {{0, 1}, {1, 0}}),
            PartialBijection::identity(2, {0, 1})};
  CHECK(validate_partial_action(z2, a).ok());
  for (ElementId x = 0; x < z2.size(); ++x)
    CHECK(a.domains[x] == a.domains[z2.range(x)]);
}

TEST_CASE("inverses and domain transport laws hold on valid instances") {
  FiniteGroupoid z2 = make_z2();
  FiniteGroupoid g1 = make_g1();
  std::vector<std::pair<FiniteGroupoid, GroupoidPartialAction>> instances;
  instances.emplace_back(z2, z2_example_action(z2));
  instances.emplace_back(g1, g1_example_action(g1));

  for (const auto& [g, a] : instances) {
    REQUIRE(validate_partial_action(g, a).ok());
    for (ElementId x = 0; x < g.size(); ++x)
      CHECK(a.maps[x].inverse() == a.maps[g.inverse(x)]);
    for (auto [s, t] : g.composable_pairs()) {
      // alpha(inv t)(D_t n D_{inv s}) = D_{inv t} n D_{inv st}
      std::vector<Point> mid;
      std::set_intersection(a.domains[t].begin(), a.domains[t].end(),
                            a.domains[g.inverse(s)].begin(),
                            a.domains[g.inverse(s)].end(),
                            std::back_inserter(mid));
      std::vector<Point> lhs;
      for (Point p : mid)
        if (auto q = a.maps[g.inverse(t)](p)) lhs.push_back(*q);
      std::sort(lhs.begin(), lhs.end());
      ElementId st = *g.compose(s, t);
      std::vector<Point> rhs;
      std::set_intersection(a.domains[g.inverse(t)].begin(),
                            a.domains[g.inverse(t)].end(),
                            a.domains[g.inverse(st)].begin(),
                            a.domains[g.inverse(st)].end(),
                            std::back_inserter(rhs));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("lemma1 characterization accepts the examples and rebuilds domains") {
  FiniteGroupoid z2 = make_z2();
  GroupoidPartialAction a = z2_example_action(z2);
  Lemma1Result res = lemma1_characterize(z2, a.n_points, a.maps);
  CHECK(res.is_action);
  REQUIRE(res.action.has_value());
  CHECK(res.action->domains == a.domains);

  // an identity that moves points is rejected
  GroupoidPartialAction bad = a;
  bad.maps[z2.element("e")] = PartialBijection::from_pairs(2, {{0, 1}, {1, 0}});
  CHECK_FALSE(lemma1_characterize(z2, bad.n_points, bad.maps).is_action);
}

TEST_CASE("lemma1 agrees with the axiom validator on the exhaustive family") {
  // |X| = 2 over Z2: every total family alpha : G -> I(X).
  FiniteGroupoid z2 = make_z2();
  std::size_t valid_count = 0;
  for_each_family(z2.size(), 2, [&](const std::vector<PartialBijection>& family) {
    Lemma1Result lemma = lemma1_characterize(z2, 2, family);

    GroupoidPartialAction candidate;
    candidate.n_points = 2;
    candidate.maps = family;
    candidate.domains.resize(z2.size());
    for (ElementId x = 0; x < z2.size(); ++x)
      candidate.domains[x] = family[x].image();
    bool valid = validate_partial_action(z2, candidate).ok();

    CHECK(lemma.is_action == valid);
    if (valid) ++valid_count;
  });
  CHECK(valid_count > 0);
}

TEST_CASE("induced S(G)-actions validate and match the known values") {
  FiniteGroupoid z2 = make_z2();
  GroupoidPartialAction a = z2_example_action(z2);
  SGAction b = partial_to_sg(z2, a);
  CHECK(validate_sg_action(z2, b).ok());

  ElementId x = z2.element("a");
  std::size_t gen_idx = b.index_of(z2, sg::generator(z2, x));
  std::size_t eps_idx = b.index_of(z2, sg::epsilon(z2, x));
  CHECK(b.maps[gen_idx] == a.maps[x]);
  CHECK(b.maps[eps_idx] == PartialBijection::identity(2, {0}));
  CHECK(b.domains[eps_idx] == std::vector<Point>{0});
  // E([g]) = E(eps_g) for every generator
  for (ElementId t = 0; t < z2.size(); ++t)
    CHECK(b.domains[b.index_of(z2, sg::generator(z2, t))] ==
          b.domains[b.index_of(z2, sg::epsilon(z2, t))]);
}

TEST_CASE("A1 violations are caught") {
  FiniteGroupoid z2 = make_z2();
  SGAction b = partial_to_sg(z2, z2_example_action(z2));
  std::size_t eps_idx = b.index_of(z2, sg::epsilon(z2, z2.element("a")));
  b.maps[eps_idx] = PartialBijection(2);  // empty map instead of the identity
  CheckReport report = validate_sg_action(z2, b);
  CHECK_FALSE(report.ok());
}

TEST_CASE("identity groupoid induces identity S-actions") {
  FiniteGroupoid z1 = make_z1();
  GroupoidPartialAction a;
  a.n_points = 2;
  a.domains = {{0, 1}};
  a.maps = {PartialBijection::identity(2, {0, 1})};
  SGAction b = partial_to_sg(z1, a);
  CHECK(b.maps[0] == PartialBijection::identity(2, {0, 1}));
}

TEST_CASE("the trivial action is well-defined") {
  FiniteGroupoid z2 = make_z2();
  GroupoidPartialAction a;
  a.n_points = 2;
  a.domains.assign(z2.size(), {});
  a.maps.assign(z2.size(), PartialBijection(2));
  ElementId e = z2.element("e");
  a.domains[e] = {0, 1};
  a.maps[e] = PartialBijection::identity(2, {0, 1});
  CHECK(validate_partial_action(z2, a).ok());
  SGAction b = partial_to_sg(z2, a);
  CHECK(validate_sg_action(z2, b).ok());
}

TEST_CASE("round trips are identities on the example instances") {
  FiniteGroupoid z2 = make_z2();
  FiniteGroupoid g1 = make_g1();
  std::vector<std::pair<FiniteGroupoid, GroupoidPartialAction>> instances;
  instances.emplace_back(z2, z2_example_action(z2));
  instances.emplace_back(g1, g1_example_action(g1));

  for (const auto& [g, a] : instances) {
    SGAction b = partial_to_sg(g, a);
    GroupoidPartialAction back = sg_to_partial(g, b);
    CHECK(back.domains == a.domains);
    CHECK(back.maps == a.maps);

    SGAction again = partial_to_sg(g, back);
    CHECK(again.domains == b.domains);
    CHECK(again.maps == b.maps);
  }
}

TEST_CASE("invalid inputs to the correspondence throw") {
  FiniteGroupoid z2 = make_z2();
  GroupoidPartialAction a = z2_example_action(z2);
  a.maps[z2.element("a")] = PartialBijection::from_pairs(2, {{0, 1}});
  CHECK_THROWS_AS(partial_to_sg(z2, a), InvalidInput);
}

TEST_CASE("exhaustive |X|=2 correspondence for Z2") {
  FiniteGroupoid z2 = make_z2();

  // all valid partial actions
  std::vector<GroupoidPartialAction> valid_actions;
  for_each_family(z2.size(), 2, [&](const std::vector<PartialBijection>& family) {
    GroupoidPartialAction candidate;
    candidate.n_points = 2;
    candidate.maps = family;
    candidate.domains.resize(z2.size());
    for (ElementId x = 0; x < z2.size(); ++x)
      candidate.domains[x] = family[x].image();
    if (validate_partial_action(z2, candidate).ok())
      valid_actions.push_back(std::move(candidate));
  });

  // all valid S(G)-actions, enumerated independently
  std::vector<sg::Element> elements = sg::enumerate(z2);
  std::size_t valid_sg = 0;
  for_each_family(elements.size(), 2,
                  [&](const std::vector<PartialBijection>& family) {
                    SGAction candidate;
                    candidate.n_points = 2;
                    candidate.elements = elements;
                    candidate.maps = family;
                    candidate.domains.resize(elements.size());
                    for (std::size_t i = 0; i < elements.size(); ++i)
                      candidate.domains[i] = family[i].image();
                    if (validate_sg_action(z2, candidate).ok()) ++valid_sg;
                  });

  CHECK(valid_actions.size() == valid_sg);
  for (const auto& a : valid_actions) {
    SGAction b = partial_to_sg(z2, a);
    REQUIRE(validate_sg_action(z2, b).ok());
    GroupoidPartialAction back = sg_to_partial(z2, b);
    CHECK(back.domains == a.domains);
    CHECK(back.maps == a.maps);
  }
}
