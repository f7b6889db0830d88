#include "exel/partial_action.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace exel {

namespace {

std::vector<Point> intersect(const std::vector<Point>& a,
                             const std::vector<Point>& b) {
  std::vector<Point> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool subset(const std::vector<Point>& a, const std::vector<Point>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string points_to_string(const std::vector<Point>& pts) {
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(pts[i]);
  }
  return out + "}";
}

// Pointwise image of the subset under a partial map, restricted to where the
// map is defined.
std::vector<Point> apply_to_set(const PartialBijection& f,
                                const std::vector<Point>& pts) {
  std::vector<Point> out;
  for (Point x : pts)
    if (auto y = f(x)) out.push_back(*y);
  std::sort(out.begin(), out.end());
  return out;
}

// Preimage of the subset under f.
std::vector<Point> preimage(const PartialBijection& f,
                            const std::vector<Point>& pts) {
  std::vector<Point> out;
  for (Point x = 0; x < f.universe_size(); ++x) {
    auto y = f(x);
    if (y && std::binary_search(pts.begin(), pts.end(), *y)) out.push_back(x);
  }
  return out;
}

}  // namespace

PartialBijection PartialBijection::identity(std::size_t n,
                                            const std::vector<Point>& dom) {
  PartialBijection f(n);
  for (Point x : dom) {
    if (x >= n) throw InvalidInput("identity domain point out of range");
    f.map_[x] = x;
  }
  return f;
}

PartialBijection PartialBijection::from_pairs(
    std::size_t n, const std::vector<std::pair<Point, Point>>& pairs) {
  PartialBijection f(n);
  std::vector<bool> hit(n, false);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n)
      throw InvalidInput("partial bijection pair out of range");
    if (f.map_[x] != kNoPoint)
      throw InvalidInput("partial bijection defined twice at " +
                         std::to_string(x));
    if (hit[y])
      throw InvalidInput("partial bijection not injective at target " +
                         std::to_string(y));
    f.map_[x] = y;
    hit[y] = true;
  }
  return f;
}

PartialBijection PartialBijection::after(const PartialBijection& inner) const {
  if (universe_size() != inner.universe_size())
    throw InvalidInput("composed partial bijections must share a universe");
  PartialBijection f(map_.size());
  for (Point x = 0; x < map_.size(); ++x) {
    Point mid = inner.map_[x];
    if (mid == kNoPoint) continue;
    f.map_[x] = map_[mid];
  }
  return f;
}

PartialBijection PartialBijection::inverse() const {
  PartialBijection f(map_.size());
  for (Point x = 0; x < map_.size(); ++x)
    if (map_[x] != kNoPoint) f.map_[map_[x]] = x;
  return f;
}

std::vector<Point> PartialBijection::domain() const {
  std::vector<Point> out;
  for (Point x = 0; x < map_.size(); ++x)
    if (map_[x] != kNoPoint) out.push_back(x);
  return out;
}

std::vector<Point> PartialBijection::image() const {
  std::vector<Point> out;
  for (Point x = 0; x < map_.size(); ++x)
    if (map_[x] != kNoPoint) out.push_back(map_[x]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartialBijection> all_partial_bijections(std::size_t n) {
  std::vector<PartialBijection> out;
  std::vector<std::pair<Point, Point>> pairs;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, Point x) -> void {
    if (x == n) {
      out.push_back(PartialBijection::from_pairs(n, pairs));
      return;
    }
    self(self, x + 1);  // undefined at x
    for (Point y = 0; y < n; ++y) {
      if (used[y]) continue;
      used[y] = true;
      pairs.emplace_back(x, y);
      self(self, x + 1);
      pairs.pop_back();
      used[y] = false;
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t SGAction::index_of(const FiniteGroupoid& g,
                               const sg::Element& el) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), el);
  if (it == elements.end() || *it != el)
    throw InvalidInput("S(G) element " + sg::to_string(g, el) +
                       " missing from action");
  return static_cast<std::size_t>(it - elements.begin());
}

CheckReport validate_partial_action(const FiniteGroupoid& g,
                                    const GroupoidPartialAction& a) {
  CheckReport report;
  const std::size_t n = g.size();
  if (a.domains.size() != n || a.maps.size() != n) {
    report.record("structure", "action must assign D and alpha to every element");
    return report;
  }
  for (ElementId x = 0; x < n; ++x) {
    if (a.maps[x].universe_size() != a.n_points) {
      report.record("structure", "alpha(" + g.label(x) +
                                     ") lives on the wrong point set");
      return report;
    }
    if (!std::is_sorted(a.domains[x].begin(), a.domains[x].end()) ||
        (a.domains[x].size() &&
         a.domains[x].back() >= a.n_points)) {
      report.record("structure", "D(" + g.label(x) + ") is not a sorted "
                                     "subset of the point set");
      return report;
    }
  }

  bool structure_ok = true;
  for (ElementId x = 0; x < n; ++x) {
    ++report.checks_run;
    if (a.maps[x].domain() != a.domains[g.inverse(x)]) {
      report.record("structure", "dom alpha(" + g.label(x) + ") != D(" +
                                     g.label(g.inverse(x)) + ")");
      structure_ok = false;
    }
    if (a.maps[x].image() != a.domains[x]) {
      report.record("structure",
                    "im alpha(" + g.label(x) + ") != D(" + g.label(x) + ")");
      structure_ok = false;
    }
    if (!subset(a.domains[x], a.domains[g.range(x)])) {
      report.record("structure", "D(" + g.label(x) + ") not inside D(r(" +
                                     g.label(x) + "))");
      structure_ok = false;
    }
  }

  bool pa1 = true, pa23 = true, primed23 = true;
  for (ElementId e : g.identities()) {
    ++report.checks_run;
    if (a.maps[e] != PartialBijection::identity(a.n_points, a.domains[e])) {
      report.record("PA1", "alpha(" + g.label(e) +
                               ") is not the identity of D(" + g.label(e) + ")");
      pa1 = false;
    }
  }

  for (auto [s, t] : g.composable_pairs()) {
    ElementId st = *g.compose(s, t);
    std::string pair = "(" + g.label(s) + ", " + g.label(t) + ")";
    const auto& alpha_s = a.maps[s];
    const auto& alpha_t = a.maps[t];

    std::vector<Point> mid = intersect(a.domains[g.inverse(s)], a.domains[t]);
    std::vector<Point> pre = preimage(alpha_t, mid);

    ++report.checks_run;
    if (!subset(pre, a.domains[g.inverse(st)])) {
      report.record("PA2", "alpha(" + g.label(t) + ")^{-1}(D(inv " +
                               g.label(s) + ") n D(" + g.label(t) +
                               ")) escapes D(inv " + g.label(st) + ") at " + pair);
      pa23 = false;
    }
    for (Point x : pre) {
      ++report.checks_run;
      auto lhs = alpha_s(*alpha_t(x));
      auto rhs = a.maps[st](x);
      if (!lhs || !rhs || *lhs != *rhs) {
        report.record("PA3", "alpha(" + g.label(s) + ")alpha(" + g.label(t) +
                                 ") != alpha(" + g.label(st) + ") at point " +
                                 std::to_string(x));
        pa23 = false;
      }
    }

    // Primed variants.
    ++report.checks_run;
    std::vector<Point> lhs_set = apply_to_set(alpha_s, mid);
    std::vector<Point> rhs_set = intersect(a.domains[s], a.domains[st]);
    if (lhs_set != rhs_set) {
      report.record("PA2'", "alpha(" + g.label(s) + ")(D(inv " + g.label(s) +
                                ") n D(" + g.label(t) + ")) = " +
                                points_to_string(lhs_set) + " != " +
                                points_to_string(rhs_set) + " at " + pair);
      primed23 = false;
    }
    std::vector<Point> dom_primed =
        intersect(a.domains[g.inverse(t)], a.domains[g.inverse(st)]);
    for (Point x : dom_primed) {
      ++report.checks_run;
      auto ax = alpha_t(x);
      std::optional<Point> lhs;
      if (ax) lhs = alpha_s(*ax);
      auto rhs = a.maps[st](x);
      if (!lhs || !rhs || *lhs != *rhs) {
        report.record("PA3'", "composite and alpha(" + g.label(st) +
                                  ") differ at point " + std::to_string(x) +
                                  " for " + pair);
        primed23 = false;
      }
    }
  }

  // The two axiom systems characterize the same families; disagreement on a
  // structurally sound instance would be a library defect.
  if (structure_ok && (pa1 && pa23) != (pa1 && primed23)) {
    report.record("PA-equivalence",
                  "(PA1)(PA2)(PA3) and (PA1)(PA2')(PA3') disagree");
  }
  return report;
}

Lemma1Result lemma1_characterize(const FiniteGroupoid& g, std::size_t n_points,
                                 const std::vector<PartialBijection>& alpha) {
  Lemma1Result result;
  if (alpha.size() != g.size())
    throw InvalidInput("lemma1_characterize needs one map per element");
  for (const auto& f : alpha)
    if (f.universe_size() != n_points)
      throw InvalidInput("maps must share one point universe");

  for (auto [s, t] : g.composable_pairs()) {
    ++result.report.checks_run;
    ElementId st = *g.compose(s, t);
    const auto& ainv_t = alpha[g.inverse(t)];
    if (alpha[s].after(alpha[t].after(ainv_t)) != alpha[st].after(ainv_t))
      result.report.record(
          "L1-i", "alpha(s)alpha(t)alpha(inv t) != alpha(st)alpha(inv t) at (" +
                      g.label(s) + ", " + g.label(t) + ")");
  }
  for (ElementId e : g.identities()) {
    ++result.report.checks_run;
    if (alpha[e] !=
        PartialBijection::identity(n_points, alpha[e].domain()))
      result.report.record("L1-ii", "alpha(" + g.label(e) +
                                        ") is not an identity map");
  }
  result.is_action = result.report.ok();
  if (!result.is_action) return result;

  GroupoidPartialAction action;
  action.n_points = n_points;
  action.maps = alpha;
  action.domains.resize(g.size());
  for (ElementId x = 0; x < g.size(); ++x)
    action.domains[x] = alpha[x].image();
  result.action = std::move(action);

  // Symmetric composition law, guaranteed once (i) and (ii) hold.
  for (auto [s, t] : g.composable_pairs()) {
    ++result.report.checks_run;
    ElementId st = *g.compose(s, t);
    const auto& ainv_s = alpha[g.inverse(s)];
    if (ainv_s.after(alpha[s].after(alpha[t])) != ainv_s.after(alpha[st]))
      result.report.record(
          "L1-iii", "alpha(inv s)alpha(s)alpha(t) != alpha(inv s)alpha(st) at (" +
                        g.label(s) + ", " + g.label(t) + ")");
  }
  result.is_action = result.report.ok();
  return result;
}

SGAction partial_to_sg(const FiniteGroupoid& g, const GroupoidPartialAction& a) {
  CheckReport check = validate_partial_action(g, a);
  if (!check.ok())
    throw InvalidInput("partial action invalid: " + check.issues.front().law +
                       ": " + check.issues.front().witness);

  SGAction b;
  b.n_points = a.n_points;
  b.elements = sg::enumerate(g);
  b.maps.reserve(b.elements.size());
  b.domains.reserve(b.elements.size());
  for (const sg::Element& el : b.elements) {
    PartialBijection m = a.maps[el.anchor];
    for (ElementId r : el.eps)
      m = a.maps[r].after(a.maps[g.inverse(r)]).after(m);
    b.domains.push_back(m.image());
    b.maps.push_back(std::move(m));
  }
  return b;
}

GroupoidPartialAction sg_to_partial(const FiniteGroupoid& g, const SGAction& b) {
  CheckReport check = validate_sg_action(g, b);
  if (!check.ok())
    throw InvalidInput("S(G)-action invalid: " + check.issues.front().law +
                       ": " + check.issues.front().witness);

  GroupoidPartialAction a;
  a.n_points = b.n_points;
  a.domains.resize(g.size());
  a.maps.resize(g.size());
  for (ElementId x = 0; x < g.size(); ++x) {
    std::size_t i = b.index_of(g, sg::generator(g, x));
    a.domains[x] = b.domains[i];
    a.maps[x] = b.maps[i];
  }

  Lemma1Result lemma = lemma1_characterize(g, a.n_points, a.maps);
  if (!lemma.is_action)
    throw InvalidInput("generator restriction is not a partial action: " +
                       lemma.report.issues.front().witness);
  return a;
}

CheckReport validate_sg_action(const FiniteGroupoid& g, const SGAction& b) {
  CheckReport report;
  std::vector<sg::Element> expected = sg::enumerate(g);
  if (b.elements != expected) {
    report.record("structure", "action is not indexed by the enumeration of S(G)");
    return report;
  }
  if (b.maps.size() != b.elements.size() ||
      b.domains.size() != b.elements.size()) {
    report.record("structure", "one E-set and one beta per element required");
    return report;
  }
  for (const auto& m : b.maps) {
    if (m.universe_size() != b.n_points) {
      report.record("structure", "beta lives on the wrong point set");
      return report;
    }
  }

  const std::size_t count = b.elements.size();
  for (std::size_t i = 0; i < count; ++i) {
    const sg::Element& el = b.elements[i];
    std::string name = sg::to_string(g, el);
    std::size_t star_i = b.index_of(g, sg::star(g, el));
    ++report.checks_run;
    if (b.maps[i].domain() != b.domains[star_i])
      report.record("structure", "dom beta(" + name + ") != E(star)");
    if (b.maps[i].image() != b.domains[i])
      report.record("structure", "im beta(" + name + ") != E(" + name + ")");

    sg::Element self_adj = sg::multiply(g, el, sg::star(g, el)).value();
    ++report.checks_run;
    if (b.domains[i] != b.domains[b.index_of(g, self_adj)])
      report.record("structure", "E(" + name + ") != E(" + name + " star)");

    if (sg::is_idempotent(g, el)) {
      ++report.checks_run;
      if (b.maps[i] != PartialBijection::identity(b.n_points, b.domains[i]))
        report.record("A1", "beta(" + name + ") is not the identity of its E-set");
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      auto prod = sg::multiply(g, b.elements[i], b.elements[j]);
      if (!prod) continue;
      ++report.checks_run;
      std::size_t k = b.index_of(g, *prod);
      if (b.maps[i].after(b.maps[j]) != b.maps[k])
        report.record("A2", "beta(" + sg::to_string(g, b.elements[i]) +
                                ")beta(" + sg::to_string(g, b.elements[j]) +
                                ") != beta(product)");
    }
  }

  // Derived laws: beta(star) inverts beta; beta(s) carries E(t) onto E(st);
  // E(st) sits inside E(s).
  for (std::size_t i = 0; i < count; ++i) {
    ++report.checks_run;
    std::size_t star_i = b.index_of(g, sg::star(g, b.elements[i]));
    if (b.maps[star_i] != b.maps[i].inverse())
      report.record("beta-star", "beta(star) != beta^{-1} at " +
                                     sg::to_string(g, b.elements[i]));
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      auto prod = sg::multiply(g, b.elements[i], b.elements[j]);
      if (!prod) continue;
      ++report.checks_run;
      std::size_t k = b.index_of(g, *prod);
      std::vector<Point> carried = apply_to_set(b.maps[i], b.domains[j]);
      if (carried != b.domains[k])
        report.record("beta-carries-E", "beta(s)(E(t)) != E(st) at (" +
                                            sg::to_string(g, b.elements[i]) +
                                            ", " +
                                            sg::to_string(g, b.elements[j]) + ")");
      if (!subset(b.domains[k], b.domains[i]))
        report.record("E-monotone", "E(st) escapes E(s) at (" +
                                        sg::to_string(g, b.elements[i]) + ", " +
                                        sg::to_string(g, b.elements[j]) + ")");
    }
  }
  return report;
}

}  // namespace exel
