#include "exel/semigroupoid.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace exel::sg {

void check_element(const FiniteGroupoid& g, const Element& a) {
  if (a.anchor >= g.size())
    throw MixedGroupoids("anchor id out of range for this groupoid");
  ElementId cls = g.range(a.anchor);
  ElementId prev = kNoElement;
  for (ElementId r : a.eps) {
    if (r >= g.size())
      throw MixedGroupoids("eps member out of range for this groupoid");
    if (prev != kNoElement && r <= prev)
      throw MixedGroupoids("eps set not strictly increasing");
    prev = r;
    if (g.is_identity(r))
      throw MixedGroupoids("eps member " + g.label(r) + " is an identity");
    if (r == a.anchor)
      throw MixedGroupoids("eps member equals the anchor " + g.label(r));
    if (g.range(r) != cls)
      throw MixedGroupoids("eps member " + g.label(r) +
                           " outside the anchor's range class");
  }
}

Element generator(const FiniteGroupoid& g, ElementId x) {
  if (x >= g.size()) throw UnknownElement("generator id out of range");
  return Element{{}, x};
}

Element epsilon(const FiniteGroupoid& g, ElementId t) {
  if (t >= g.size()) throw UnknownElement("epsilon id out of range");
  if (g.is_identity(t)) return Element{{}, t};
  return Element{{t}, g.range(t)};
}

std::optional<Element> multiply(const FiniteGroupoid& g, const Element& a,
                                const Element& b) {
  check_element(g, a);
  check_element(g, b);
  auto anchor = g.compose(a.anchor, b.anchor);
  if (!anchor) return std::nullopt;

  // (E,s)(F,t) = (E u sF u {s}, st), then drop identities and the anchor.
  std::vector<ElementId> eps = a.eps;
  for (ElementId f : b.eps) {
    // f shares b.anchor's range class, so the product exists
    eps.push_back(g.compose(a.anchor, f).value());
  }
  eps.push_back(a.anchor);

  std::sort(eps.begin(), eps.end());
  eps.erase(std::unique(eps.begin(), eps.end()), eps.end());
  std::erase_if(eps, [&](ElementId r) {
    return g.is_identity(r) || r == *anchor;
  });
  return Element{std::move(eps), *anchor};
}

Element star(const FiniteGroupoid& g, const Element& a) {
  check_element(g, a);
  ElementId ainv = g.inverse(a.anchor);
  std::vector<ElementId> eps;
  eps.reserve(a.eps.size());
  for (ElementId r : a.eps)
    eps.push_back(g.compose(ainv, r).value());
  std::sort(eps.begin(), eps.end());
  return Element{std::move(eps), ainv};
}

bool is_idempotent(const FiniteGroupoid& g, const Element& a) {
  check_element(g, a);
  return g.is_identity(a.anchor);
}

bool leq(const FiniteGroupoid& g, const Element& a, const Element& b) {
  check_element(g, a);
  check_element(g, b);
  return a.anchor == b.anchor &&
         std::includes(a.eps.begin(), a.eps.end(), b.eps.begin(), b.eps.end());
}

bool exists_product(const FiniteGroupoid& g, const Element& a,
                    const Element& b) {
  check_element(g, a);
  check_element(g, b);
  return g.composable(a.anchor, b.anchor);
}

Element normalize_word(const FiniteGroupoid& g, const Word& word) {
  if (word.empty()) throw NonComposableWord("empty word");
  Element acc = generator(g, word.front());
  for (std::size_t i = 1; i < word.size(); ++i) {
    auto next = multiply(g, acc, generator(g, word[i]));
    if (!next)
      throw NonComposableWord("letters " + g.label(word[i - 1]) + ", " +
                              g.label(word[i]) + " do not compose");
    acc = std::move(*next);
  }
  return acc;
}

namespace {

// phi_g(E) = gE u {g, r(g)} when every member of E left-composes with g,
// and the empty set otherwise.
std::set<ElementId> phi(const FiniteGroupoid& g, ElementId x,
                        const std::set<ElementId>& subset) {
  std::set<ElementId> out;
  for (ElementId h : subset) {
    auto xh = g.compose(x, h);
    if (!xh) return {};
    out.insert(*xh);
  }
  out.insert(x);
  out.insert(g.range(x));
  return out;
}

}  // namespace

std::vector<ElementId> lambda_apply(const FiniteGroupoid& g, const Element& a,
                                    std::vector<ElementId> subset) {
  check_element(g, a);
  std::set<ElementId> current(subset.begin(), subset.end());
  for (ElementId h : current) {
    if (h >= g.size()) throw UnknownElement("subset member out of range");
    if (!current.count(g.range(h)))
      throw NotRClosed("subset contains " + g.label(h) + " but not r(" +
                       g.label(h) + ")");
  }

  // Innermost letter first: [anchor], then pairs [r][r^{-1}] outwards.
  current = phi(g, a.anchor, current);
  for (auto it = a.eps.rbegin(); it != a.eps.rend(); ++it) {
    current = phi(g, g.inverse(*it), current);
    current = phi(g, *it, current);
  }
  return {current.begin(), current.end()};
}

std::vector<Element> enumerate(const FiniteGroupoid& g) {
  if (g.size() > 12)
    throw BudgetExceeded("S(G) enumeration limited to |G| <= 12, got " +
                         std::to_string(g.size()));

  // Route (a): all canonical-form shapes (E, s), E inside the range class of
  // s with identities and s itself removed.
  std::vector<Element> combinatorial;
  for (ElementId s = 0; s < g.size(); ++s) {
    std::vector<ElementId> pool;
    for (ElementId h : g.x_class(s))
      if (!g.is_identity(h) && h != s) pool.push_back(h);
    for (std::uint64_t mask = 0; mask < (1ull << pool.size()); ++mask) {
      Element el;
      el.anchor = s;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (mask & (1ull << i)) el.eps.push_back(pool[i]);
      combinatorial.push_back(std::move(el));
    }
  }
  std::sort(combinatorial.begin(), combinatorial.end());

  // Route (b): close the generators under multiply and star. Every element
  // is a product of generators, so right extension by one generator plus
  // star saturates the closure.
  std::set<Element> closed;
  std::deque<Element> queue;
  for (ElementId x = 0; x < g.size(); ++x) {
    Element gen = generator(g, x);
    if (closed.insert(gen).second) queue.push_back(gen);
  }
  while (!queue.empty()) {
    Element a = std::move(queue.front());
    queue.pop_front();
    std::vector<Element> next;
    next.push_back(star(g, a));
    for (ElementId x = 0; x < g.size(); ++x) {
      if (auto p = multiply(g, a, generator(g, x)))
        next.push_back(std::move(*p));
    }
    for (Element& e : next)
      if (closed.insert(e).second) queue.push_back(std::move(e));
  }

  std::vector<Element> closure(closed.begin(), closed.end());
  if (closure != combinatorial)
    throw Error("S(G) enumeration mismatch: closure found " +
                std::to_string(closure.size()) + " elements, standard forms " +
                std::to_string(combinatorial.size()));
  return combinatorial;
}

std::string to_string(const FiniteGroupoid& g, const Element& a) {
  std::string out;
  for (ElementId r : a.eps) out += "eps(" + g.label(r) + ")";
  out += "[" + g.label(a.anchor) + "]";
  return out;
}

}  // namespace exel::sg
