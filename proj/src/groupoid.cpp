#include "exel/groupoid.hpp"

#include <algorithm>
#include <set>

namespace exel {

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

}  // namespace

ElementId FiniteGroupoid::element(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    throw UnknownElement("no element labelled " + quoted(label));
  return static_cast<ElementId>(it - labels_.begin());
}

FiniteGroupoid FiniteGroupoid::raw_build(const GroupoidSpec& spec) {
  FiniteGroupoid g;
  g.labels_ = spec.elements;
  std::sort(g.labels_.begin(), g.labels_.end());
  if (std::adjacent_find(g.labels_.begin(), g.labels_.end()) != g.labels_.end())
    throw MalformedSpec("duplicate element label in spec");
  if (g.labels_.empty()) throw MalformedSpec("groupoid needs at least one element");

  const std::size_t n = g.labels_.size();
  auto id_of = [&g](const std::string& label) -> ElementId {
    auto it = std::lower_bound(g.labels_.begin(), g.labels_.end(), label);
    if (it == g.labels_.end() || *it != label)
      throw MalformedSpec("table references unlisted element " + quoted(label));
    return static_cast<ElementId>(it - g.labels_.begin());
  };

  g.inv_.assign(n, kNoElement);
  for (const auto& [a, b] : spec.inv) g.inv_[id_of(a)] = id_of(b);
  for (ElementId x = 0; x < n; ++x) {
    if (g.inv_[x] == kNoElement)
      throw MalformedSpec("inverse table misses element " + quoted(g.labels_[x]));
  }

  g.comp_.assign(n * n, kNoElement);
  for (const auto& row : spec.comp) {
    ElementId a = id_of(row[0]);
    ElementId b = id_of(row[1]);
    ElementId ab = id_of(row[2]);
    ElementId& slot = g.comp_[a * n + b];
    if (slot != kNoElement && slot != ab)
      throw MalformedSpec("conflicting products for pair (" + quoted(row[0]) +
                          ", " + quoted(row[1]) + ")");
    slot = ab;
  }
  return g;
}

CheckReport FiniteGroupoid::axiom_report() const {
  CheckReport report;
  const std::size_t n = labels_.size();
  auto raw = [&](ElementId a, ElementId b) { return comp_[a * n + b]; };
  auto name = [&](ElementId a) { return labels_[a]; };

  for (ElementId x = 0; x < n; ++x) {
    ++report.checks_run;
    if (inv_[inv_[x]] != x)
      report.record("inverse-involution",
                    "inv(inv(" + name(x) + ")) = " + name(inv_[inv_[x]]));
  }

  // r(x) = x x^{-1} and d(x) = x^{-1} x must exist before anything else.
  std::vector<ElementId> range(n, kNoElement), source(n, kNoElement);
  for (ElementId x = 0; x < n; ++x) {
    ++report.checks_run;
    range[x] = raw(x, inv_[x]);
    source[x] = raw(inv_[x], x);
    if (range[x] == kNoElement)
      report.record("inverse-products-exist",
                    name(x) + " * inv(" + name(x) + ") undefined");
    if (source[x] == kNoElement)
      report.record("inverse-products-exist",
                    "inv(" + name(x) + ") * " + name(x) + " undefined");
  }
  if (!report.ok()) return report;

  // Composability criterion: exists st iff d(s) = r(t).
  for (ElementId s = 0; s < n; ++s) {
    for (ElementId t = 0; t < n; ++t) {
      ++report.checks_run;
      bool defined = raw(s, t) != kNoElement;
      bool should = source[s] == range[t];
      if (defined != should)
        report.record("composability",
                      name(s) + " * " + name(t) + (defined
                          ? " defined although d != r"
                          : " undefined although d(s) = r(t)"));
    }
  }

  // Semigroupoid axioms, both senses.
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      for (ElementId c = 0; c < n; ++c) {
        ++report.checks_run;
        ElementId ab = raw(a, b);
        ElementId bc = raw(b, c);
        ElementId ab_c = ab == kNoElement ? kNoElement : raw(ab, c);
        ElementId a_bc = bc == kNoElement ? kNoElement : raw(a, bc);
        std::string triple =
            "(" + name(a) + ", " + name(b) + ", " + name(c) + ")";
        if ((ab_c == kNoElement) != (a_bc == kNoElement)) {
          report.record("associativity-existence",
                        "(ab)c and a(bc) differ in existence at " + triple);
        } else if (ab_c != kNoElement && ab_c != a_bc) {
          report.record("associativity",
                        "(ab)c = " + name(ab_c) + " but a(bc) = " +
                            name(a_bc) + " at " + triple);
        }
        bool pairwise = ab != kNoElement && bc != kNoElement;
        if (pairwise != (ab_c != kNoElement))
          report.record("associativity-pairwise",
                        "exists ab and bc iff exists (ab)c fails at " + triple);
      }
    }
  }

  // Inverse laws through the derived identities.
  for (ElementId x = 0; x < n; ++x) {
    ++report.checks_run;
    if (raw(range[x], x) != x)
      report.record("inverse-law", "(x inv(x)) x != x for x = " + name(x));
    if (raw(x, source[x]) != x)
      report.record("inverse-law", "x (inv(x) x) != x for x = " + name(x));
  }

  // Identity facts on G0 = d(G) = r(G).
  std::set<ElementId> idents(range.begin(), range.end());
  idents.insert(source.begin(), source.end());
  for (ElementId e : idents) {
    ++report.checks_run;
    if (raw(e, e) != e)
      report.record("identity-idempotent", name(e) + " * " + name(e) + " != " + name(e));
    if (source[e] != e || range[e] != e)
      report.record("identity-source-range",
                    "d/r of identity " + name(e) + " differ from it");
  }
  return report;
}

void FiniteGroupoid::derive_structure() {
  const std::size_t n = labels_.size();
  source_.resize(n);
  range_.resize(n);
  is_identity_.assign(n, false);
  for (ElementId x = 0; x < n; ++x) {
    range_[x] = comp_[x * n + inv_[x]];
    source_[x] = comp_[inv_[x] * n + x];
  }
  for (ElementId x = 0; x < n; ++x) {
    is_identity_[range_[x]] = true;
    is_identity_[source_[x]] = true;
  }
  identities_.clear();
  for (ElementId x = 0; x < n; ++x)
    if (is_identity_[x]) identities_.push_back(x);

  x_class_by_element_.assign(n, {});
  for (ElementId e : identities_) {
    std::vector<ElementId> cls;
    for (ElementId h = 0; h < n; ++h)
      if (range_[h] == e) cls.push_back(h);
    for (ElementId h : cls) x_class_by_element_[h] = cls;
  }

  composable_pairs_.clear();
  for (ElementId s = 0; s < n; ++s)
    for (ElementId t = 0; t < n; ++t)
      if (comp_[s * n + t] != kNoElement) composable_pairs_.emplace_back(s, t);
}

CheckReport FiniteGroupoid::check_spec(const GroupoidSpec& spec) {
  return raw_build(spec).axiom_report();
}

FiniteGroupoid FiniteGroupoid::from_spec(const GroupoidSpec& spec) {
  FiniteGroupoid g = raw_build(spec);
  CheckReport report = g.axiom_report();
  if (!report.ok())
    throw AxiomViolation(report.issues.front().law + ": " +
                         report.issues.front().witness);
  g.derive_structure();
  return g;
}

FiniteGroupoid FiniteGroupoid::from_group_table(
    const std::vector<std::string>& elements,
    const std::vector<std::vector<std::string>>& table) {
  if (table.size() != elements.size())
    throw MalformedSpec("group table must have one row per element");
  for (const auto& row : table)
    if (row.size() != elements.size())
      throw MalformedSpec("group table rows must match element count");

  GroupoidSpec spec;
  spec.elements = elements;

  // Identity: the unique e with e*x = x for all x.
  std::string identity;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    bool is_id = true;
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (table[i][j] != elements[j]) is_id = false;
    if (is_id) {
      identity = elements[i];
      break;
    }
  }
  if (identity.empty()) throw AxiomViolation("group table has no identity");

  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::string inv;
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (table[i][j] == identity && table[j][i] == identity) inv = elements[j];
    if (inv.empty())
      throw AxiomViolation("group table: no inverse for " + quoted(elements[i]));
    spec.inv[elements[i]] = inv;
  }
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      spec.comp.push_back({elements[i], elements[j], table[i][j]});

  // from_spec re-checks associativity and the remaining laws.
  return from_spec(spec);
}

FiniteGroupoid FiniteGroupoid::cyclic_group(unsigned n) {
  if (n == 0) throw MalformedSpec("cyclic group order must be positive");
  std::vector<std::string> elements;
  elements.push_back("e");
  for (unsigned k = 1; k < n; ++k)
    elements.push_back(k == 1 ? "a" : "a" + std::to_string(k));
  std::vector<std::vector<std::string>> table(n, std::vector<std::string>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) table[i][j] = elements[(i + j) % n];
  return from_group_table(elements, table);
}

FiniteGroupoid FiniteGroupoid::disjoint_union(
    const std::vector<FiniteGroupoid>& parts) {
  if (parts.empty()) throw MalformedSpec("disjoint union of zero parts");
  GroupoidSpec spec;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const FiniteGroupoid& part = parts[p];
    std::string tag = std::to_string(p) + ":";
    for (ElementId x = 0; x < part.size(); ++x) {
      spec.elements.push_back(tag + part.label(x));
      spec.inv[tag + part.label(x)] = tag + part.label(part.inverse(x));
    }
    for (auto [s, t] : part.composable_pairs())
      spec.comp.push_back({tag + part.label(s), tag + part.label(t),
                           tag + part.label(*part.compose(s, t))});
  }
  return from_spec(spec);
}

const std::vector<ElementId>& FiniteGroupoid::x_class(ElementId g) const {
  require(g);
  return x_class_by_element_[g];
}

}  // namespace exel
