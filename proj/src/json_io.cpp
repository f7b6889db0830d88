#include "exel/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace exel {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw MalformedSpec(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string need_string(const json& j, const char* what) {
  if (!j.is_string()) throw MalformedSpec(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedSpec("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw MalformedSpec("invalid JSON in " + path + ": " + err.what());
  }
}

GroupoidSpec parse_groupoid_spec(const json& j) {
  GroupoidSpec spec;
  for (const auto& el : need(j, "elements"))
    spec.elements.push_back(need_string(el, "element label"));
  for (const auto& [key, value] : need(j, "inv").items())
    spec.inv[key] = need_string(value, "inverse label");
  for (const auto& row : need(j, "comp")) {
    if (!row.is_array() || row.size() != 3)
      throw MalformedSpec("comp rows must be [a, b, ab]");
    spec.comp.push_back({need_string(row[0], "comp entry"),
                         need_string(row[1], "comp entry"),
                         need_string(row[2], "comp entry")});
  }
  return spec;
}

json groupoid_spec_to_json(const FiniteGroupoid& g) {
  json j;
  j["elements"] = json::array();
  for (ElementId x = 0; x < g.size(); ++x) j["elements"].push_back(g.label(x));
  j["inv"] = json::object();
  for (ElementId x = 0; x < g.size(); ++x)
    j["inv"][g.label(x)] = g.label(g.inverse(x));
  j["comp"] = json::array();
  for (auto [s, t] : g.composable_pairs())
    j["comp"].push_back({g.label(s), g.label(t), g.label(*g.compose(s, t))});
  return j;
}

NamedAction parse_action_spec(const json& j, const FiniteGroupoid& g) {
  NamedAction named;
  for (const auto& p : need(j, "set"))
    named.points.push_back(need_string(p, "point label"));
  auto point_of = [&named](const std::string& label) -> Point {
    for (Point i = 0; i < named.points.size(); ++i)
      if (named.points[i] == label) return i;
    throw MalformedSpec("action references unknown point '" + label + "'");
  };

  named.action.n_points = named.points.size();
  named.action.domains.assign(g.size(), {});
  named.action.maps.assign(g.size(), PartialBijection(named.points.size()));

  for (const auto& [label, points] : need(j, "D").items()) {
    ElementId x = g.element(label);
    for (const auto& p : points)
      named.action.domains[x].push_back(point_of(need_string(p, "point label")));
    std::sort(named.action.domains[x].begin(), named.action.domains[x].end());
  }
  for (const auto& [label, graph] : need(j, "alpha").items()) {
    ElementId x = g.element(label);
    std::vector<std::pair<Point, Point>> pairs;
    for (const auto& [from, to] : graph.items())
      pairs.emplace_back(point_of(from), point_of(need_string(to, "point label")));
    named.action.maps[x] = PartialBijection::from_pairs(named.points.size(), pairs);
  }
  return named;
}

json action_spec_to_json(const FiniteGroupoid& g, const NamedAction& a) {
  json j;
  j["set"] = a.points;
  j["D"] = json::object();
  j["alpha"] = json::object();
  for (ElementId x = 0; x < g.size(); ++x) {
    json dom = json::array();
    for (Point p : a.action.domains[x]) dom.push_back(a.points[p]);
    j["D"][g.label(x)] = std::move(dom);
    json graph = json::object();
    for (Point p = 0; p < a.action.n_points; ++p)
      if (auto q = a.action.maps[x](p)) graph[a.points[p]] = a.points[*q];
    j["alpha"][g.label(x)] = std::move(graph);
  }
  return j;
}

json sg_element_to_json(const FiniteGroupoid& g, const sg::Element& el) {
  json j;
  j["eps"] = json::array();
  for (ElementId r : el.eps) j["eps"].push_back(g.label(r));
  j["anchor"] = g.label(el.anchor);
  return j;
}

sg::Element parse_sg_element(const json& j, const FiniteGroupoid& g) {
  sg::Element el;
  for (const auto& label : need(j, "eps"))
    el.eps.push_back(g.element(need_string(label, "eps label")));
  std::sort(el.eps.begin(), el.eps.end());
  el.anchor = g.element(need_string(need(j, "anchor"), "anchor label"));
  sg::check_element(g, el);
  return el;
}

PartialRep parse_partial_rep(const json& j, const FiniteGroupoid& g) {
  PartialRep rep;
  rep.dim = need(j, "dim").get<std::size_t>();
  rep.pi.assign(g.size(), Matrix::Zero(rep.dim, rep.dim));
  std::vector<bool> seen(g.size(), false);
  for (const auto& [label, rows] : need(j, "pi").items()) {
    ElementId x = g.element(label);
    seen[x] = true;
    if (!rows.is_array() || rows.size() != rep.dim)
      throw MalformedSpec("matrix for " + label + " must have dim rows");
    for (std::size_t r = 0; r < rep.dim; ++r) {
      if (!rows[r].is_array() || rows[r].size() != rep.dim)
        throw MalformedSpec("matrix rows must have dim entries");
      for (std::size_t c = 0; c < rep.dim; ++c) {
        const auto& entry = rows[r][c];
        if (!entry.is_array() || entry.size() != 2)
          throw MalformedSpec("matrix entries must be [re, im]");
        rep.pi[x](r, c) = std::complex<double>(entry[0].get<double>(),
                                               entry[1].get<double>());
      }
    }
  }
  for (ElementId x = 0; x < g.size(); ++x)
    if (!seen[x])
      throw MalformedSpec("representation misses element " + g.label(x));
  return rep;
}

json partial_rep_to_json(const FiniteGroupoid& g, const PartialRep& rep) {
  json j;
  j["dim"] = rep.dim;
  j["pi"] = json::object();
  for (ElementId x = 0; x < g.size(); ++x) {
    json rows = json::array();
    for (std::size_t r = 0; r < rep.dim; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < rep.dim; ++c)
        row.push_back({rep.pi[x](r, c).real(), rep.pi[x](r, c).imag()});
      rows.push_back(std::move(row));
    }
    j["pi"][g.label(x)] = std::move(rows);
  }
  return j;
}

json report_to_json(const CheckReport& report) {
  json j;
  j["ok"] = report.ok();
  j["checks_run"] = report.checks_run;
  j["violations"] = json::array();
  for (const auto& issue : report.issues)
    j["violations"].push_back({{"law", issue.law}, {"witness", issue.witness}});
  return j;
}

}  // namespace exel
