#ifndef EXEL_JSON_IO_HPP_
#define EXEL_JSON_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "exel/check_report.hpp"
#include "exel/groupoid.hpp"
#include "exel/partial_action.hpp"
#include "exel/representations.hpp"
#include "exel/semigroupoid.hpp"

namespace exel {

/// Groupoid spec files:
///   { "elements": [labels],
///     "inv": {label: label},
///     "comp": [[a, b, ab], ...] }     // missing pairs are non-composable
GroupoidSpec parse_groupoid_spec(const nlohmann::json& j);
nlohmann::json groupoid_spec_to_json(const FiniteGroupoid& g);

/// Action spec files:
///   { "set": [points],
///     "D": {element: [points]},
///     "alpha": {element: {point: point}} }
struct NamedAction {
  std::vector<std::string> points;
  GroupoidPartialAction action;
};
NamedAction parse_action_spec(const nlohmann::json& j, const FiniteGroupoid& g);
nlohmann::json action_spec_to_json(const FiniteGroupoid& g, const NamedAction& a);

/// S(G) elements: {"eps": [labels], "anchor": label}, eps sorted by label.
nlohmann::json sg_element_to_json(const FiniteGroupoid& g, const sg::Element& el);
sg::Element parse_sg_element(const nlohmann::json& j, const FiniteGroupoid& g);

/// Representation spec files:
///   { "dim": n, "pi": {element: [[[re, im], ...] per row, ...]} }
PartialRep parse_partial_rep(const nlohmann::json& j, const FiniteGroupoid& g);
nlohmann::json partial_rep_to_json(const FiniteGroupoid& g, const PartialRep& rep);

nlohmann::json report_to_json(const CheckReport& report);

/// Loads and parses a JSON file; throws MalformedSpec on unreadable or
/// unparseable input.
nlohmann::json load_json_file(const std::string& path);

}  // namespace exel

#endif  // EXEL_JSON_IO_HPP_
