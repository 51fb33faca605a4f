#include "k3walls/report.hpp"

#include "k3walls/error.hpp"

#include <json.hpp>

namespace k3walls {

using nlohmann::ordered_json;

namespace {

ordered_json optional_string(const std::optional<std::string>& s) {
  return s ? ordered_json(*s) : ordered_json(nullptr);
}

std::optional<std::string> read_optional(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::string>();
}

}  // namespace

std::string serialize_report(const ScenarioReport& report) {
  ordered_json root;
  root["genus"] = report.genus;
  root["title"] = report.title;
  root["green"] = report.green();

  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    ordered_json j;
    j["id"] = c.id;
    j["kind"] = to_string(c.kind);
    j["op"] = c.op;
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["compare"] = to_string(c.comparison);
    j["citation"] = c.citation;
    j["derived"] = c.derived;
    j["pass"] = c.pass ? ordered_json(*c.pass) : ordered_json(nullptr);
    checks.push_back(std::move(j));
  }
  root["checks"] = std::move(checks);

  ordered_json walls = ordered_json::array();
  for (const WallRecord& w : report.walls) {
    ordered_json j;
    j["id"] = w.id;
    j["pair"] = {w.first_label, w.second_label};
    j["vectors"] = {w.first, w.second};
    j["kind"] = w.kind;
    j["equation"] = w.equation;
    j["center"] = optional_string(w.center);
    j["radius_sq"] = optional_string(w.radius_sq);
    j["line_beta"] = optional_string(w.line_beta);
    j["endpoints"] = optional_string(w.endpoints);
    walls.push_back(std::move(j));
  }
  root["walls"] = std::move(walls);

  ordered_json holes = ordered_json::array();
  for (const HoleRecord& h : report.holes) {
    ordered_json j;
    j["wall"] = h.wall_id;
    j["delta"] = h.delta;
    j["beta"] = h.beta;
    j["alpha_sq"] = h.alpha_sq;
    holes.push_back(std::move(j));
  }
  root["holes"] = std::move(holes);
  return root.dump(2) + "\n";
}

ScenarioReport parse_report(std::string_view json) {
  ordered_json root;
  try {
    root = ordered_json::parse(json);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  const auto problems = validate_report_json(json);
  if (!problems.empty()) throw Error(ErrorKind::parse, "report does not match schema: " + problems.front());

  ScenarioReport report;
  report.genus = root.at("genus").get<int>();
  report.title = root.at("title").get<std::string>();
  for (const auto& j : root.at("checks")) {
    CheckResult c;
    c.id = j.at("id").get<std::string>();
    c.kind = j.at("kind") == "assumed" ? CheckKind::assumed : CheckKind::computed;
    c.op = j.at("op").get<std::string>();
    c.expected = j.at("expected").get<std::string>();
    c.actual = j.at("actual").get<std::string>();
    c.comparison = j.at("compare") == "ge" ? Comparison::at_least : Comparison::equal;
    c.citation = j.at("citation").get<std::string>();
    c.derived = j.at("derived").get<bool>();
    if (!j.at("pass").is_null()) c.pass = j.at("pass").get<bool>();
    report.checks.push_back(std::move(c));
  }
  for (const auto& j : root.at("walls")) {
    WallRecord w;
    w.id = j.at("id").get<std::string>();
    w.first_label = j.at("pair").at(0).get<std::string>();
    w.second_label = j.at("pair").at(1).get<std::string>();
    w.first = j.at("vectors").at(0).get<std::string>();
    w.second = j.at("vectors").at(1).get<std::string>();
    w.kind = j.at("kind").get<std::string>();
    w.equation = j.at("equation").get<std::string>();
    w.center = read_optional(j, "center");
    w.radius_sq = read_optional(j, "radius_sq");
    w.line_beta = read_optional(j, "line_beta");
    w.endpoints = read_optional(j, "endpoints");
    report.walls.push_back(std::move(w));
  }
  for (const auto& j : root.at("holes")) {
    report.holes.push_back({j.at("wall").get<std::string>(), j.at("delta").get<std::string>(),
                            j.at("beta").get<std::string>(), j.at("alpha_sq").get<std::string>()});
  }
  return report;
}

namespace {

class SchemaChecker {
 public:
  std::vector<std::string> problems;

  void require(const ordered_json& obj, const std::string& path, const char* key,
               ordered_json::value_t type, bool nullable = false) {
    if (!obj.contains(key)) {
      problems.push_back(path + "." + key + " is missing");
      return;
    }
    const ordered_json& v = obj.at(key);
    if (nullable && v.is_null()) return;
    if (v.type() != type && !(type == ordered_json::value_t::number_integer && v.is_number_unsigned()))
      problems.push_back(path + "." + key + " has the wrong type");
  }

  void rational(const ordered_json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key) || obj.at(key).is_null() || !obj.at(key).is_string()) return;
    try {
      parse_rational(obj.at(key).get<std::string>());
    } catch (const Error&) {
      problems.push_back(path + "." + key + " is not a p/q rational");
    }
  }
};

}  // namespace

std::vector<std::string> validate_report_json(std::string_view json) {
  using vt = ordered_json::value_t;
  SchemaChecker check;
  ordered_json root;
  try {
    root = ordered_json::parse(json);
  } catch (const ordered_json::parse_error& e) {
    return {std::string("invalid JSON: ") + e.what()};
  }
  if (!root.is_object()) return {"root is not an object"};
  check.require(root, "$", "genus", vt::number_integer);
  check.require(root, "$", "title", vt::string);
  check.require(root, "$", "green", vt::boolean);
  for (const char* key : {"checks", "walls", "holes"}) check.require(root, "$", key, vt::array);
  if (!check.problems.empty()) return check.problems;

  std::size_t i = 0;
  for (const auto& c : root.at("checks")) {
    const std::string path = "$.checks[" + std::to_string(i++) + "]";
    if (!c.is_object()) {
      check.problems.push_back(path + " is not an object");
      continue;
    }
    for (const char* key : {"id", "kind", "op", "expected", "actual", "compare", "citation"})
      check.require(c, path, key, vt::string);
    check.require(c, path, "derived", vt::boolean);
    check.require(c, path, "pass", vt::boolean, true);
    if (c.contains("kind") && c.at("kind") != "computed" && c.at("kind") != "assumed")
      check.problems.push_back(path + ".kind must be computed or assumed");
    if (c.contains("compare") && c.at("compare") != "eq" && c.at("compare") != "ge")
      check.problems.push_back(path + ".compare must be eq or ge");
    if (c.contains("citation") && c.at("citation").is_string() && c.at("citation").get<std::string>().empty())
      check.problems.push_back(path + ".citation is empty");
  }
  i = 0;
  for (const auto& w : root.at("walls")) {
    const std::string path = "$.walls[" + std::to_string(i++) + "]";
    if (!w.is_object()) {
      check.problems.push_back(path + " is not an object");
      continue;
    }
    for (const char* key : {"id", "kind", "equation"}) check.require(w, path, key, vt::string);
    for (const char* key : {"pair", "vectors"}) {
      check.require(w, path, key, vt::array);
      if (w.contains(key) && w.at(key).is_array() &&
          (w.at(key).size() != 2 || !w.at(key).at(0).is_string() || !w.at(key).at(1).is_string()))
        check.problems.push_back(path + "." + key + " must hold two strings");
    }
    for (const char* key : {"center", "radius_sq", "line_beta", "endpoints"})
      check.require(w, path, key, vt::string, true);
    for (const char* key : {"center", "radius_sq", "line_beta"}) check.rational(w, path, key);
  }
  i = 0;
  for (const auto& h : root.at("holes")) {
    const std::string path = "$.holes[" + std::to_string(i++) + "]";
    if (!h.is_object()) {
      check.problems.push_back(path + " is not an object");
      continue;
    }
    for (const char* key : {"wall", "delta", "beta", "alpha_sq"}) check.require(h, path, key, vt::string);
    check.rational(h, path, "beta");
    check.rational(h, path, "alpha_sq");
  }
  return check.problems;
}

}  // namespace k3walls
