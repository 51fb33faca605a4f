#include "k3walls/error.hpp"
#include "k3walls/scenario.hpp"

#include <toml.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace k3walls {

namespace detail {
struct EmbeddedScenario {
  int genus;
  const char* text;
};
extern const EmbeddedScenario kEmbeddedScenarios[];
extern const std::size_t kEmbeddedScenarioCount;
}  // namespace detail

namespace {

[[noreturn]] void fail(std::string_view source, const std::string& message) {
  throw Error(ErrorKind::config, std::string(source) + ": " + message);
}

std::string required_string(const toml::table& t, std::string_view key, std::string_view source,
                            std::string_view where) {
  const auto value = t[key].value<std::string>();
  if (!value || value->empty())
    fail(source, std::string(where) + " needs a non-empty '" + std::string(key) + "'");
  return *value;
}

Integer integer_cell(const toml::node* node, std::string_view source) {
  if (node == nullptr) fail(source, "missing integer");
  if (const auto v = node->value<std::int64_t>()) return Integer(*v);
  if (const auto s = node->value<std::string>()) return parse_integer(*s);
  fail(source, "expected integer");
}

Rational rational_cell(const toml::node* node, std::string_view source) {
  if (node == nullptr) fail(source, "missing rational");
  if (const auto v = node->value<std::int64_t>()) return Rational(*v);
  if (const auto s = node->value<std::string>()) return parse_rational(*s);
  fail(source, "expected rational as integer or \"p/q\" string");
}

std::vector<std::string> string_list(const toml::node_view<const toml::node>& node,
                                     std::string_view source) {
  std::vector<std::string> out;
  if (!node) return out;
  const toml::array* arr = node.as_array();
  if (arr == nullptr) fail(source, "expected an array of strings");
  for (const toml::node& item : *arr) {
    if (const auto s = item.value<std::string>())
      out.push_back(*s);
    else if (const auto i = item.value<std::int64_t>())
      out.push_back(std::to_string(*i));
    else
      fail(source, "expected string entries");
  }
  return out;
}

Scenario build(const toml::table& root, std::string_view source) {
  Scenario scenario;
  const auto genus = root["genus"].value<std::int64_t>();
  if (!genus || *genus < 2) fail(source, "'genus' must be an integer >= 2");
  scenario.genus = static_cast<int>(*genus);
  scenario.title = root["title"].value_or(std::string("genus ") + std::to_string(*genus));
  const PolarizedK3 surface(scenario.genus);

  std::set<std::string> labels;
  if (const toml::array* rows = root["classes"].as_array()) {
    for (const toml::node& row_node : *rows) {
      const toml::array* row = row_node.as_array();
      if (row == nullptr || row->size() != 4) fail(source, "class rows are [label, r, c, s]");
      const auto label = row->get(0)->value<std::string>();
      if (!label || label->empty()) fail(source, "class label must be a non-empty string");
      if (!labels.insert(*label).second) fail(source, "duplicate class label '" + *label + "'");
      scenario.classes.push_back({*label, MukaiVector(surface, integer_cell(row->get(1), source),
                                                      integer_cell(row->get(2), source),
                                                      integer_cell(row->get(3), source))});
    }
  }

  std::set<std::string> wall_ids;
  if (const toml::array* walls = root["walls"].as_array()) {
    for (const toml::node& node : *walls) {
      const toml::table* t = node.as_table();
      if (t == nullptr) fail(source, "walls must be tables");
      WallSpec spec;
      spec.id = required_string(*t, "id", source, "wall");
      if (!wall_ids.insert(spec.id).second) fail(source, "duplicate wall id '" + spec.id + "'");
      const auto pair = string_list((*t)["pair"], source);
      if (pair.size() != 2) fail(source, "wall '" + spec.id + "' needs a pair of class labels");
      for (const std::string& l : pair)
        if (!labels.count(l)) fail(source, "wall '" + spec.id + "' references unknown class '" + l + "'");
      spec.first = pair[0];
      spec.second = pair[1];
      spec.r_max = static_cast<int>((*t)["rmax"].value_or(std::int64_t{0}));
      scenario.walls.push_back(std::move(spec));
    }
  }

  std::set<std::string> check_ids;
  auto add_check = [&](CheckSpec spec) {
    if (!check_ids.insert(spec.id).second) fail(source, "duplicate check id '" + spec.id + "'");
    scenario.checks.push_back(std::move(spec));
  };
  if (const toml::array* checks = root["checks"].as_array()) {
    for (const toml::node& node : *checks) {
      const toml::table* t = node.as_table();
      if (t == nullptr) fail(source, "checks must be tables");
      CheckSpec spec;
      spec.id = required_string(*t, "id", source, "check");
      spec.op = required_string(*t, "op", source, "check '" + spec.id + "'");
      spec.args = string_list((*t)["args"], source);
      spec.expected = required_string(*t, "expected", source, "check '" + spec.id + "'");
      spec.citation = required_string(*t, "citation", source, "check '" + spec.id + "'");
      spec.derived = (*t)["derived"].value_or(false);
      const std::string cmp = (*t)["compare"].value_or(std::string("eq"));
      if (cmp == "ge")
        spec.comparison = Comparison::at_least;
      else if (cmp != "eq")
        fail(source, "check '" + spec.id + "': compare must be \"eq\" or \"ge\"");
      add_check(std::move(spec));
    }
  }
  if (const toml::array* assumptions = root["assumptions"].as_array()) {
    for (const toml::node& node : *assumptions) {
      const toml::table* t = node.as_table();
      if (t == nullptr) fail(source, "assumptions must be tables");
      CheckSpec spec;
      spec.kind = CheckKind::assumed;
      spec.id = required_string(*t, "id", source, "assumption");
      spec.expected = required_string(*t, "statement", source, "assumption '" + spec.id + "'");
      spec.citation = required_string(*t, "citation", source, "assumption '" + spec.id + "'");
      add_check(std::move(spec));
    }
  }

  if (const toml::table* plot = root["plot"].as_table()) {
    PlotConfig cfg;
    const toml::array* beta = (*plot)["beta"].as_array();
    if (beta == nullptr || beta->size() != 2) fail(source, "plot.beta must be [min, max]");
    cfg.beta_min = rational_cell(beta->get(0), source);
    cfg.beta_max = rational_cell(beta->get(1), source);
    cfg.alpha_max = rational_cell((*plot).get("alpha_max"), source);
    if (!(cfg.beta_min < cfg.beta_max)) fail(source, "plot.beta must be increasing");
    if (cfg.alpha_max <= 0) fail(source, "plot.alpha_max must be positive");
    cfg.samples = static_cast<int>((*plot)["samples"].value_or(std::int64_t{256}));
    if (cfg.samples < 16) fail(source, "plot.samples must be >= 16");
    cfg.walls = string_list((*plot)["walls"], source);
    for (const std::string& w : cfg.walls)
      if (!wall_ids.count(w)) fail(source, "plot references unknown wall '" + w + "'");
    cfg.nu_curves = string_list((*plot)["nu_curves"], source);
    for (const std::string& l : cfg.nu_curves)
      if (!labels.count(l)) fail(source, "plot references unknown class '" + l + "'");
    for (const std::string& b : string_list((*plot)["vertical_lines"], source))
      cfg.vertical_lines.push_back(parse_rational(b));
    cfg.holes = (*plot)["holes"].value_or(true);
    scenario.plot = std::move(cfg);
  }
  return scenario;
}

}  // namespace

Scenario parse_scenario(std::string_view toml_text, std::string_view source_name) {
  toml::table root;
  try {
    root = toml::parse(toml_text, source_name);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << source_name << ":" << e.source().begin.line << ":" << e.source().begin.column << ": "
        << e.description();
    throw Error(ErrorKind::parse, msg.str());
  }
  return build(root, source_name);
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::config, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str(), path.string());
}

std::vector<int> builtin_genera() {
  std::vector<int> out;
  for (std::size_t i = 0; i < detail::kEmbeddedScenarioCount; ++i)
    out.push_back(detail::kEmbeddedScenarios[i].genus);
  return out;
}

Scenario builtin_scenario(int genus) {
  for (std::size_t i = 0; i < detail::kEmbeddedScenarioCount; ++i)
    if (detail::kEmbeddedScenarios[i].genus == genus)
      return parse_scenario(detail::kEmbeddedScenarios[i].text,
                            "scenarios/genus" + std::to_string(genus) + ".toml");
  throw Error(ErrorKind::unknown_genus, "no shipped scenario for genus " + std::to_string(genus));
}

}  // namespace k3walls
