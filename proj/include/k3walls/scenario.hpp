#pragma once

#include "k3walls/monomial_ideal.hpp"
#include "k3walls/mukai_lattice.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace k3walls {

struct NamedClass {
  std::string label;
  MukaiVector vector;
};

struct WallSpec {
  std::string id;
  std::string first;
  std::string second;
  int r_max = 0;  // 0: default
};

enum class CheckKind { computed, assumed };
enum class Comparison { equal, at_least };

std::string_view to_string(CheckKind kind);
std::string_view to_string(Comparison cmp);

struct CheckSpec {
  std::string id;
  CheckKind kind = CheckKind::computed;
  std::string op;                 // computed only
  std::vector<std::string> args;  // computed only
  std::string expected;           // value, or the statement for an assumption
  Comparison comparison = Comparison::equal;
  std::string citation;
  bool derived = false;
};

struct PlotConfig {
  Rational beta_min;
  Rational beta_max;
  Rational alpha_max;
  int samples = 256;
  std::vector<std::string> walls;
  std::vector<std::string> nu_curves;
  std::vector<Rational> vertical_lines;
  bool holes = true;
};

struct Scenario {
  int genus = 0;
  std::string title;
  std::vector<NamedClass> classes;
  std::vector<WallSpec> walls;
  std::vector<CheckSpec> checks;
  std::optional<PlotConfig> plot;

  PolarizedK3 surface() const { return PolarizedK3(genus); }
  const MukaiVector& resolve(std::string_view label) const;
  const WallSpec& wall(std::string_view id) const;
};

struct CheckResult {
  std::string id;
  CheckKind kind = CheckKind::computed;
  std::string op;
  std::string expected;
  std::string actual;
  Comparison comparison = Comparison::equal;
  std::string citation;
  bool derived = false;
  std::optional<bool> pass;  // nullopt for assumptions

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct WallRecord {
  std::string id;
  std::string first_label;
  std::string second_label;
  std::string first;
  std::string second;
  std::string kind;
  std::string equation;
  std::optional<std::string> center;
  std::optional<std::string> radius_sq;
  std::optional<std::string> line_beta;
  std::optional<std::string> endpoints;

  friend bool operator==(const WallRecord&, const WallRecord&) = default;
};

struct HoleRecord {
  std::string wall_id;
  std::string delta;
  std::string beta;
  std::string alpha_sq;

  friend bool operator==(const HoleRecord&, const HoleRecord&) = default;
};

struct ScenarioReport {
  int genus = 0;
  std::string title;
  std::vector<CheckResult> checks;
  std::vector<WallRecord> walls;
  std::vector<HoleRecord> holes;

  // Every computed check passes.
  bool green() const;
  std::vector<const CheckResult*> failures() const;

  friend bool operator==(const ScenarioReport&, const ScenarioReport&) = default;
};

// Parses and validates a scenario config (TOML). Throws config / parse errors.
Scenario parse_scenario(std::string_view toml_text, std::string_view source_name = "<string>");
Scenario load_scenario_file(const std::filesystem::path& path);

// Shipped scenarios, genus 7..14.
std::vector<int> builtin_genera();
Scenario builtin_scenario(int genus);

// Default r_max for walls that do not set one; K3WALLS_RMAX overrides.
int default_hole_rank();

// Never throws on a mismatch; failures are recorded in the report.
ScenarioReport run_scenario(const Scenario& scenario, SubidealSearchCache& cache);
ScenarioReport run_scenario(const Scenario& scenario);
ScenarioReport run_scenario(int genus);

// Evaluates one computed check operation; exposed for the CLI and tests.
std::string evaluate_check(const Scenario& scenario, const CheckSpec& check, SubidealSearchCache& cache);

struct TheoremSummary {
  int genus = 0;
  std::string irrationality;  // "=4" or "<=4"
  std::string brill_noether;
  std::vector<std::string> assumptions;
};

TheoremSummary theorem_summary(int genus);

}  // namespace k3walls
