#pragma once

#include "k3walls/scenario.hpp"
#include "k3walls/walls.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace k3walls {

// JSON with exact values as "p/q" strings; stable key order.
std::string serialize_report(const ScenarioReport& report);
// Inverse of serialize_report. Throws parse errors on malformed input.
ScenarioReport parse_report(std::string_view json);
// Structural schema check; returns the list of problems (empty when valid).
std::vector<std::string> validate_report_json(std::string_view json);

struct PlotWall {
  NumericalWall wall;
  std::string label;
};

struct PlotNuCurve {
  NuZeroCurve curve;
  std::string label;
};

struct PlotHole {
  StabPoint point;
  std::string label;
};

struct PlotVerticalLine {
  Rational beta;
  std::string label;
};

using PlotElement = std::variant<PlotWall, PlotNuCurve, PlotHole, PlotVerticalLine>;

struct PlotSpec {
  Rational beta_min;
  Rational beta_max;
  Rational alpha_max;
  int samples = 256;
  std::vector<PlotElement> elements;
};

// SVG 1.1, coordinates printed with 12 significant digits. Elements leaving the
// window are clipped. Throws precondition on an invalid window or sample count.
std::string render_svg(const PlotSpec& spec);

// Plot described by the scenario's [plot] section; holes come from the report walls.
PlotSpec plot_spec_for(const Scenario& scenario);

}  // namespace k3walls
