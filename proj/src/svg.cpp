#include "k3walls/error.hpp"
#include "k3walls/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace k3walls {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kMargin = 50;

std::string num(double x) {
  if (x == 0) x = 0;  // drop negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

class Canvas {
 public:
  explicit Canvas(const PlotSpec& spec)
      : beta_min_(to_double(spec.beta_min)),
        beta_max_(to_double(spec.beta_max)),
        alpha_max_(to_double(spec.alpha_max)) {}

  bool inside(double beta, double alpha) const {
    return beta >= beta_min_ && beta <= beta_max_ && alpha >= 0 && alpha <= alpha_max_;
  }
  double x(double beta) const {
    return kMargin + (beta - beta_min_) / (beta_max_ - beta_min_) * (kWidth - 2 * kMargin);
  }
  double y(double alpha) const {
    return kHeight - kMargin - alpha / alpha_max_ * (kHeight - 2 * kMargin);
  }
  double beta_min() const { return beta_min_; }
  double beta_max() const { return beta_max_; }
  double alpha_max() const { return alpha_max_; }

  // Polyline through (beta, alpha) samples; NaN or out-of-window points split it.
  std::string path(const std::vector<std::pair<double, double>>& pts) const {
    std::string d;
    bool pen_down = false;
    for (const auto& [b, a] : pts) {
      if (std::isnan(a) || !inside(b, a)) {
        pen_down = false;
        continue;
      }
      d += pen_down ? " L" : (d.empty() ? "M" : " M");
      d += num(x(b)) + " " + num(y(a));
      pen_down = true;
    }
    return d;
  }

 private:
  double beta_min_, beta_max_, alpha_max_;
};

void emit_path(std::string& out, const std::string& d, std::string_view cls, std::string_view label) {
  if (d.empty()) return;
  out += "  <path class=\"" + std::string(cls) + "\" d=\"" + d + "\"><title>" + escape(label) +
         "</title></path>\n";
}

void emit_label(std::string& out, const Canvas& c, double beta, double alpha, std::string_view label) {
  if (label.empty() || !c.inside(beta, alpha)) return;
  out += "  <text x=\"" + num(c.x(beta) + 4) + "\" y=\"" + num(c.y(alpha) - 4) + "\">" +
         escape(label) + "</text>\n";
}

void draw(std::string& out, const Canvas& c, int n, const PlotWall& e) {
  const NumericalWall& w = e.wall;
  if (w.kind() == WallKind::semicircle) {
    const double center = to_double(w.center());
    const double radius = std::sqrt(to_double(w.radius_sq()));
    std::vector<std::pair<double, double>> pts;
    // Uniform in angle, so samples concentrate in beta near the endpoints.
    for (int i = 0; i < n; ++i) {
      const double t = std::numbers::pi * i / (n - 1);
      pts.emplace_back(center - radius * std::cos(t), radius * std::sin(t));
    }
    emit_path(out, c.path(pts), "wall", e.label);
    emit_label(out, c, center, radius, e.label);
  } else if (w.kind() == WallKind::vertical) {
    const double beta = to_double(w.line_beta());
    emit_path(out, c.path({{beta, 0}, {beta, c.alpha_max()}}), "wall", e.label);
  }
}

void draw(std::string& out, const Canvas& c, int n, const PlotNuCurve& e) {
  const NuZeroCurve& curve = e.curve;
  if (curve.shape == NuCurveShape::empty) return;
  if (curve.shape == NuCurveShape::vertical_line) {
    const double beta = to_double(curve.line_beta());
    emit_path(out, c.path({{beta, 0}, {beta, c.alpha_max()}}), "nu", e.label);
    return;
  }
  const double qb = -to_double(Rational(curve.beta_sq)) / to_double(Rational(curve.alpha_sq));
  const double lb = -to_double(Rational(curve.beta)) / to_double(Rational(curve.alpha_sq));
  const double k = -to_double(Rational(curve.constant)) / to_double(Rational(curve.alpha_sq));
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < n; ++i) {
    const double b = c.beta_min() + (c.beta_max() - c.beta_min()) * i / (n - 1);
    const double a_sq = qb * b * b + lb * b + k;
    pts.emplace_back(b, a_sq >= 0 ? std::sqrt(a_sq) : std::nan(""));
  }
  emit_path(out, c.path(pts), "nu", e.label);
  for (auto it = pts.rbegin(); it != pts.rend(); ++it)
    if (!std::isnan(it->second) && c.inside(it->first, it->second)) {
      emit_label(out, c, it->first, it->second, e.label);
      break;
    }
}

void draw(std::string& out, const Canvas& c, int, const PlotHole& e) {
  const double beta = to_double(e.point.beta());
  const double alpha = std::sqrt(to_double(e.point.alpha_sq()));
  if (!c.inside(beta, alpha)) return;
  out += "  <circle class=\"hole\" cx=\"" + num(c.x(beta)) + "\" cy=\"" + num(c.y(alpha)) +
         "\" r=\"4\"><title>" + escape(e.label) + "</title></circle>\n";
  emit_label(out, c, beta, alpha, e.label);
}

void draw(std::string& out, const Canvas& c, int, const PlotVerticalLine& e) {
  const double beta = to_double(e.beta);
  emit_path(out, c.path({{beta, 0}, {beta, c.alpha_max()}}), "marker", e.label);
  emit_label(out, c, beta, c.alpha_max() * 0.95, e.label);
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  if (!(spec.beta_min < spec.beta_max)) throw Error(ErrorKind::precondition, "empty beta range");
  if (spec.alpha_max <= 0) throw Error(ErrorKind::precondition, "alpha_max must be positive");
  if (spec.samples < 16) throw Error(ErrorKind::precondition, "at least 16 samples per curve");

  const Canvas canvas(spec);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  out +=
      "  <style>path{fill:none;stroke-width:1.5}.wall{stroke:#1f4e9c}.nu{stroke:#b03a2e;"
      "stroke-dasharray:6 3}.marker{stroke:#555;stroke-dasharray:2 3}.axis{stroke:#000;"
      "stroke-width:1}.hole{fill:#fff;stroke:#000;stroke-width:1.5}text{font-family:sans-serif;"
      "font-size:12px}</style>\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  const std::string y0 = num(canvas.y(0));
  out += "  <path class=\"axis\" d=\"M" + num(kMargin) + " " + y0 + " L" + num(kWidth - kMargin) +
         " " + y0 + "\"/>\n";
  out += "  <text x=\"" + num(kMargin) + "\" y=\"" + num(canvas.y(0) + 18) + "\">β=" +
         to_string(spec.beta_min) + "</text>\n";
  out += "  <text x=\"" + num(kWidth - kMargin - 60) + "\" y=\"" + num(canvas.y(0) + 18) + "\">β=" +
         to_string(spec.beta_max) + "</text>\n";
  out += "  <text x=\"" + num(kMargin) + "\" y=\"" + num(kMargin - 10) + "\">α≤" +
         escape(num(to_double(spec.alpha_max))) + "</text>\n";
  for (const PlotElement& element : spec.elements)
    std::visit([&](const auto& e) { draw(out, canvas, spec.samples, e); }, element);
  out += "</svg>\n";
  return out;
}

PlotSpec plot_spec_for(const Scenario& scenario) {
  if (!scenario.plot) throw Error(ErrorKind::config, "scenario has no [plot] section");
  const PlotConfig& cfg = *scenario.plot;
  PlotSpec spec{cfg.beta_min, cfg.beta_max, cfg.alpha_max, cfg.samples, {}};
  for (const std::string& id : cfg.walls) {
    const WallSpec& ws = scenario.wall(id);
    const NumericalWall wall = wall_between(scenario.resolve(ws.first), scenario.resolve(ws.second));
    spec.elements.push_back(PlotWall{wall, id});
  }
  for (const std::string& label : cfg.nu_curves)
    spec.elements.push_back(PlotNuCurve{nu_zero_curve(scenario.resolve(label)), "H_" + label});
  for (const Rational& beta : cfg.vertical_lines)
    spec.elements.push_back(PlotVerticalLine{beta, "β=" + to_string(beta)});
  if (cfg.holes) {
    for (const std::string& id : cfg.walls) {
      const WallSpec& ws = scenario.wall(id);
      const NumericalWall wall = wall_between(scenario.resolve(ws.first), scenario.resolve(ws.second));
      for (const Hole& h : holes_on_wall(wall, ws.r_max > 0 ? ws.r_max : default_hole_rank()))
        spec.elements.push_back(PlotHole{h.point, to_string(h.delta)});
    }
  }
  return spec;
}

}  // namespace k3walls
