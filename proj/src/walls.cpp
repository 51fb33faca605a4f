#include "k3walls/walls.hpp"

#include "k3walls/error.hpp"

#include <algorithm>

namespace k3walls {

Rational WallEquation::evaluate(const Rational& beta, const Rational& alpha_sq) const {
  return Rational(quad) * (beta * beta + alpha_sq) + Rational(lin) * beta + Rational(constant);
}

WallEquation WallEquation::normalized() const {
  Integer g = gcd_of(gcd_of(quad, lin), constant);
  if (g == 0) return *this;
  const Integer& lead = quad != 0 ? quad : (lin != 0 ? lin : constant);
  if (lead < 0) g = -g;
  return {quad / g, lin / g, constant / g};
}

namespace {

// Appends "+5β", "-β", "+1" style terms; `first` suppresses a leading '+'.
void append_term(std::string& out, const Integer& coeff, std::string_view unit, bool& first) {
  if (coeff == 0) return;
  const Integer mag = abs(coeff);
  if (coeff < 0)
    out += "-";
  else if (!first)
    out += "+";
  if (unit.empty() || mag != 1) out += mag.str();
  out += unit;
  first = false;
}

std::string quadratic_in_beta(const Integer& a, const Integer& b, const Integer& c) {
  std::string out;
  bool first = true;
  append_term(out, a, "β²", first);
  append_term(out, b, "β", first);
  append_term(out, c, "", first);
  if (first) out = "0";
  return out;
}

}  // namespace

std::string to_string(const WallEquation& e) {
  std::string out;
  bool first = true;
  append_term(out, e.quad, "(β²+α²)", first);
  append_term(out, e.lin, "β", first);
  append_term(out, e.constant, "", first);
  if (first) out = "0";
  return out + "=0";
}

std::string_view to_string(WallKind kind) {
  switch (kind) {
    case WallKind::semicircle: return "semicircle";
    case WallKind::vertical: return "vertical";
    case WallKind::degenerate: return "degenerate";
  }
  return "degenerate";
}

const Rational& NumericalWall::center() const {
  if (kind_ != WallKind::semicircle) throw Error(ErrorKind::not_semicircular, "wall has no center");
  return center_;
}

const Rational& NumericalWall::radius_sq() const {
  if (kind_ != WallKind::semicircle) throw Error(ErrorKind::not_semicircular, "wall has no radius");
  return radius_sq_;
}

const Rational& NumericalWall::line_beta() const {
  if (kind_ != WallKind::vertical) throw Error(ErrorKind::precondition, "wall is not vertical");
  return line_beta_;
}

bool NumericalWall::contains(const StabPoint& p) const {
  return kind_ != WallKind::degenerate && equation_.evaluate(p.beta(), p.alpha_sq()) == 0;
}

NumericalWall wall_between(const MukaiVector& v, const MukaiVector& w) {
  if (!(v.surface() == w.surface()))
    throw Error(ErrorKind::lattice_mismatch, "wall between classes on different surfaces");
  const Integer d = v.c() * w.r() - w.c() * v.r();
  const Integer b = v.s() * w.r() - w.s() * v.r();
  const Integer c = w.s() * v.c() - v.s() * w.c();
  if (d == 0 && b == 0 && c == 0)
    throw Error(ErrorKind::degenerate_wall, to_string(v) + " and " + to_string(w) + " are proportional");

  const Integer l2 = v.surface().lsquare();
  NumericalWall wall(v, w);
  wall.equation_ = {-(l2 / 2) * d, b, c};
  if (d != 0) {
    const Rational denom(l2 * d);
    wall.center_ = Rational(b) / denom;
    wall.radius_sq_ = wall.center_ * wall.center_ + Rational(2 * c) / denom;
    wall.kind_ = wall.radius_sq_ > 0 ? WallKind::semicircle : WallKind::degenerate;
  } else if (b != 0) {
    wall.line_beta_ = make_rational(-c, b);
    wall.kind_ = WallKind::vertical;
  }
  return wall;
}

std::string to_string(const WallEndpoints& e) {
  if (e.rational())
    return "(" + to_string(e.roots->first) + ", " + to_string(e.roots->second) + ")";
  return "irrational: " + quadratic_in_beta(e.quad, e.lin, e.constant);
}

WallEndpoints wall_endpoints(const NumericalWall& wall) {
  if (wall.kind() != WallKind::semicircle)
    throw Error(ErrorKind::no_endpoints, std::string(to_string(wall.kind())) + " wall has no endpoints");
  const WallEquation e = wall.equation().normalized();
  WallEndpoints out{std::nullopt, e.quad, e.lin, e.constant};
  const Integer disc = e.lin * e.lin - 4 * e.quad * e.constant;
  if (auto root = exact_sqrt(disc)) {
    const Rational lo = make_rational(-e.lin - *root, 2 * e.quad);
    const Rational hi = make_rational(-e.lin + *root, 2 * e.quad);
    out.roots = std::make_pair(std::min(lo, hi), std::max(lo, hi));
  }
  return out;
}

StabPoint top_point(const NumericalWall& wall) {
  return StabPoint(wall.center(), wall.radius_sq());
}

std::optional<StabPoint> charge_vanishing_point(const MukaiVector& v) {
  if (v.r() == 0) return std::nullopt;
  const Rational l2(v.surface().lsquare());
  const Rational beta = make_rational(v.c(), v.r());
  const Rational alpha_sq = Rational(2 * v.s()) / (l2 * v.r()) - beta * beta;
  if (alpha_sq <= 0) return std::nullopt;
  return StabPoint(beta, alpha_sq);
}

std::string to_string(const Hole& h) { return to_string(h.delta) + "@" + to_string(h.point); }

std::vector<Hole> holes_on_wall(const NumericalWall& wall, int r_max) {
  std::vector<Hole> out;
  BetaWindow window;
  switch (wall.kind()) {
    case WallKind::degenerate:
      return out;
    case WallKind::semicircle: {
      // Rational upper bound for the radius: sqrt(n/d) <= ceil(sqrt(n d))/d.
      const Integer n = numerator_of(wall.radius_sq());
      const Integer d = denominator_of(wall.radius_sq());
      const Rational radius_bound = make_rational(ceil_sqrt(n * d), d);
      window = {wall.center() - radius_bound, wall.center() + radius_bound};
      break;
    }
    case WallKind::vertical:
      window = {wall.line_beta() - 1, wall.line_beta() + 1};
      break;
  }
  for (const MukaiVector& delta : spherical_enumerate(wall.first().surface(), r_max, window)) {
    const auto p = charge_vanishing_point(delta);
    if (p && wall.contains(*p)) out.push_back({delta, *p});
  }
  return out;
}

std::string_view to_string(NuCurveShape shape) {
  switch (shape) {
    case NuCurveShape::hyperbola: return "hyperbola";
    case NuCurveShape::pair_of_lines: return "pair_of_lines";
    case NuCurveShape::parabola: return "parabola";
    case NuCurveShape::vertical_line: return "vertical_line";
    case NuCurveShape::empty: return "empty";
  }
  return "empty";
}

Rational NuZeroCurve::evaluate(const Rational& b, const Rational& a_sq) const {
  return Rational(beta_sq) * b * b + Rational(alpha_sq) * a_sq + Rational(beta) * b +
         Rational(constant);
}

Rational NuZeroCurve::alpha_sq_at(const Rational& b) const {
  if (alpha_sq == 0) throw Error(ErrorKind::precondition, "curve is not a graph over beta");
  return -(Rational(beta_sq) * b * b + Rational(beta) * b + Rational(constant)) / Rational(alpha_sq);
}

Rational NuZeroCurve::line_beta() const {
  if (shape != NuCurveShape::vertical_line) throw Error(ErrorKind::precondition, "not a vertical line");
  return make_rational(-constant, beta);
}

NuZeroCurve nu_zero_curve(const MukaiVector& v) {
  const Integer l2 = v.surface().lsquare();
  // -Re Z = (L^2 r/2)(b^2 - a^2) - L^2 c b + s
  NuZeroCurve curve{v, NuCurveShape::empty, (l2 / 2) * v.r(), -(l2 / 2) * v.r(), -l2 * v.c(), v.s()};
  const Integer sq = self_pairing(v);
  if (v.r() == 0)
    curve.shape = v.c() == 0 ? NuCurveShape::empty : NuCurveShape::vertical_line;
  else if (sq > 0)
    curve.shape = NuCurveShape::hyperbola;
  else if (sq == 0)
    curve.shape = NuCurveShape::pair_of_lines;
  else
    curve.shape = NuCurveShape::parabola;
  return curve;
}

std::string_view to_string(Nesting n) {
  switch (n) {
    case Nesting::nested_1_in_2: return "nested_1_in_2";
    case Nesting::nested_2_in_1: return "nested_2_in_1";
    case Nesting::disjoint: return "disjoint";
    case Nesting::crossing: return "crossing";
    case Nesting::equal: return "equal";
  }
  return "disjoint";
}

Nesting nesting_relation(const NumericalWall& w1, const NumericalWall& w2) {
  if (w1.kind() != WallKind::semicircle || w2.kind() != WallKind::semicircle)
    throw Error(ErrorKind::not_semicircular, "nesting is defined for semicircular walls");
  const Rational& c1 = w1.center();
  const Rational& c2 = w2.center();
  const Rational& r1 = w1.radius_sq();
  const Rational& r2 = w2.radius_sq();
  if (c1 == c2) {
    if (r1 == r2) return Nesting::equal;
    return r1 < r2 ? Nesting::nested_1_in_2 : Nesting::nested_2_in_1;
  }
  // Radical line of the two circles, then its height on circle 1.
  const Rational beta = (r1 - r2 + c2 * c2 - c1 * c1) / (2 * (c2 - c1));
  const Rational height_sq = r1 - (beta - c1) * (beta - c1);
  if (height_sq > 0) return Nesting::crossing;
  // No crossing: internal iff the center distance is below the larger radius.
  const Rational dist_sq = (c1 - c2) * (c1 - c2);
  const bool first_larger = r1 > r2;
  const Rational& big = first_larger ? r1 : r2;
  if (dist_sq < big) return first_larger ? Nesting::nested_2_in_1 : Nesting::nested_1_in_2;
  return Nesting::disjoint;
}

StabPoint common_point_check(const MukaiVector& v, std::span<const MukaiVector> sample_w) {
  if (self_pairing(v) >= 0)
    throw Error(ErrorKind::precondition, "common point requires v^2 < 0");
  const StabPoint p = *charge_vanishing_point(v);
  for (const MukaiVector& w : sample_w) {
    const Integer d = v.c() * w.r() - w.c() * v.r();
    const Integer b = v.s() * w.r() - w.s() * v.r();
    const Integer c = w.s() * v.c() - v.s() * w.c();
    if (d == 0 && b == 0 && c == 0) continue;  // proportional: no wall
    const NumericalWall wall = wall_between(v, w);
    if (!wall.contains(p))
      throw Error(ErrorKind::invariant_violation,
                  "wall W(" + to_string(v) + ", " + to_string(w) + ") misses " + to_string(p));
  }
  return p;
}

}  // namespace k3walls
