#pragma once

#include "k3walls/mukai_lattice.hpp"
#include "k3walls/tilt_plane.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace k3walls {

// quad * (beta^2 + alpha^2) + lin * beta + constant = 0
struct WallEquation {
  Integer quad;
  Integer lin;
  Integer constant;

  Rational evaluate(const Rational& beta, const Rational& alpha_sq) const;
  // Divided by the content, leading nonzero coefficient positive.
  WallEquation normalized() const;

  friend bool operator==(const WallEquation&, const WallEquation&) = default;
};

// "6(β²+α²)+5β+1=0"
std::string to_string(const WallEquation& e);

enum class WallKind { semicircle, vertical, degenerate };

std::string_view to_string(WallKind kind);

class NumericalWall {
 public:
  WallKind kind() const { return kind_; }
  const MukaiVector& first() const { return first_; }
  const MukaiVector& second() const { return second_; }
  const WallEquation& equation() const { return equation_; }

  // Semicircle only.
  const Rational& center() const;
  const Rational& radius_sq() const;
  // Vertical only.
  const Rational& line_beta() const;

  bool contains(const StabPoint& p) const;

  // Same numerical wall, regardless of the generating pair.
  friend bool operator==(const NumericalWall& a, const NumericalWall& b) {
    return a.equation_.normalized() == b.equation_.normalized();
  }

 private:
  friend NumericalWall wall_between(const MukaiVector& v, const MukaiVector& w);
  NumericalWall(MukaiVector v, MukaiVector w) : first_(std::move(v)), second_(std::move(w)) {}

  MukaiVector first_;
  MukaiVector second_;
  WallKind kind_ = WallKind::degenerate;
  WallEquation equation_;
  Rational center_;
  Rational radius_sq_;
  Rational line_beta_;
};

// Locus nu(v) = nu(w). Throws degenerate_wall for proportional classes.
NumericalWall wall_between(const MukaiVector& v, const MukaiVector& w);

// Roots of the alpha = 0 restriction quad*b^2 + lin*b + constant.
struct WallEndpoints {
  std::optional<std::pair<Rational, Rational>> roots;  // ascending, when rational
  Integer quad, lin, constant;                          // primitive, always present

  bool rational() const { return roots.has_value(); }
};

// "(-1/2, -1/3)" or "irrational: 7β²+6β+1"
std::string to_string(const WallEndpoints& e);

WallEndpoints wall_endpoints(const NumericalWall& wall);

// (center, radius^2)
StabPoint top_point(const NumericalWall& wall);

// Point where Z(v) = 0, if it lies in the upper half plane.
std::optional<StabPoint> charge_vanishing_point(const MukaiVector& v);

struct Hole {
  MukaiVector delta;
  StabPoint point;
};

// "(5,-2,5)@(-2/5, 1/150)"
std::string to_string(const Hole& h);

// Spherical classes of rank 1..r_max whose vanishing point lies on the wall.
// Sorted by (r, c).
std::vector<Hole> holes_on_wall(const NumericalWall& wall, int r_max = 20);

enum class NuCurveShape { hyperbola, pair_of_lines, parabola, vertical_line, empty };

std::string_view to_string(NuCurveShape shape);

// Re Z(v) = 0 as  beta_sq*b^2 + alpha_sq*a^2 + beta*b + constant = 0.
struct NuZeroCurve {
  MukaiVector v;
  NuCurveShape shape;
  Integer beta_sq, alpha_sq, beta, constant;

  Rational evaluate(const Rational& b, const Rational& a_sq) const;
  // alpha^2 on the curve over beta (r != 0), may be <= 0.
  Rational alpha_sq_at(const Rational& b) const;
  // Vertical line position (r == 0, c != 0).
  Rational line_beta() const;
};

NuZeroCurve nu_zero_curve(const MukaiVector& v);

enum class Nesting { nested_1_in_2, nested_2_in_1, disjoint, crossing, equal };

std::string_view to_string(Nesting n);

// Exact comparison of two semicircles; throws not_semicircular otherwise.
Nesting nesting_relation(const NumericalWall& w1, const NumericalWall& w2);

// For v^2 < 0: the vanishing point of Z(v), after checking that every wall
// W(v, w) passes through it. Throws invariant_violation if one misses.
StabPoint common_point_check(const MukaiVector& v, std::span<const MukaiVector> sample_w);

}  // namespace k3walls
