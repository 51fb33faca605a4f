#pragma once

#include "k3walls/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace k3walls {

// K3 surface with Pic = Z*L, L^2 = 2g - 2.
class PolarizedK3 {
 public:
  explicit PolarizedK3(int genus);

  int genus() const { return genus_; }
  Integer lsquare() const { return Integer(2 * genus_ - 2); }

  friend bool operator==(const PolarizedK3&, const PolarizedK3&) = default;

 private:
  int genus_;
};

// Mukai vector (r, c*L, s) in H^0 + NS + H^4.
class MukaiVector {
 public:
  MukaiVector(const PolarizedK3& surface, Integer r, Integer c, Integer s);

  const PolarizedK3& surface() const { return surface_; }
  const Integer& r() const { return r_; }
  const Integer& c() const { return c_; }
  const Integer& s() const { return s_; }

  MukaiVector operator-() const;
  MukaiVector& operator+=(const MukaiVector& other);
  MukaiVector& operator-=(const MukaiVector& other);
  MukaiVector& operator*=(const Integer& k);

  friend MukaiVector operator+(MukaiVector a, const MukaiVector& b) { return a += b; }
  friend MukaiVector operator-(MukaiVector a, const MukaiVector& b) { return a -= b; }
  friend MukaiVector operator*(const Integer& k, MukaiVector a) { return a *= k; }
  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;

 private:
  PolarizedK3 surface_;
  Integer r_, c_, s_;
};

// "(r,c,s)"
std::string to_string(const MukaiVector& v);

// Accepts "r,c,s" with optional parentheses and whitespace.
MukaiVector parse_mukai_vector(const PolarizedK3& surface, std::string_view text);

// <v,w> = c c' L^2 - r s' - r' s
Integer pairing(const MukaiVector& v, const MukaiVector& w);
Integer self_pairing(const MukaiVector& v);
// chi(v,w) = -<v,w>
Integer euler_characteristic(const MukaiVector& v, const MukaiVector& w);

bool is_primitive(const MukaiVector& v);
bool is_spherical(const MukaiVector& v);

// v^2 + 2, or nullopt ("empty") when v^2 < -2. Throws not_primitive.
std::optional<Integer> moduli_dimension(const MukaiVector& v);

// c/r, +inf for r == 0.
ExtendedRational slope(const MukaiVector& v);

MukaiVector dual(const MukaiVector& v);
MukaiVector shift(const MukaiVector& v);

// Open interval lower < beta < upper.
struct BetaWindow {
  Rational lower;
  Rational upper;

  bool empty() const { return !(lower < upper); }
  bool contains(const Rational& beta) const { return lower < beta && beta < upper; }
};

// Spherical classes with 1 <= r <= r_max and c/r in the window, sorted by (r, c).
std::vector<MukaiVector> spherical_enumerate(const PolarizedK3& surface, int r_max,
                                             const BetaWindow& window);

}  // namespace k3walls
