#pragma once

#include "k3walls/mukai_lattice.hpp"

#include <string>
#include <string_view>

namespace k3walls {

// Point sigma_{beta,alpha} of the (beta, alpha)-plane, alpha > 0, stored via alpha^2.
class StabPoint {
 public:
  StabPoint(Rational beta, Rational alpha_sq);

  const Rational& beta() const { return beta_; }
  const Rational& alpha_sq() const { return alpha_sq_; }

  friend bool operator==(const StabPoint&, const StabPoint&) = default;

 private:
  Rational beta_;
  Rational alpha_sq_;
};

// "(beta, alpha^2)"
std::string to_string(const StabPoint& p);

struct ChargeValue {
  Rational re;
  Rational im;
};

// Z(v) = -(s - beta L^2 c + (beta^2 - alpha^2)/2 L^2 r) + i L^2 (c - beta r)
ChargeValue central_charge(const MukaiVector& v, const StabPoint& p);

// nu = -Re Z / Im Z. +inf when Im Z = 0 and Re Z < 0.
// Throws charge_vanishes at a hole, outside_heart otherwise.
ExtendedRational tilt_slope(const MukaiVector& v, const StabPoint& p);

// Re Z(v) Im Z(w) == Re Z(w) Im Z(v); defined for every pair of classes.
bool same_tilt_slope(const MukaiVector& v, const MukaiVector& w, const StabPoint& p);

enum class HeartMembership { sheaf_in_heart, shift_in_heart, neither };

std::string_view to_string(HeartMembership m);

// Membership of a mu-stable sheaf of class v (or, for r < 0, of F with v(F) = -v)
// in Coh^beta. Without the mu-stability flag nothing can be concluded.
HeartMembership heart_membership(const MukaiVector& v, bool mu_stable, const Rational& beta);

// |c b - a r| == 1 for beta0 = a/b in lowest terms.
bool minimal_rank_criterion(const MukaiVector& v, const Rational& beta0);

}  // namespace k3walls
