#include "k3walls/tilt_plane.hpp"

#include "k3walls/error.hpp"

namespace k3walls {

StabPoint::StabPoint(Rational beta, Rational alpha_sq)
    : beta_(std::move(beta)), alpha_sq_(std::move(alpha_sq)) {
  if (alpha_sq_ <= 0) throw Error(ErrorKind::precondition, "alpha^2 must be positive");
}

std::string to_string(const StabPoint& p) {
  return "(" + to_string(p.beta()) + ", " + to_string(p.alpha_sq()) + ")";
}

ChargeValue central_charge(const MukaiVector& v, const StabPoint& p) {
  const Rational l2(v.surface().lsquare());
  const Rational& b = p.beta();
  const Rational re = -(Rational(v.s()) - b * l2 * v.c() +
                        (b * b - p.alpha_sq()) / 2 * l2 * v.r());
  const Rational im = l2 * (Rational(v.c()) - b * v.r());
  return {re, im};
}

ExtendedRational tilt_slope(const MukaiVector& v, const StabPoint& p) {
  const ChargeValue z = central_charge(v, p);
  if (z.im > 0) return ExtendedRational(-z.re / z.im);
  if (z.im == 0 && z.re < 0) return ExtendedRational::infinity();
  if (z.im == 0 && z.re == 0)
    throw Error(ErrorKind::charge_vanishes, "Z" + to_string(v) + " vanishes at " + to_string(p));
  throw Error(ErrorKind::outside_heart, to_string(v) + " is not a class in the heart at " + to_string(p));
}

bool same_tilt_slope(const MukaiVector& v, const MukaiVector& w, const StabPoint& p) {
  const ChargeValue a = central_charge(v, p);
  const ChargeValue b = central_charge(w, p);
  return a.re * b.im == b.re * a.im;
}

std::string_view to_string(HeartMembership m) {
  switch (m) {
    case HeartMembership::sheaf_in_heart: return "sheaf_in_heart";
    case HeartMembership::shift_in_heart: return "shift_in_heart";
    case HeartMembership::neither: return "neither";
  }
  return "neither";
}

HeartMembership heart_membership(const MukaiVector& v, bool mu_stable, const Rational& beta) {
  if (!mu_stable) return HeartMembership::neither;
  if (v.r() == 0) {
    if (v.c() == 0 && v.s() == 0) return HeartMembership::neither;
    return HeartMembership::sheaf_in_heart;
  }
  // c/r is also the slope of -v, so both signs of r share the threshold.
  const Rational mu = make_rational(v.c(), v.r());
  return beta < mu ? HeartMembership::sheaf_in_heart : HeartMembership::shift_in_heart;
}

bool minimal_rank_criterion(const MukaiVector& v, const Rational& beta0) {
  const Integer a = numerator_of(beta0);
  const Integer b = denominator_of(beta0);
  return abs(v.c() * b - a * v.r()) == 1;
}

}  // namespace k3walls
