#include "k3walls/mukai_lattice.hpp"

#include "k3walls/error.hpp"

#include <cctype>

namespace k3walls {

PolarizedK3::PolarizedK3(int genus) : genus_(genus) {
  if (genus < 2) throw Error(ErrorKind::precondition, "genus must be >= 2");
}

MukaiVector::MukaiVector(const PolarizedK3& surface, Integer r, Integer c, Integer s)
    : surface_(surface), r_(std::move(r)), c_(std::move(c)), s_(std::move(s)) {}

namespace {

void require_same_surface(const MukaiVector& a, const MukaiVector& b) {
  if (!(a.surface() == b.surface()))
    throw Error(ErrorKind::lattice_mismatch,
                "Mukai vectors on genus " + std::to_string(a.surface().genus()) + " and genus " +
                    std::to_string(b.surface().genus()));
}

}  // namespace

MukaiVector MukaiVector::operator-() const { return MukaiVector(surface_, -r_, -c_, -s_); }

MukaiVector& MukaiVector::operator+=(const MukaiVector& other) {
  require_same_surface(*this, other);
  r_ += other.r_;
  c_ += other.c_;
  s_ += other.s_;
  return *this;
}

MukaiVector& MukaiVector::operator-=(const MukaiVector& other) { return *this += -other; }

MukaiVector& MukaiVector::operator*=(const Integer& k) {
  r_ *= k;
  c_ *= k;
  s_ *= k;
  return *this;
}

std::string to_string(const MukaiVector& v) {
  return "(" + to_string(v.r()) + "," + to_string(v.c()) + "," + to_string(v.s()) + ")";
}

MukaiVector parse_mukai_vector(const PolarizedK3& surface, std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  const bool paren = pos < text.size() && text[pos] == '(';
  if (paren) ++pos;

  Integer parts[3];
  for (int i = 0; i < 3; ++i) {
    skip_space();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected an integer in Mukai vector", pos);
    parts[i] = parse_integer(text.substr(start, pos - start));
    skip_space();
    if (i < 2) {
      if (pos >= text.size() || text[pos] != ',')
        throw ParseError("expected ',' in Mukai vector", pos);
      ++pos;
    }
  }
  if (paren) {
    if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
  }
  skip_space();
  if (pos != text.size()) throw ParseError("trailing characters in Mukai vector", pos);
  return MukaiVector(surface, parts[0], parts[1], parts[2]);
}

Integer pairing(const MukaiVector& v, const MukaiVector& w) {
  require_same_surface(v, w);
  return v.c() * w.c() * v.surface().lsquare() - v.r() * w.s() - w.r() * v.s();
}

Integer self_pairing(const MukaiVector& v) { return pairing(v, v); }

Integer euler_characteristic(const MukaiVector& v, const MukaiVector& w) {
  return -pairing(v, w);
}

bool is_primitive(const MukaiVector& v) {
  return gcd_of(gcd_of(v.r(), v.c()), v.s()) == 1;
}

bool is_spherical(const MukaiVector& v) { return self_pairing(v) == -2; }

std::optional<Integer> moduli_dimension(const MukaiVector& v) {
  if (!is_primitive(v)) throw Error(ErrorKind::not_primitive, to_string(v) + " is not primitive");
  const Integer sq = self_pairing(v);
  if (sq < -2) return std::nullopt;
  return sq + 2;
}

ExtendedRational slope(const MukaiVector& v) {
  if (v.r() == 0) return ExtendedRational::infinity();
  return make_rational(v.c(), v.r());
}

MukaiVector dual(const MukaiVector& v) { return MukaiVector(v.surface(), v.r(), -v.c(), v.s()); }

MukaiVector shift(const MukaiVector& v) { return -v; }

std::vector<MukaiVector> spherical_enumerate(const PolarizedK3& surface, int r_max,
                                             const BetaWindow& window) {
  std::vector<MukaiVector> out;
  if (window.empty()) return out;
  // v^2 = -2  <=>  r s = (g-1) c^2 + 1
  const Integer half = surface.lsquare() / 2;
  for (int r = 1; r <= r_max; ++r) {
    const Integer c_lo = floor_of(window.lower * r) + 1;
    const Integer c_hi = ceil_of(window.upper * r) - 1;
    for (Integer c = c_lo; c <= c_hi; ++c) {
      const Integer numerator = half * c * c + 1;
      if (numerator % r != 0) continue;
      out.emplace_back(surface, Integer(r), c, Integer(numerator / r));
    }
  }
  return out;
}

}  // namespace k3walls
