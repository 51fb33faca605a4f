#include "k3walls/numeric.hpp"

#include "k3walls/error.hpp"

#include <cctype>

namespace k3walls {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::lattice_mismatch: return "lattice_mismatch";
    case ErrorKind::not_primitive: return "not_primitive";
    case ErrorKind::degenerate_wall: return "degenerate_wall";
    case ErrorKind::no_endpoints: return "no_endpoints";
    case ErrorKind::not_semicircular: return "not_semicircular";
    case ErrorKind::outside_heart: return "outside_heart";
    case ErrorKind::charge_vanishes: return "charge_vanishes";
    case ErrorKind::invariant_violation: return "invariant_violation";
    case ErrorKind::not_cofinite: return "not_cofinite";
    case ErrorKind::search_horizon: return "search_horizon";
    case ErrorKind::not_covered: return "not_covered";
    case ErrorKind::parse: return "parse";
    case ErrorKind::config: return "config";
    case ErrorKind::unknown_genus: return "unknown_genus";
  }
  return "unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::precondition, "zero denominator");
  return Rational(num) / Rational(den);
}

Integer numerator_of(const Rational& q) { return Integer(boost::multiprecision::numerator(q)); }
Integer denominator_of(const Rational& q) {
  return Integer(boost::multiprecision::denominator(q));
}

Integer floor_of(const Rational& q) {
  const Integer n = numerator_of(q);
  const Integer d = denominator_of(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

Integer gcd_of(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(Integer(abs(a)), Integer(abs(b)));
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer root = boost::multiprecision::sqrt(n);
  if (root * root != n) return std::nullopt;
  return root;
}

Integer ceil_sqrt(const Integer& n) {
  if (n <= 0) return 0;
  Integer root = boost::multiprecision::sqrt(n);
  if (root * root < n) root += 1;
  return root;
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
  const Integer d = denominator_of(q);
  if (d == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + d.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer_token(std::string_view s, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw ParseError("expected digits", offset + i);
  Integer value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError(std::string("unexpected character '") + s[i] + "'", offset + i);
    value = value * 10 + (s[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  return parse_integer_token(trim(text), lead);
}

Rational parse_rational(std::string_view text) {
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  const std::string_view body = trim(text);
  const std::size_t slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer_token(body, lead));
  const Integer num = parse_integer_token(body.substr(0, slash), lead);
  const Integer den = parse_integer_token(body.substr(slash + 1), lead + slash + 1);
  if (den == 0) throw ParseError("zero denominator", lead + slash + 1);
  return make_rational(num, den);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

const Rational& ExtendedRational::value() const {
  if (infinite_) throw Error(ErrorKind::precondition, "value() of +infinity");
  return value_;
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_) return false;
  if (b.infinite_) return true;
  return a.value_ < b.value_;
}

std::string to_string(const ExtendedRational& q) {
  return q.is_infinite() ? std::string("+inf") : to_string(q.value());
}

}  // namespace k3walls
