#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace k3walls {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

Rational make_rational(const Integer& num, const Integer& den);
Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
Integer gcd_of(const Integer& a, const Integer& b);

// Exact square root, or nullopt when n is negative or not a perfect square.
std::optional<Integer> exact_sqrt(const Integer& n);
// Smallest integer whose square is >= n (n >= 0).
Integer ceil_sqrt(const Integer& n);

// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

double to_double(const Rational& q);

// A rational number or +infinity. Used for slopes.
class ExtendedRational {
 public:
  ExtendedRational(Rational value) : value_(std::move(value)) {}
  static ExtendedRational infinity() { return ExtendedRational(); }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);

 private:
  ExtendedRational() : infinite_(true) {}
  Rational value_{0};
  bool infinite_ = false;
};

std::string to_string(const ExtendedRational& q);

}  // namespace k3walls
