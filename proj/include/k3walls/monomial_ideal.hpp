#pragma once

#include "k3walls/numeric.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace k3walls {

// x^x * y^y
struct Monomial {
  int x = 0;
  int y = 0;

  bool divides(const Monomial& m) const { return x <= m.x && y <= m.y; }
  int degree() const { return x + y; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Cofinite monomial ideal in k[[x,y]], stored as its staircase of minimal
// generators sorted by increasing x-exponent.
class MonomialIdeal {
 public:
  // Minimalizes; throws not_cofinite if no pure powers of both x and y appear.
  static MonomialIdeal from_generators(std::vector<Monomial> gens);
  static MonomialIdeal unit();
  static MonomialIdeal maximal_power(int k);  // (x,y)^k

  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains(const Monomial& m) const;
  bool is_unit() const { return gens_.size() == 1 && gens_.front() == Monomial{0, 0}; }
  int max_degree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ <=> b.gens_;
  }

 private:
  std::vector<Monomial> gens_;
};

// "x^3, x^2*y, x*y^3, y^5"; "1" for the unit ideal.
std::string to_string(const MonomialIdeal& ideal);
std::string to_string(const Monomial& m);

// Inverse of to_string. Whitespace-insensitive, '*' optional, exponents 1 may be omitted.
MonomialIdeal parse_monomial_ideal(std::string_view text);

// dim k[[x,y]]/I
std::int64_t colength(const MonomialIdeal& ideal);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
bool is_subideal(const MonomialIdeal& small, const MonomialIdeal& big);
int min_generators(const MonomialIdeal& ideal);

// A = (x, y^m) and B = (x^ceil((f-j)/m) y^j : 0 <= j <= f) for a curvilinear
// scheme of length m inside a cycle of degree f.
struct IdealPair {
  MonomialIdeal a;
  MonomialIdeal b;
};
IdealPair ideallemma_target(int m, int f);
// A * B: the ideal containing every 2x2 minor of sections in A e1 + B e2.
MonomialIdeal ideallemma_product(int m, int f);

// (4/3) * colength
Rational hs_multiplicity_bound(std::int64_t colength);

struct SubidealSearchResult {
  std::int64_t colength = 0;
  MonomialIdeal witness = MonomialIdeal::unit();
  std::int64_t visited = 0;
};

// max generator degree of J + k + 2
int default_horizon(const MonomialIdeal& j, int max_gens);

// Minimum colength over cofinite monomial I in J with <= max_gens minimal
// generators, each of total degree <= degree_bound. Throws search_horizon if none exists.
SubidealSearchResult min_colength_subideal(const MonomialIdeal& j, int max_gens, int degree_bound);

// Thread-safe memo for min_colength_subideal.
class SubidealSearchCache {
 public:
  SubidealSearchResult get(const MonomialIdeal& j, int max_gens, int degree_bound);
  SubidealSearchResult get(const MonomialIdeal& j, int max_gens);

  std::int64_t hits() const;
  std::int64_t misses() const;
  // Horizon slack added by get(j, k); read once from K3WALLS_HORIZON_SLACK.
  static int horizon_slack();

 private:
  using Key = std::tuple<MonomialIdeal, int, int>;
  mutable std::mutex mutex_;
  std::map<Key, SubidealSearchResult> entries_;
  std::int64_t hits_ = 0;
  std::int64_t misses_ = 0;
};

}  // namespace k3walls
