#include "k3walls/monomial_ideal.hpp"

#include "k3walls/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

namespace k3walls {

MonomialIdeal MonomialIdeal::from_generators(std::vector<Monomial> gens) {
  for (const Monomial& m : gens)
    if (m.x < 0 || m.y < 0) throw Error(ErrorKind::precondition, "negative exponent");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Sorted by x then y: keep a generator iff its y is below every earlier y.
  std::vector<Monomial> minimal;
  for (const Monomial& m : gens)
    if (minimal.empty() || m.y < minimal.back().y) minimal.push_back(m);
  if (minimal.empty() || minimal.front().x != 0 || minimal.back().y != 0)
    throw Error(ErrorKind::not_cofinite, "ideal does not contain pure powers of x and y");
  MonomialIdeal ideal;
  ideal.gens_ = std::move(minimal);
  return ideal;
}

MonomialIdeal MonomialIdeal::unit() { return from_generators({{0, 0}}); }

MonomialIdeal MonomialIdeal::maximal_power(int k) {
  std::vector<Monomial> gens;
  for (int i = 0; i <= k; ++i) gens.push_back({i, k - i});
  return from_generators(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

int MonomialIdeal::max_degree() const {
  int d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

std::string to_string(const Monomial& m) {
  if (m.x == 0 && m.y == 0) return "1";
  std::string out;
  if (m.x > 0) out += m.x == 1 ? "x" : "x^" + std::to_string(m.x);
  if (m.x > 0 && m.y > 0) out += "*";
  if (m.y > 0) out += m.y == 1 ? "y" : "y^" + std::to_string(m.y);
  return out;
}

std::string to_string(const MonomialIdeal& ideal) {
  // Display order: descending x-exponent, as in (x^3, x^2*y, ..., y^5).
  std::string out;
  const auto& gens = ideal.generators();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    if (!out.empty()) out += ", ";
    out += to_string(*it);
  }
  return out;
}

namespace {

class IdealParser {
 public:
  explicit IdealParser(std::string_view text) : text_(text) {}

  MonomialIdeal parse() {
    std::vector<Monomial> gens;
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty ideal", pos_);
    while (true) {
      gens.push_back(monomial());
      skip_space();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != ',') throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
      ++pos_;
    }
    return MonomialIdeal::from_generators(std::move(gens));
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int exponent() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected exponent", pos_);
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    return std::atoi(std::string(text_.substr(start, pos_ - start)).c_str());
  }

  Monomial monomial() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '1') {
      ++pos_;
      return {0, 0};
    }
    Monomial m;
    bool any = false;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      const char ch = text_[pos_];
      if (ch == 'x' || ch == 'y') {
        ++pos_;
        (ch == 'x' ? m.x : m.y) += exponent();
        any = true;
      } else if (ch == '*' && any) {
        ++pos_;
        skip_space();
        if (pos_ >= text_.size() || (text_[pos_] != 'x' && text_[pos_] != 'y'))
          throw ParseError("expected variable after '*'", pos_);
      } else {
        break;
      }
    }
    if (!any) throw ParseError("expected monomial", pos_);
    return m;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialIdeal parse_monomial_ideal(std::string_view text) { return IdealParser(text).parse(); }

std::int64_t colength(const MonomialIdeal& ideal) {
  const auto& g = ideal.generators();
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    total += static_cast<std::int64_t>(g[i + 1].x - g[i].x) * g[i].y;
  return total;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  for (const Monomial& p : a.generators())
    for (const Monomial& q : b.generators()) gens.push_back({p.x + q.x, p.y + q.y});
  return MonomialIdeal::from_generators(std::move(gens));
}

bool is_subideal(const MonomialIdeal& small, const MonomialIdeal& big) {
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Monomial& g) { return big.contains(g); });
}

int min_generators(const MonomialIdeal& ideal) { return static_cast<int>(ideal.generators().size()); }

IdealPair ideallemma_target(int m, int f) {
  if (m < 1) throw Error(ErrorKind::precondition, "scheme length m must be >= 1");
  if (f < m) throw Error(ErrorKind::precondition, "cycle degree f must be >= m");
  std::vector<Monomial> b;
  for (int j = 0; j <= f; ++j) b.push_back({(f - j + m - 1) / m, j});
  return {MonomialIdeal::from_generators({{1, 0}, {0, m}}),
          MonomialIdeal::from_generators(std::move(b))};
}

MonomialIdeal ideallemma_product(int m, int f) {
  const IdealPair target = ideallemma_target(m, f);
  return product(target.a, target.b);
}

Rational hs_multiplicity_bound(std::int64_t colength) { return Rational(4 * colength) / 3; }

int default_horizon(const MonomialIdeal& j, int max_gens) { return j.max_degree() + max_gens + 2; }

namespace {

// Depth-first walk over staircases (0,b0) < (a1,b1) < ... < (a,0) inside J.
class StaircaseSearch {
 public:
  StaircaseSearch(const MonomialIdeal& j, int max_gens, int horizon)
      : j_(j), max_gens_(max_gens), horizon_(horizon) {}

  SubidealSearchResult run() {
    for (int b0 = 0; b0 <= horizon_; ++b0) {
      if (!j_.contains({0, b0})) continue;
      stack_.assign(1, {0, b0});
      if (b0 == 0) {
        record(0);
        break;
      }
      extend(0);
    }
    if (best_ == kNone)
      throw Error(ErrorKind::search_horizon,
                  "no cofinite subideal of (" + to_string(j_) + ") with <= " +
                      std::to_string(max_gens_) + " generators within degree " +
                      std::to_string(horizon_));
    return {best_, MonomialIdeal::from_generators(best_gens_), visited_};
  }

 private:
  static constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

  void record(std::int64_t total) {
    if (total < best_) {
      best_ = total;
      best_gens_ = stack_;
    }
  }

  void extend(std::int64_t partial) {
    const Monomial prev = stack_.back();
    const int used = static_cast<int>(stack_.size());
    for (int y = prev.y - 1; y >= 0; --y) {
      // A non-final generator needs room for one more after it.
      if (y > 0 && used + 1 >= max_gens_) continue;
      if (y == 0 && used + 1 > max_gens_) continue;
      for (int x = prev.x + 1; x + y <= horizon_; ++x) {
        const std::int64_t total = partial + static_cast<std::int64_t>(x - prev.x) * prev.y;
        if (total >= best_) break;
        if (!j_.contains({x, y})) continue;
        ++visited_;
        stack_.push_back({x, y});
        if (y == 0)
          record(total);
        else
          extend(total);
        stack_.pop_back();
      }
    }
  }

  const MonomialIdeal& j_;
  int max_gens_;
  int horizon_;
  std::vector<Monomial> stack_;
  std::vector<Monomial> best_gens_;
  std::int64_t best_ = kNone;
  std::int64_t visited_ = 0;
};

}  // namespace

SubidealSearchResult min_colength_subideal(const MonomialIdeal& j, int max_gens, int degree_bound) {
  if (max_gens < 1) throw Error(ErrorKind::precondition, "max_gens must be >= 1");
  return StaircaseSearch(j, max_gens, degree_bound).run();
}

SubidealSearchResult SubidealSearchCache::get(const MonomialIdeal& j, int max_gens,
                                              int degree_bound) {
  Key key{j, max_gens, degree_bound};
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) {
      ++hits_;
      return it->second;
    }
  }
  SubidealSearchResult result = min_colength_subideal(j, max_gens, degree_bound);
  std::lock_guard lock(mutex_);
  ++misses_;
  entries_.emplace(std::move(key), result);
  return result;
}

SubidealSearchResult SubidealSearchCache::get(const MonomialIdeal& j, int max_gens) {
  return get(j, max_gens, default_horizon(j, max_gens) + horizon_slack());
}

std::int64_t SubidealSearchCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::int64_t SubidealSearchCache::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

int SubidealSearchCache::horizon_slack() {
  static const int slack = [] {
    const char* env = std::getenv("K3WALLS_HORIZON_SLACK");
    if (env == nullptr) return 0;
    const int value = std::atoi(env);
    return value > 0 ? value : 0;
  }();
  return slack;
}

}  // namespace k3walls
