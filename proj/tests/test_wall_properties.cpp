#include "k3walls/error.hpp"
#include "k3walls/tilt_plane.hpp"
#include "k3walls/walls.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace k3walls;

namespace {

bool proportional(const MukaiVector& v, const MukaiVector& w) {
  return v.r() * w.c() == v.c() * w.r() && v.r() * w.s() == v.s() * w.r() && v.c() * w.s() == v.s() * w.c();
}

struct Generator {
  explicit Generator(int seed) : rng(seed) {}

  MukaiVector vector(const PolarizedK3& s) {
    std::uniform_int_distribution<long> coord(-9, 9);
    for (;;) {
      MukaiVector v(s, coord(rng), coord(rng), coord(rng));
      if (v.r() != 0 || v.c() != 0 || v.s() != 0) return v;
    }
  }

  MukaiVector partner(const MukaiVector& v) {
    for (;;) {
      MukaiVector w = vector(v.surface());
      if (!proportional(v, w)) return w;
    }
  }

  // Random rational in [lo, hi]
  Rational between(const Rational& lo, const Rational& hi) {
    std::uniform_int_distribution<long> t(1, 999);
    return lo + (hi - lo) * make_rational(t(rng), 1000);
  }

  std::mt19937_64 rng;
};

// Points on the wall with alpha^2 > 0, using only its stored geometry.
std::vector<StabPoint> sample_points(const NumericalWall& w, Generator& gen) {
  std::vector<StabPoint> out;
  if (w.kind() == WallKind::semicircle) {
    // min(R^2, 1) <= R, so the sampled beta stays strictly inside the diameter
    const Rational half = std::min(w.radius_sq(), Rational(1));
    const Rational lo = w.center() - half, hi = w.center() + half;
    for (int i = 0; i < 20; ++i) {
      const Rational b = gen.between(lo, hi);
      const Rational a2 = w.radius_sq() - (b - w.center()) * (b - w.center());
      if (a2 > 0) out.emplace_back(b, a2);
    }
  } else if (w.kind() == WallKind::vertical) {
    for (int i = 1; i <= 20; ++i) out.emplace_back(w.line_beta(), make_rational(i * i, 7));
  }
  return out;
}

class WallStructure : public ::testing::TestWithParam<int> {};

}  // namespace

TEST_P(WallStructure, RandomInstancesSatisfyStructureProperties) {
  const PolarizedK3 surface(GetParam());
  Generator gen(1000 + GetParam());
  int semicircles = 0, nested_checks = 0, common_checks = 0;
  for (int instance = 0; instance < 100; ++instance) {
    const MukaiVector v = gen.vector(surface);
    const MukaiVector w = gen.partner(v);
    const NumericalWall wall = wall_between(v, w);

    // Kind coverage, and each semicircle has positive radius.
    const WallKind kind = wall.kind();
    ASSERT_TRUE(kind == WallKind::semicircle || kind == WallKind::vertical || kind == WallKind::degenerate);
    if (kind == WallKind::semicircle) {
      ++semicircles;
      EXPECT_GT(wall.radius_sq(), 0);
      const StabPoint top = top_point(wall);
      EXPECT_EQ(nu_zero_curve(v).evaluate(top.beta(), top.alpha_sq()), 0) << to_string(v) << to_string(w);
    }

    // Master equation soundness and slope equality along the wall.
    for (const StabPoint& p : sample_points(wall, gen)) {
      EXPECT_EQ(wall.equation().evaluate(p.beta(), p.alpha_sq()), 0);
      EXPECT_TRUE(same_tilt_slope(v, w, p));
      try {
        EXPECT_EQ(tilt_slope(v, p), tilt_slope(w, p));
      } catch (const Error&) {
        // one of the slopes is undefined at p
      }
    }

    if (self_pairing(v) >= 0) {
      const MukaiVector w2 = gen.partner(v);
      const NumericalWall other = wall_between(v, w2);
      if (kind == WallKind::semicircle && other.kind() == WallKind::semicircle) {
        EXPECT_NE(nesting_relation(wall, other), Nesting::crossing)
            << to_string(v) << " " << to_string(w) << " " << to_string(w2);
        ++nested_checks;
      }
    } else {
      std::vector<MukaiVector> sample;
      for (int i = 0; i < 5; ++i) sample.push_back(gen.partner(v));
      EXPECT_NO_THROW(common_point_check(v, sample)) << to_string(v);
      ++common_checks;
    }
  }
  EXPECT_GT(semicircles, 0);
  EXPECT_GT(nested_checks + common_checks, 0);
}

INSTANTIATE_TEST_SUITE_P(Genera7To14, WallStructure, ::testing::Range(7, 15));
