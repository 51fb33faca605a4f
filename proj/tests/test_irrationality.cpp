#include "k3walls/error.hpp"
#include "k3walls/irrationality.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace k3walls;

namespace {

std::vector<Integer> ints(std::initializer_list<int> values) {
  std::vector<Integer> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST(Irrationality, DegreeFromChern) {
  EXPECT_EQ(degree_from_chern(5, 1), 4);
  EXPECT_EQ(degree_from_chern(6, 3), 3);
  EXPECT_EQ(degree_from_chern(8, 0), 8);
  EXPECT_THROW(degree_from_chern(3, 4), Error);
}

TEST(Irrationality, MultiplicityDegreeBound) {
  EXPECT_EQ(hs_degree_lower_bound(PolarizedK3(7), 7), make_rational(8, 3));
  EXPECT_EQ(hs_degree_lower_bound(PolarizedK3(9), 10), make_rational(8, 3));
  EXPECT_EQ(hs_degree_lower_bound(PolarizedK3(11), 0), 20);
}

TEST(Irrationality, AdmissibleC2Examples) {
  EXPECT_EQ(admissible_c2(PolarizedK3(7), 3), ints({5}));
  EXPECT_EQ(admissible_c2(PolarizedK3(9), 4), ints({6, 7}));
  EXPECT_EQ(admissible_c2(PolarizedK3(5), 4), ints({4, 5}));
}

TEST(Irrationality, AdmissibleC2TableForGenera7To14) {
  for (int g = 7; g <= 14; ++g) {
    const PolarizedK3 s(g);
    const int lowest = (g + 3) / 2;
    EXPECT_EQ(minimal_c2(s), lowest);
    EXPECT_EQ(admissible_c2(s, 3), ints({lowest})) << "genus " << g;
    EXPECT_EQ(admissible_c2(s, 4), ints({lowest, lowest + 1})) << "genus " << g;
  }
}

TEST(Irrationality, AdmissibleC2GrowsWithDegree) {
  for (int g = 2; g <= 30; ++g) {
    const PolarizedK3 s(g);
    for (int d = 1; d < 40; ++d) {
      const auto now = admissible_c2(s, d);
      const auto next = admissible_c2(s, d + 1);
      ASSERT_GE(next.size(), now.size());
      for (std::size_t i = 0; i < now.size(); ++i) EXPECT_EQ(now[i], next[i]);
      if (!now.empty()) EXPECT_LE(next.back() - now.back(), 1);
    }
  }
}

TEST(Irrationality, KernelVectorsAndExpectedSections) {
  EXPECT_EQ(kernel_mukai_vector(PolarizedK3(7), 5), MukaiVector(PolarizedK3(7), 2, 1, 3));
  EXPECT_EQ(kernel_mukai_vector(PolarizedK3(13), 8), MukaiVector(PolarizedK3(13), 2, 1, 6));
  EXPECT_EQ(kernel_mukai_vector(PolarizedK3(10), 6), MukaiVector(PolarizedK3(10), 2, 1, 5));
  const int expected[] = {5, 6, 6, 7, 7, 8, 8};
  for (int g = 7; g <= 13; ++g) {
    const PolarizedK3 s(g);
    EXPECT_EQ(expected_h0(kernel_mukai_vector(s, minimal_c2(s))), expected[g - 7]) << "genus " << g;
  }
  for (int g = 5; g <= 14; ++g) {
    const PolarizedK3 s(g);
    EXPECT_EQ(expected_h0(kernel_mukai_vector(s, minimal_c2(s))), g + 3 - (g + 3) / 2);
  }
  EXPECT_THROW(expected_h0(MukaiVector(PolarizedK3(7), 1, 0, -4)), Error);
}

TEST(Irrationality, PolarizationGenusOfModuliSpace) {
  EXPECT_EQ(moduli_polarization_genus(9), 3);
  EXPECT_EQ(moduli_polarization_genus(13), 4);
  EXPECT_EQ(moduli_polarization_genus(11), 11);
  EXPECT_EQ(moduli_polarization_genus(7), 7);
  try {
    moduli_polarization_genus(8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_covered);
  }
}

TEST(Irrationality, DatumRejectsInconsistentTuples) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> small(-3, 12);
  const PolarizedK3 s(9);
  for (int trial = 0; trial < 500; ++trial) {
    const int d = small(rng), c2 = small(rng), m = small(rng), f = small(rng);
    const bool valid = d == c2 - f && f >= m && m >= 0;
    if (valid) {
      EXPECT_NO_THROW(ProjectionDatum(s, d, c2, m, f));
    } else {
      EXPECT_THROW(ProjectionDatum(s, d, c2, m, f), Error);
    }
  }
  const ProjectionDatum datum(s, 3, 6, 2, 3);
  EXPECT_EQ(datum.base_colength(), 10);
}

TEST(Irrationality, TwoReducedPointsExcludeGenus11DegreeThree) {
  // two points with (m, f) = (1, 2): 7 + 7 > 20 - 7
  const ProjectionDatum datum(PolarizedK3(11), 3, 7, 2, 4);
  const LocalPoint points[] = {{1, 2, true}, {1, 2, true}};
  const StratumVerdict v = stratum_feasibility(datum, points);
  EXPECT_EQ(v.status, StratumStatus::excluded);
  EXPECT_EQ(v.local_colength_bound, 14);
  ASSERT_FALSE(v.reasons.empty());
}

TEST(Irrationality, NonreducedPointExcludesGenus9DegreeThree) {
  const ProjectionDatum datum(PolarizedK3(9), 3, 6, 2, 3);
  const LocalPoint points[] = {{2, 3, true}};
  const StratumVerdict v = stratum_feasibility(datum, points);
  EXPECT_EQ(v.status, StratumStatus::excluded);
  EXPECT_EQ(v.local_colength_bound, 11);
}

TEST(Irrationality, Genus7DegreeFourIsFeasible) {
  const ProjectionDatum datum(PolarizedK3(7), 4, 5, 1, 1);
  const LocalPoint points[] = {{1, 1, true}};
  const StratumVerdict v = stratum_feasibility(datum, points);
  EXPECT_EQ(v.status, StratumStatus::feasible);
  EXPECT_TRUE(v.reasons.empty());
}

TEST(Irrationality, NonCurvilinearPointIsUnclassified) {
  const ProjectionDatum datum(PolarizedK3(7), 4, 5, 1, 1);
  const LocalPoint points[] = {{1, 1, false}};
  const StratumVerdict v = stratum_feasibility(datum, points);
  EXPECT_EQ(v.status, StratumStatus::unclassified);
  EXPECT_FALSE(v.local_colength_bound.has_value());
}

TEST(Irrationality, ConfigurationMustAddUp) {
  const ProjectionDatum datum(PolarizedK3(9), 3, 6, 2, 3);
  const LocalPoint wrong[] = {{1, 2, true}};
  EXPECT_THROW(stratum_feasibility(datum, wrong), Error);
  const LocalPoint bad_point[] = {{2, 1, true}};
  EXPECT_THROW(stratum_feasibility(datum, bad_point), Error);
}

TEST(Irrationality, FeasibleVerdictsRespectDegreeBound) {
  SubidealSearchCache cache;
  for (int g = 7; g <= 14; ++g) {
    const PolarizedK3 s(g);
    for (int c2 = (g + 3) / 2; c2 <= (g + 3) / 2 + 2; ++c2)
      for (int f = 1; f <= 3; ++f) {
        const ProjectionDatum datum(s, c2 - f, c2, 1, f);
        const LocalPoint points[] = {{1, f, true}};
        const StratumVerdict v = stratum_feasibility(datum, points, &cache);
        if (v.status == StratumStatus::feasible)
          EXPECT_LE(hs_degree_lower_bound(s, datum.base_colength()), Rational(datum.degree()));
      }
  }
  EXPECT_GT(cache.hits(), 0);
}

TEST(Irrationality, RecordedStrataCoverGenera7To14) {
  for (int g = 7; g <= 14; ++g) EXPECT_FALSE(recorded_strata(g).empty()) << "genus " << g;
  EXPECT_TRUE(recorded_strata(6).empty());
  EXPECT_EQ(recorded_strata(11).front().c2, 7);
}
