#include "k3walls/irrationality.hpp"

#include "k3walls/error.hpp"

namespace k3walls {

ProjectionDatum::ProjectionDatum(const PolarizedK3& surface, Integer degree, Integer c2, Integer m,
                                 Integer f)
    : surface_(surface),
      degree_(std::move(degree)),
      c2_(std::move(c2)),
      m_(std::move(m)),
      f_(std::move(f)) {
  if (m_ < 0 || f_ < m_) throw Error(ErrorKind::precondition, "need f >= m >= 0");
  if (degree_ != c2_ - f_) throw Error(ErrorKind::precondition, "need d = c2 - f");
  if (base_colength() < 0) throw Error(ErrorKind::precondition, "need c2 <= L^2");
}

Integer degree_from_chern(const Integer& c2, const Integer& f) {
  if (f < 0) throw Error(ErrorKind::precondition, "cycle degree must be >= 0");
  if (f > c2) throw Error(ErrorKind::precondition, "cycle degree exceeds c2");
  return c2 - f;
}

Rational hs_degree_lower_bound(const PolarizedK3& surface, const Integer& colength) {
  return Rational(surface.lsquare()) - Rational(4 * colength) / 3;
}

Integer minimal_c2(const PolarizedK3& surface) { return Integer((surface.genus() + 3) / 2); }

std::vector<Integer> admissible_c2(const PolarizedK3& surface, const Integer& degree) {
  std::vector<Integer> out;
  const Integer top = floor_of(make_rational(3 * degree + surface.lsquare(), 4));
  for (Integer c = minimal_c2(surface); c <= top; ++c) out.push_back(c);
  return out;
}

MukaiVector kernel_mukai_vector(const PolarizedK3& surface, const Integer& c2) {
  return MukaiVector(surface, 2, 1, Integer(surface.genus() + 1) - c2);
}

Integer expected_h0(const MukaiVector& v) {
  const Integer chi = v.r() + v.s();
  if (chi < 0) throw Error(ErrorKind::precondition, "negative Euler characteristic for " + to_string(v));
  return chi;
}

int moduli_polarization_genus(int genus) {
  if (genus % 2 == 0) throw Error(ErrorKind::not_covered, "genus must be odd");
  return genus % 4 == 3 ? genus : (genus + 3) / 4;
}

std::string_view to_string(StratumStatus s) {
  switch (s) {
    case StratumStatus::feasible: return "feasible";
    case StratumStatus::excluded: return "excluded";
    case StratumStatus::unclassified: return "unclassified";
  }
  return "unclassified";
}

StratumVerdict stratum_feasibility(const ProjectionDatum& datum, std::span<const LocalPoint> config,
                                   SubidealSearchCache* cache) {
  Integer total_m = 0, total_f = 0;
  for (const LocalPoint& p : config) {
    if (p.m < 1 || p.f < p.m) throw Error(ErrorKind::precondition, "each point needs f_i >= m_i >= 1");
    total_m += p.m;
    total_f += p.f;
  }
  if (total_m != datum.m() || total_f != datum.f())
    throw Error(ErrorKind::precondition, "configuration does not add up to (m, f)");

  StratumVerdict verdict;
  const PolarizedK3& surface = datum.surface();
  const Integer budget = datum.base_colength();

  const auto range = admissible_c2(surface, datum.degree());
  if (range.empty() || datum.c2() < range.front() || datum.c2() > range.back())
    verdict.reasons.push_back("c2 = " + to_string(datum.c2()) + " outside the admissible range");

  const Rational hs = hs_degree_lower_bound(surface, budget);
  if (hs > Rational(datum.degree()))
    verdict.reasons.push_back("degree bound " + to_string(hs) + " exceeds d = " + to_string(datum.degree()));

  bool all_curvilinear = true;
  std::int64_t local = 0;
  for (const LocalPoint& p : config) {
    if (!p.curvilinear) {
      all_curvilinear = false;
      continue;
    }
    const MonomialIdeal target = ideallemma_product(p.m, p.f);
    local += cache != nullptr ? cache->get(target, 3).colength
                              : min_colength_subideal(target, 3, default_horizon(target, 3)).colength;
  }
  if (all_curvilinear) {
    verdict.local_colength_bound = local;
    if (Integer(local) > budget)
      verdict.reasons.push_back("local colength " + std::to_string(local) + " exceeds L^2 - c2 = " +
                                to_string(budget));
  }

  if (!verdict.reasons.empty())
    verdict.status = StratumStatus::excluded;
  else
    verdict.status = all_curvilinear ? StratumStatus::feasible : StratumStatus::unclassified;
  return verdict;
}

std::vector<StratumIndex> recorded_strata(int genus) {
  switch (genus) {
    case 7: return {{5, 1, "4", "isomorphic to S x M"}};
    case 8: return {{5, std::nullopt, "5", "birational to a P^3-bundle over S"}};
    case 9:
      return {{6, 2, "3", "P^1-bundle over M"},
              {6, 2, "2", "correspondence between S and M"}};
    case 10:
      return {{6, std::nullopt, "4", "isomorphic to S^[2]"},
              {6, std::nullopt, "3", "isomorphic to P(E)"}};
    case 11: return {{7, 3, "2", "isomorphic to M"}};
    case 12: return {{7, 3, "3", "unirational"}};
    case 13: return {{8, 4, ">=1", ""}};
    case 14: return {{8, std::nullopt, "2", "isomorphic to S"}};
    default: return {};
  }
}

}  // namespace k3walls
