#pragma once

#include "k3walls/monomial_ideal.hpp"
#include "k3walls/mukai_lattice.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace k3walls {

// Rank-2 bundle E with c2(E) = c2 projecting S to P^2 from a 3-dim V in H^0(E),
// with cycle base of degree f and scheme base of length m.
class ProjectionDatum {
 public:
  ProjectionDatum(const PolarizedK3& surface, Integer degree, Integer c2, Integer m, Integer f);

  const PolarizedK3& surface() const { return surface_; }
  const Integer& degree() const { return degree_; }
  const Integer& c2() const { return c2_; }
  const Integer& m() const { return m_; }
  const Integer& f() const { return f_; }
  // colength of the base ideal: L^2 - c2
  Integer base_colength() const { return surface_.lsquare() - c2_; }

 private:
  PolarizedK3 surface_;
  Integer degree_, c2_, m_, f_;
};

// d = c2 - f
Integer degree_from_chern(const Integer& c2, const Integer& f);

// L^2 - (4/3) * colength
Rational hs_degree_lower_bound(const PolarizedK3& surface, const Integer& colength);

// floor((g+3)/2)
Integer minimal_c2(const PolarizedK3& surface);
// floor((g+3)/2) <= c2 <= floor((3d + L^2)/4), ascending; empty if none.
std::vector<Integer> admissible_c2(const PolarizedK3& surface, const Integer& degree);

// (2, 1, g + 1 - c2)
MukaiVector kernel_mukai_vector(const PolarizedK3& surface, const Integer& c2);

// chi(O, E) = r + s for a class with no higher cohomology.
Integer expected_h0(const MukaiVector& v);

// Genus of the polarization on the Fourier-Mukai partner: g (g = 3 mod 4), (g+3)/4 (g = 1 mod 4).
int moduli_polarization_genus(int genus);

// One support point of the base cycle: scheme length m_i inside cycle degree f_i.
struct LocalPoint {
  int m = 1;
  int f = 1;
  bool curvilinear = true;
};

enum class StratumStatus { feasible, excluded, unclassified };

std::string_view to_string(StratumStatus s);

struct StratumVerdict {
  StratumStatus status = StratumStatus::feasible;
  std::vector<std::string> reasons;
  std::optional<std::int64_t> local_colength_bound;  // summed over points
};

// Applies the local colength bound (3-generated base ideal inside the
// product targets), the multiplicity degree bound and the c2 range.
StratumVerdict stratum_feasibility(const ProjectionDatum& datum, std::span<const LocalPoint> config,
                                   SubidealSearchCache* cache = nullptr);

// Index record of a Brill-Noether stratum W(c, m) with a recorded dimension, if any.
struct StratumIndex {
  int c2;
  std::optional<int> m;
  std::string dimension;  // empty when not recorded
  std::string description;
};

std::vector<StratumIndex> recorded_strata(int genus);

}  // namespace k3walls
