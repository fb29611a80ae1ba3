#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tropmat/minplus.hpp"

namespace tropmat {

struct HalfspaceSystem {
  std::vector<TropicalHalfspace> halfspaces;

  std::size_t size() const { return halfspaces.size(); }
};

/// Minimality test for a halfspace containing all of V, from the type of its
/// apex. Throws Error(NotContained) if some generator lies outside.
bool gk_minimal(const TropicalHalfspace& h, std::span<const TropicalPoint> generators);

/// Every generator lies in h.
bool contains_all(const TropicalHalfspace& h, std::span<const TropicalPoint> generators);

/// H(c_k(V), {k}) for k = 1..d+1.
HalfspaceSystem cornered_halfspaces(std::span<const TropicalPoint> generators);

/// Generators of U_{k,d+1}, i.e. the vertices of the tropical hypersimplex.
std::vector<TropicalPoint> hypersimplex_generators(int k, int d);

/// Cornered halfspaces of the tropical hypersimplex, followed for k >= 2 by
/// H(0, I) for every (d-k+2)-subset I in lexicographic order. 1 <= k <= d.
HalfspaceSystem hypersimplex_halfspaces(int k, int d);

bool system_contains(const HalfspaceSystem& system, const TropicalPoint& x);

struct ExteriorCounterexample {
  TropicalPoint point;  // canonical
  bool in_hull = false;
  bool in_system = false;
};

struct ExteriorReport {
  bool generators_contained = false;
  std::size_t lattice_probes = 0;
  std::size_t anchor_probes = 0;
  std::vector<ExteriorCounterexample> counterexamples;

  bool ok() const { return generators_contained && counterexamples.empty(); }
};

constexpr std::size_t kDefaultProbeBudget = 100'000;

/// Probe points: the half-integer lattice of [-2,2]^d in the c_0 chart (at
/// most `probe_budget` of them), plus every bounded vertex of the complex and
/// every generator moved by +-1/4 along each coordinate. Each probe must lie
/// in the hull exactly when it satisfies every halfspace.
ExteriorReport verify_exterior_description(const HalfspaceSystem& system,
                                           std::span<const TropicalPoint> generators,
                                           std::size_t probe_budget = kDefaultProbeBudget);

/// "min(x_1,x_2) <= x_3", "x_1 - 1 <= min(x_2,x_3)".
std::string inequality_form(const TropicalHalfspace& h);
/// One inequality per line.
std::string inequality_form(const HalfspaceSystem& system);

}  // namespace tropmat
