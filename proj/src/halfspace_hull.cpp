#include "tropmat/halfspace_hull.hpp"

#include <algorithm>
#include <set>

#include "tropmat/cell_complex.hpp"
#include "tropmat/error.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/polytope.hpp"

namespace tropmat {

namespace {

bool meets(const IndexSet& a, const IndexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

std::string term(int coordinate, const Rational& apex) {
  std::string s = "x_" + std::to_string(coordinate);
  if (apex > 0) s += " - " + to_string(Rational(apex));
  if (apex < 0) s += " + " + to_string(Rational(-apex));
  return s;
}

std::string side(const std::vector<int>& coords, const TropicalPoint& apex) {
  if (coords.size() == 1) return term(coords.front(), apex[coords.front() - 1]);
  std::string s = "min(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += term(coords[i], apex[coords[i] - 1]);
  }
  return s + ")";
}

void lattice_points(std::size_t dim, std::size_t budget, std::vector<TropicalPoint>& out) {
  // Half-integers in [-2, 2]: 9 values per axis, odometer order.
  std::vector<int> digit(dim, 0);
  while (out.size() < budget) {
    std::vector<Rational> chart(dim);
    for (std::size_t a = 0; a < dim; ++a) chart[a] = Rational(digit[a] - 4, 2);
    out.push_back(from_c0_chart(chart));
    std::size_t a = 0;
    while (a < dim && ++digit[a] == 9) digit[a++] = 0;
    if (a == dim) break;
  }
}

}  // namespace

bool contains_all(const TropicalHalfspace& h, std::span<const TropicalPoint> generators) {
  return std::all_of(generators.begin(), generators.end(),
                     [&](const TropicalPoint& v) { return halfspace_contains(h, v); });
}

bool gk_minimal(const TropicalHalfspace& h, std::span<const TropicalPoint> generators) {
  if (!contains_all(h, generators)) {
    throw Error(Errc::NotContained, "halfspace does not contain every generator");
  }
  const FineType t = fine_type(h.apex(), generators);
  const auto& in = h.sectors();
  const auto out = h.complement();

  IndexSet covered;
  for (int i : in) {
    IndexSet merged;
    std::set_union(covered.begin(), covered.end(), t.entry(i).begin(), t.entry(i).end(),
                   std::back_inserter(merged));
    covered = std::move(merged);
  }
  if (covered.size() != generators.size()) return false;

  for (int j : out) {
    if (std::none_of(in.begin(), in.end(),
                     [&](int i) { return meets(t.entry(i), t.entry(j)); })) {
      return false;
    }
  }

  for (int i : in) {
    bool witnessed = false;
    for (int j : out) {
      IndexSet common;
      std::set_intersection(t.entry(i).begin(), t.entry(i).end(), t.entry(j).begin(),
                            t.entry(j).end(), std::back_inserter(common));
      for (int g : common) {
        const bool elsewhere = std::any_of(in.begin(), in.end(), [&](int k) {
          return k != i && std::binary_search(t.entry(k).begin(), t.entry(k).end(), g);
        });
        if (!elsewhere) {
          witnessed = true;
          break;
        }
      }
      if (witnessed) break;
    }
    if (!witnessed) return false;
  }
  return true;
}

HalfspaceSystem cornered_halfspaces(std::span<const TropicalPoint> generators) {
  if (generators.empty()) throw Error(Errc::EmptyInput, "generator list is empty");
  HalfspaceSystem s;
  const int m = static_cast<int>(generators.front().ambient());
  for (int k = 1; k <= m; ++k) s.halfspaces.emplace_back(corner(generators, k), std::vector<int>{k});
  return s;
}

std::vector<TropicalPoint> hypersimplex_generators(int k, int d) {
  if (d < 1 || k < 1 || k > d) {
    throw Error(Errc::OutOfRange, "hypersimplex needs 1 <= k <= d");
  }
  std::vector<TropicalPoint> out;
  for (ElementSet b : k_subsets(d + 1, k)) out.push_back(basis_point(b, d + 1));
  return out;
}

HalfspaceSystem hypersimplex_halfspaces(int k, int d) {
  const auto gens = hypersimplex_generators(k, d);
  HalfspaceSystem s = cornered_halfspaces(gens);
  if (k >= 2) {
    for (ElementSet i : k_subsets(d + 1, d - k + 2)) {
      s.halfspaces.emplace_back(TropicalPoint::origin(d + 1), i.elements());
    }
  }
  return s;
}

bool system_contains(const HalfspaceSystem& system, const TropicalPoint& x) {
  return std::all_of(system.halfspaces.begin(), system.halfspaces.end(),
                     [&](const TropicalHalfspace& h) { return halfspace_contains(h, x); });
}

ExteriorReport verify_exterior_description(const HalfspaceSystem& system,
                                           std::span<const TropicalPoint> generators,
                                           std::size_t probe_budget) {
  if (generators.empty()) throw Error(Errc::EmptyInput, "generator list is empty");
  ExteriorReport r;
  r.generators_contained = std::all_of(
      system.halfspaces.begin(), system.halfspaces.end(),
      [&](const TropicalHalfspace& h) { return contains_all(h, generators); });

  const std::size_t m = generators.front().ambient();
  std::vector<TropicalPoint> probes;
  lattice_points(m - 1, probe_budget, probes);
  r.lattice_probes = probes.size();

  std::vector<TropicalPoint> anchors(generators.begin(), generators.end());
  try {
    for (const auto& c : enumerate_all_cells(generators).cells) {
      if (c.dimension == 0 && c.bounded) anchors.push_back(c.witness);
    }
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded) throw;
  }
  std::set<TropicalPoint> moved;
  const Rational step(1, 4);
  for (const auto& a : anchors) {
    for (std::size_t c = 0; c < m; ++c) {
      for (const Rational& delta : {step, Rational(-step)}) {
        std::vector<Rational> offset(m, Rational(0));
        offset[c] = delta;
        moved.insert(a.translated(offset).canonical());
      }
    }
  }
  r.anchor_probes = moved.size();
  probes.insert(probes.end(), moved.begin(), moved.end());

  for (const auto& x : probes) {
    const bool in_hull = in_tconv(x, generators);
    const bool in_system = system_contains(system, x);
    if (in_hull != in_system) r.counterexamples.push_back({x.canonical(), in_hull, in_system});
  }
  return r;
}

std::string inequality_form(const TropicalHalfspace& h) {
  const TropicalPoint apex = h.apex().canonical();
  return side(h.sectors(), apex) + " <= " + side(h.complement(), apex);
}

std::string inequality_form(const HalfspaceSystem& system) {
  std::string out;
  for (const auto& h : system.halfspaces) out += inequality_form(h) + "\n";
  return out;
}

}  // namespace tropmat
