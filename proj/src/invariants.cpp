#include "tropmat/invariants.hpp"

#include <algorithm>
#include <set>

#include "tropmat/coarse_ideal.hpp"
#include "tropmat/error.hpp"

namespace tropmat {

namespace {

class Suite {
 public:
  void expect(std::string name, bool ok, std::string detail = {}) {
    results_.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string first_failure(const std::string& what, std::size_t index) {
  return what + " #" + std::to_string(index + 1);
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const PolytopeModel& p,
                                             const EnumerationOptions& options) {
  Suite s;
  const auto& m = p.matroid;
  const std::span<const TropicalPoint> gens(p.generators);
  const int ground = p.ambient();
  const auto n = static_cast<int>(p.generator_count());

  s.expect("exchange property", check_exchange(m));
  s.expect("non-bases complete the k-subsets",
           non_bases(m).size() + m.basis_count() ==
               binomial(static_cast<std::uint64_t>(ground), static_cast<std::uint64_t>(m.rank())));

  const FineType origin = fine_type(TropicalPoint::origin(ground), gens);
  s.expect("origin type matches basis incidence", origin == p.origin_type,
           to_string(origin) + " vs " + to_string(p.origin_type));
  s.expect("origin lies in the polytope", origin.bounded());

  bool corners_ok = true;
  bool corner_types_ok = true;
  std::string corner_detail;
  for (int i = 1; i <= ground; ++i) {
    const TropicalPoint c = corner(p, i);
    if (c != TropicalPoint::unit(ground, i)) {
      corners_ok = false;
      corner_detail = "corner " + std::to_string(i) + " = " + to_string(c);
    }
    if (fine_type(c, gens) != corner_type_by_formula(p, i)) corner_types_ok = false;
  }
  s.expect("corners are unit vectors", corners_ok, corner_detail);
  s.expect("corner types match closed form", corner_types_ok);

  const auto pvs = pseudovertices(p);
  bool pv_ok = true;
  std::string pv_detail;
  for (std::size_t i = 0; i < pvs.size(); ++i) {
    if (fine_type(pvs[i].point, gens) != pvs[i].type || cell_dimension(pvs[i].type) != 0) {
      pv_ok = false;
      pv_detail = first_failure("pseudovertex", i);
    }
  }
  s.expect("closed-form pseudovertex types agree with evaluation", pv_ok, pv_detail);

  const int k = m.rank();
  std::vector<BoundedCell> bounded;
  if (k < ground) bounded = maximal_bounded_cells(p);
  std::uint64_t factorial = 1;
  for (int f = 2; f <= ground - k; ++f) factorial *= static_cast<std::uint64_t>(f);
  s.expect("maximal bounded cell count n*(d+1-k)!",
           bounded.size() == static_cast<std::size_t>(n) * factorial,
           std::to_string(bounded.size()));
  bool bc_ok = true;
  std::string bc_detail;
  for (std::size_t i = 0; i < bounded.size(); ++i) {
    const auto& c = bounded[i];
    const bool good = cell_dimension(c.interior_type) == ground - k &&
                      fine_type(c.sample_point(), gens) == c.interior_type &&
                      c.vertex_chain.back() == p.generators[c.basis_index - 1];
    if (!good) {
      bc_ok = false;
      bc_detail = first_failure("bounded cell", i);
    }
  }
  s.expect("bounded cell types, dimensions and chains", bc_ok, bc_detail);

  const auto complex = enumerate_all_cells(p, options);
  const long expected_euler = (ground - 1) % 2 == 0 ? 1 : -1;
  s.expect("Euler relation", complex.euler_characteristic() == expected_euler,
           std::to_string(complex.euler_characteristic()));

  bool cells_ok = true;
  std::string cells_detail;
  std::size_t maximal = 0;
  std::set<FineType> bounded_top;
  for (std::size_t i = 0; i < complex.cells.size(); ++i) {
    const auto& c = complex.cells[i];
    const bool good = fine_type(c.witness, gens) == c.type &&
                      c.bounded == c.type.bounded() &&
                      face_affine_dimension(c.type, gens) == c.dimension;
    if (!good) {
      cells_ok = false;
      cells_detail = first_failure("cell", i);
    }
    if (c.dimension == ground - 1) ++maximal;
    if (c.bounded && c.dimension == ground - k) bounded_top.insert(c.type);
  }
  s.expect("cell witnesses, boundedness and affine dimension", cells_ok, cells_detail);

  std::set<FineType> formula_top;
  for (const auto& c : bounded) formula_top.insert(c.interior_type);
  if (k >= 2) {
    s.expect("bounded cells of top bounded dimension match the sequence cells",
             bounded_top == formula_top);
  }

  std::set<TropicalPoint> vertex_points;
  for (const auto& c : complex.cells) {
    if (c.dimension == 0 && c.bounded) vertex_points.insert(c.witness);
  }
  std::set<TropicalPoint> pv_points;
  for (const auto& v : pvs) pv_points.insert(v.point);
  s.expect("bounded vertices are the pseudovertices", vertex_points == pv_points,
           std::to_string(vertex_points.size()) + " vs " + std::to_string(pv_points.size()));

  const auto report = cross_validate(p, options);
  s.expect("coarse types: formula == enumeration", report.ok(),
           std::to_string(report.formula) + " formula vs " +
               std::to_string(report.enumerated) + " enumerated");

  const auto ideal = ideal_generators(m);
  s.expect("ideal generators are minimal", is_minimal_generating(ideal));
  s.expect("ideal generator count equals maximal cell count",
           ideal.generators.size() == maximal,
           std::to_string(ideal.generators.size()) + " vs " + std::to_string(maximal));
  const bool members = std::all_of(
      complex.cells.begin(), complex.cells.end(),
      [&](const CellRecord& c) { return ideal_membership(c.type.coarse(), ideal); });
  s.expect("every cell coarse type lies in the ideal", members);

  return s.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace tropmat
