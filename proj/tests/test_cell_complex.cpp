#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "check_error.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "tropmat/cell_complex.hpp"

using namespace tropmat;

namespace {

const std::vector<TropicalPoint> kSimplex{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};

std::set<CoarseType> brute_orbits(int k, int d) {
  const auto p = build_polytope(GroundMatroid::uniform(k, d + 1));
  std::set<CoarseType> out;
  for (const auto& c : enumerate_maximal_cells(p)) out.insert(orbit_representative(c.type.coarse()));
  return out;
}

void check_complex_consistency(const PolytopeModel& p, const CellComplexModel& complex) {
  std::vector<std::size_t> counted(complex.f_vector.size(), 0);
  for (const auto& c : complex.cells) {
    ++counted.at(static_cast<std::size_t>(c.dimension));
    CHECK(c.witness.is_canonical());
    CHECK(fine_type(c.witness, p.generators) == c.type);
    CHECK(cell_dimension(c.type) == c.dimension);
    CHECK(face_affine_dimension(c.type, p.generators) == c.dimension);
    CHECK(c.bounded == c.type.bounded());
  }
  CHECK(counted == complex.f_vector);
  CHECK(std::is_sorted(complex.cells.begin(), complex.cells.end(),
                       [](const CellRecord& a, const CellRecord& b) {
                         return std::tie(a.dimension, a.type) < std::tie(b.dimension, b.type);
                       }));
}

}  // namespace

TEST_CASE("cell dimension counts components of the overlap graph") {
  CHECK(cell_dimension(FineType({{1, 3}, {2, 3}, {}})) == 1);
  CHECK(cell_dimension(FineType({{1}, {2}, {3}})) == 2);
  CHECK(cell_dimension(FineType({{1, 2}, {2, 3}, {3}})) == 0);
  CHECK(cell_dimension(fixtures::running_polytope().origin_type) == 0);
  CHECK(cell_dimension(FineType({{1}, {1}, {3, 6}, {1}, {2, 4, 5, 7, 8}})) == 2);
}

TEST_CASE("running example has 73 maximal cells split 5/20/48 by support") {
  const auto p = fixtures::running_polytope();
  const auto cells = enumerate_maximal_cells(p);
  REQUIRE(cells.size() == 73);
  std::map<int, int> by_support;
  for (const auto& c : cells) {
    ++by_support[c.type.coarse().support_size()];
    CHECK(c.dimension == 4);
    CHECK(fine_type(c.witness, p.generators) == c.type);
  }
  CHECK(by_support == std::map<int, int>{{1, 5}, {2, 20}, {3, 48}});
  CHECK(std::is_sorted(cells.begin(), cells.end(),
                       [](const CellRecord& a, const CellRecord& b) { return a.type < b.type; }));
}

TEST_CASE("closed-form coarse types match enumeration on the running example") {
  const auto p = fixtures::running_polytope();
  const auto formula = theorem_coarse_types(p.matroid);
  CHECK(formula.size() == 73);
  for (const auto& s : formula) CHECK(s.type.total() == 8);
  const auto report = cross_validate(p);
  CHECK(report.enumerated == 73);
  CHECK(report.formula == 73);
  CHECK(report.multiset_equal);
  CHECK(report.set_equal);
  CHECK(report.missing_from_formula.empty());
  CHECK(report.extra_in_formula.empty());
  CHECK(report.ok());
}

TEST_CASE("formula sequences start with single coordinates") {
  const auto formula = theorem_coarse_types(fixtures::running_example());
  REQUIRE(formula.size() >= 5);
  for (int i = 0; i < 5; ++i) CHECK(formula[static_cast<std::size_t>(i)].sequence == std::vector<int>{i + 1});
  CHECK(formula[0].type == CoarseType{{8, 0, 0, 0, 0}});
}

TEST_CASE("full complex of the running example") {
  const auto p = fixtures::running_polytope();
  const auto complex = enumerate_all_cells(p);
  CHECK(complex.f_vector == std::vector<std::size_t>{14, 78, 172, 180, 73});
  CHECK(complex.euler_characteristic() == 1);
  check_complex_consistency(p, complex);
  std::set<TropicalPoint> vertices;
  for (const auto& c : complex.cells) {
    if (c.dimension == 0) vertices.insert(c.witness);
  }
  std::set<TropicalPoint> pvs;
  for (const auto& v : pseudovertices(p)) pvs.insert(v.point);
  CHECK(vertices == pvs);
}

TEST_CASE("complexes of small uniform matroids") {
  const auto u23 = build_polytope(GroundMatroid::uniform(2, 3));
  const auto c23 = enumerate_all_cells(u23);
  CHECK(c23.f_vector == std::vector<std::size_t>{4, 12, 9});
  CHECK(c23.euler_characteristic() == 1);
  check_complex_consistency(u23, c23);
  const auto u24 = build_polytope(GroundMatroid::uniform(2, 4));
  const auto c24 = enumerate_all_cells(u24);
  CHECK(c24.f_vector == std::vector<std::size_t>{11, 50, 78, 40});
  CHECK(c24.euler_characteristic() == -1);
  check_complex_consistency(u24, c24);
}

TEST_CASE("affine dimension of an infeasible type is -1") {
  CHECK(face_affine_dimension(FineType({{2}, {1}, {3}}), kSimplex) == -1);
  CHECK(face_affine_dimension(FineType({{1}, {2}, {3}}), kSimplex) == 2);
  CHECK(face_affine_dimension(FineType({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}), kSimplex) == -1);
  CHECK(errc_of([] { face_affine_dimension(FineType({{1}, {2}}), kSimplex); }) ==
        Errc::DimensionMismatch);
}

TEST_CASE("enumeration validates its input and honours the cap") {
  CHECK(errc_of([] { enumerate_maximal_cells(std::span<const TropicalPoint>{}); }) ==
        Errc::EmptyInput);
  const std::vector<TropicalPoint> mixed{{0, 1, 1}, {0, 1}};
  CHECK(errc_of([&] { enumerate_maximal_cells(mixed); }) == Errc::DimensionMismatch);
  const auto p = fixtures::running_polytope();
  CHECK(errc_of([&] { enumerate_maximal_cells(p, {10}); }) == Errc::CapExceeded);
  CHECK(errc_of([&] { enumerate_all_cells(p, {10}); }) == Errc::CapExceeded);
}

TEST_CASE("hypersimplex tuples") {
  CHECK(hypersimplex_alpha_tuple(2, 2, 1) == CoarseType{{3, 0, 0}});
  CHECK(hypersimplex_alpha_tuple(2, 2, 2) == CoarseType{{2, 1, 0}});
  CHECK(hypersimplex_alpha_tuple(2, 3, 1) == CoarseType{{6, 0, 0, 0}});
  CHECK(hypersimplex_alpha_tuple(2, 3, 2) == CoarseType{{4, 2, 0, 0}});
  CHECK(hypersimplex_alpha_tuple(2, 3, 3) == CoarseType{{3, 2, 1, 0}});
  CHECK(hypersimplex_alpha_tuple(3, 3, 1) == CoarseType{{4, 0, 0, 0}});
  CHECK(hypersimplex_alpha_tuple(3, 3, 2) == CoarseType{{3, 1, 0, 0}});
  CHECK(hypersimplex_coarse_types(2, 3) ==
        std::vector<CoarseType>{{{3, 2, 1, 0}}, {{4, 2, 0, 0}}, {{6, 0, 0, 0}}});
}

TEST_CASE("alpha = 0 overshoots the generator count") {
  const auto t = hypersimplex_alpha_tuple(2, 2, 0);
  CHECK(t[0] == 5);
  CHECK(t.total() > 3);
}

TEST_CASE("hypersimplex tuples are the brute-force orbit representatives") {
  for (auto [k, d] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    CAPTURE(k);
    CAPTURE(d);
    const auto formula = hypersimplex_coarse_types(k, d);
    CHECK(std::set<CoarseType>(formula.begin(), formula.end()) == brute_orbits(k, d));
  }
}

TEST_CASE("hypersimplex parameter checks") {
  CHECK(errc_of([] { hypersimplex_coarse_types(1, 3); }) == Errc::OutOfRange);
  CHECK(errc_of([] { hypersimplex_coarse_types(4, 3); }) == Errc::OutOfRange);
  CHECK(errc_of([] { hypersimplex_alpha_tuple(0, 3, 1); }) == Errc::OutOfRange);
  CHECK(errc_of([] { hypersimplex_alpha_tuple(2, 3, 4); }) == Errc::OutOfRange);
  CHECK(errc_of([] { hypersimplex_alpha_tuple(2, 3, -1); }) == Errc::OutOfRange);
}

TEST_CASE("orbit representatives sort entries descending") {
  CHECK(orbit_representative(CoarseType{{0, 2, 1}}) == CoarseType{{2, 1, 0}});
  CHECK(orbit_representative(CoarseType{{1, 1, 3, 0}}) == CoarseType{{3, 1, 1, 0}});
}

TEST_CASE("uniform matroids of rank two and three cross-validate as multisets") {
  for (auto [k, n] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 4}}) {
    CAPTURE(k);
    CAPTURE(n);
    CHECK(cross_validate(build_polytope(GroundMatroid::uniform(k, n))).ok());
  }
}

TEST_CASE("rank one agrees with enumeration only as a set") {
  const auto report = cross_validate(build_polytope(GroundMatroid::uniform(1, 3)));
  CHECK(report.set_equal);
  CHECK_FALSE(report.multiset_equal);
  CHECK(report.enumerated == 10);
  CHECK(report.formula == 15);
}

TEST_CASE("K4 maximal cells cross-validate") {
  const auto report = cross_validate(build_polytope(fixtures::graph("k4.json")));
  CHECK(report.enumerated == 444);
  CHECK(report.ok());
}
