#include <algorithm>
#include <set>
#include <vector>

#include "check_error.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "tropmat/cell_complex.hpp"
#include "tropmat/polytope.hpp"

using namespace tropmat;

TEST_CASE("generators are negative incidence vectors in canonical form") {
  CHECK(basis_point(ElementSet{1, 2, 4}, 5) == TropicalPoint{0, 0, 1, 0, 1});
  const auto p = fixtures::running_polytope();
  REQUIRE(p.generator_count() == 8);
  CHECK(p.generators[0] == TropicalPoint{0, 0, 1, 0, 1});
  CHECK(p.generators[7] == TropicalPoint{1, 1, 0, 0, 0});
  for (const auto& g : p.generators) CHECK(g.is_canonical());
  CHECK(p.dim() == 4);
  CHECK(p.rank() == 3);
}

TEST_CASE("origin type of the running example") {
  const auto p = fixtures::running_polytope();
  const FineType expected({{1, 2, 3, 4, 5}, {1, 2, 6, 7}, {3, 4, 6, 7, 8},
                           {1, 3, 5, 6, 8}, {2, 4, 5, 7, 8}});
  CHECK(p.origin_type == expected);
  CHECK(fine_type(TropicalPoint::origin(5), p.generators) == expected);
}

TEST_CASE("corners are unit vectors with closed-form types") {
  for (const auto& m : {fixtures::running_example(), GroundMatroid::uniform(2, 4),
                        fixtures::graph("k4.json")}) {
    const auto p = build_polytope(m);
    for (int i = 1; i <= p.ambient(); ++i) {
      CAPTURE(i);
      CHECK(corner(p, i) == TropicalPoint::unit(p.ambient(), i));
      CHECK(fine_type(corner(p, i), p.generators) == corner_type_by_formula(p, i));
    }
  }
  const auto p = fixtures::running_polytope();
  CHECK(corner_type_by_formula(p, 1) ==
        FineType({{1, 2, 3, 4, 5, 6, 7, 8}, {6, 7}, {6, 7, 8}, {6, 8}, {7, 8}}));
  CHECK(errc_of([&] { corner(p, 0); }) == Errc::OutOfRange);
  CHECK(errc_of([&] { corner(p, 6); }) == Errc::OutOfRange);
}

TEST_CASE("running example has fourteen pseudovertices with the expected types") {
  const auto p = fixtures::running_polytope();
  const auto pvs = pseudovertices(p);
  REQUIRE(pvs.size() == 14);
  const auto expected = fixtures::expected().at("pseudovertex_types");
  std::set<std::string> labels;
  for (const auto& v : pvs) {
    const auto label = pseudovertex_label(p, v.support);
    CAPTURE(label);
    labels.insert(label);
    REQUIRE(expected.contains(label));
    CHECK(v.type == fixtures::type_of(expected.at(label)));
    CHECK(v.type == pseudovertex_type_by_formula(p, v.support));
    CHECK(v.point == basis_point(v.support, 5));
    CHECK(cell_dimension(v.type) == 0);
  }
  CHECK(labels.size() == 14);
  CHECK(pseudovertex_label(p, ElementSet::full(5)) == "0");
  CHECK(pseudovertex_label(p, ElementSet{1, 2, 4}) == "v_1");
  CHECK(pseudovertex_label(p, ElementSet{1, 2, 3, 4}) == "e_5");
}

TEST_CASE("standard simplices have 2^(d+1)-2 pseudovertices") {
  for (int d = 1; d <= 3; ++d) {
    CAPTURE(d);
    const auto p = build_polytope(GroundMatroid::uniform(1, d + 1));
    const auto pvs = pseudovertices(p);
    CHECK(pvs.size() == (std::size_t{1} << (d + 1)) - 2);
    for (const auto& v : pvs) CHECK(fine_type(v.point, p.generators) == v.type);
  }
  const auto p = build_polytope(GroundMatroid::uniform(1, 4));
  CHECK(pseudovertex_label(p, ElementSet{1, 2}) == "e_3,4");
}

TEST_CASE("closed-form types agree with direct evaluation on every basis union") {
  for (const auto& m : {fixtures::running_example(), fixtures::graph("k4.json"),
                        GroundMatroid::uniform(2, 4), GroundMatroid::uniform(3, 5)}) {
    const auto p = build_polytope(m);
    std::set<std::uint64_t> seen;
    std::vector<ElementSet> frontier(m.bases().begin(), m.bases().end());
    while (!frontier.empty()) {
      const ElementSet j = frontier.back();
      frontier.pop_back();
      if (!seen.insert(j.bits()).second) continue;
      CHECK(pseudovertex_type_by_formula(p, j) == fine_type(basis_point(j, p.ambient()), p.generators));
      for (ElementSet b : m.bases()) frontier.push_back(j | b);
    }
  }
}

TEST_CASE("valid deletions and sequences") {
  const auto m = fixtures::running_example();
  const auto p = build_polytope(m);
  CHECK(is_valid_deletion(m, ElementSet{}));
  CHECK(is_valid_deletion(m, ElementSet{3, 5}));
  CHECK_FALSE(is_valid_deletion(m, ElementSet{4, 5}));
  CHECK_FALSE(is_valid_deletion(m, ElementSet{1, 3}));
  CHECK(valid_sequences(p, 0) == std::vector<ValidSequence>{{}});
  CHECK(valid_sequences(p, 1).size() == 5);
  const auto pairs = valid_sequences(p, 2);
  CHECK(pairs.size() == 16);
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));
  CHECK(std::find(pairs.begin(), pairs.end(), ValidSequence{4, 5}) == pairs.end());
  CHECK(std::find(pairs.begin(), pairs.end(), ValidSequence{3, 1}) == pairs.end());
  CHECK(std::find(pairs.begin(), pairs.end(), ValidSequence{5, 3}) != pairs.end());
  CHECK(errc_of([&] { valid_sequences(p, 3); }) == Errc::OutOfRange);
  CHECK(errc_of([&] { valid_sequences(p, -1); }) == Errc::OutOfRange);
}

TEST_CASE("maximal bounded cells of the running example") {
  const auto p = fixtures::running_polytope();
  const auto cells = maximal_bounded_cells(p);
  REQUIRE(cells.size() == 16);
  const auto it = std::find_if(cells.begin(), cells.end(),
                               [](const BoundedCell& c) { return c.sequence == ValidSequence{5, 3}; });
  REQUIRE(it != cells.end());
  CHECK(it->basis == ElementSet{1, 2, 4});
  CHECK(it->basis_index == 1);
  CHECK(it->vertex_chain == std::vector<TropicalPoint>{TropicalPoint{0, 0, 0, 0, 0},
                                                       TropicalPoint{0, 0, 0, 0, 1},
                                                       TropicalPoint{0, 0, 1, 0, 1}});
  CHECK(it->interior_type == FineType({{1}, {1}, {3, 6}, {1}, {2, 4, 5, 7, 8}}));
  const TropicalPoint sample{Rational(0), Rational(0), Rational(1, 3), Rational(0), Rational(2, 3)};
  CHECK(it->sample_point() == sample);
  for (const auto& c : cells) {
    CHECK(cell_dimension(c.interior_type) == 2);
    CHECK(fine_type(c.sample_point(), p.generators) == c.interior_type);
  }
}

TEST_CASE("full-rank matroids never reach the polytope builder") {
  CHECK(errc_of([] { matroid_from_bases(2, {{1, 2}}); }) == Errc::ElementInEveryBasis);
}
