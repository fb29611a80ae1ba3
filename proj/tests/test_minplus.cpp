#include <vector>

#include "check_error.hpp"
#include "doctest.h"
#include "tropmat/minplus.hpp"

using namespace tropmat;

namespace {

const std::vector<TropicalPoint> kSimplex{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};

}  // namespace

TEST_CASE("points are classes modulo the all-ones vector") {
  const TropicalPoint p{3, 5, 4};
  CHECK(p == TropicalPoint{0, 2, 1});
  CHECK(p.canonical().coords()[0] == 0);
  CHECK(p.canonical() == TropicalPoint{0, 2, 1});
  CHECK(TropicalPoint{-1, 2, 0}.canonical() == TropicalPoint{0, 3, 1});
  CHECK(to_string(TropicalPoint{-1, 2, 0}.canonical()) == "(0,3,1)");
  CHECK(TropicalPoint{0, 2, 1}.is_canonical());
  CHECK_FALSE(TropicalPoint{1, 2, 1}.is_canonical());
  CHECK(p.shifted(Rational(7, 3)) == p);
  CHECK(p.dim() == 2);
  CHECK(TropicalPoint::unit(3, 2) == TropicalPoint{0, 1, 0});
  CHECK(to_string(TropicalPoint{Rational(0), Rational(1), Rational(1, 2)}) == "(0,1,1/2)");
}

TEST_CASE("the c0 chart is a bijection") {
  const TropicalPoint p{3, 5, 4};
  const auto chart = c0_chart(p);
  CHECK(chart == std::vector<Rational>{2, 1});
  CHECK(from_c0_chart(chart) == p);
}

TEST_CASE("segment breakpoints") {
  const auto seg = trop_segment(TropicalPoint{0, 0, 0}, TropicalPoint{0, 2, 1});
  REQUIRE(seg.size() == 3);
  CHECK(seg[0] == TropicalPoint{0, 0, 0});
  CHECK(seg[1] == TropicalPoint{0, 1, 1});
  CHECK(seg[2] == TropicalPoint{0, 2, 1});
}

TEST_CASE("tropical combinations take coordinatewise minima") {
  const std::vector<Rational> zero{0, 0};
  const std::vector<TropicalPoint> two{kSimplex[0], kSimplex[1]};
  CHECK(tropical_combination(two, zero) == TropicalPoint{0, 0, 1});
  const std::vector<Rational> lifted{0, 5};
  CHECK(tropical_combination(two, lifted) == kSimplex[0]);
  CHECK(errc_of([&] { tropical_combination(two, std::vector<Rational>{0}); }) ==
        Errc::DimensionMismatch);
  CHECK(errc_of([] { tropical_combination({}, {}); }) == Errc::EmptyInput);
}

TEST_CASE("fine and coarse types") {
  const std::vector<TropicalPoint> gens{{0, 1, 1}, {1, 0, 1}, {0, 0, 1}};
  const FineType t = fine_type(TropicalPoint{0, 0, 0}, gens);
  CHECK(t == FineType({{1, 3}, {2, 3}, {}}));
  CHECK(to_string(t) == "({1,3},{2,3},{})");
  CHECK(t.coarse() == CoarseType{{2, 2, 0}});
  CHECK(coarse_type(TropicalPoint{0, 0, 0}, gens) == CoarseType{{2, 2, 0}});
  CHECK(to_string(t.coarse()) == "(2,2,0)");
  CHECK_FALSE(t.bounded());
  CHECK(t.support() == IndexSet{1, 2, 3});
  CHECK(t.contains(FineType({{1}, {}, {}})));
  CHECK_FALSE(t.contains(FineType({{2}, {}, {}})));
  CHECK(t.meet(FineType({{3}, {1, 2, 3}, {1}})) == FineType({{3}, {2, 3}, {}}));
  CHECK(CoarseType{{2, 2, 0}}.total() == 4);
  CHECK(CoarseType{{2, 2, 0}}.support_size() == 2);
}

TEST_CASE("membership in the hull follows bounded types") {
  CHECK(in_tconv(TropicalPoint{0, 0, 0}, kSimplex));
  CHECK(in_tconv(TropicalPoint{0, Rational(1, 2), 1}, kSimplex));
  CHECK_FALSE(in_tconv(TropicalPoint{0, 2, 0}, kSimplex));
  const FineType far = fine_type(TropicalPoint{0, 2, 0}, kSimplex);
  CHECK(far == FineType({{}, {1, 2, 3}, {}}));
}

TEST_CASE("corners of the standard simplex are unit vectors") {
  for (int k = 1; k <= 3; ++k) CHECK(corner(kSimplex, k) == TropicalPoint::unit(3, k));
  CHECK(errc_of([] { corner(kSimplex, 0); }) == Errc::OutOfRange);
  CHECK(errc_of([] { corner(kSimplex, 4); }) == Errc::OutOfRange);
  CHECK(errc_of([] { corner({}, 1); }) == Errc::EmptyInput);
}

TEST_CASE("halfspaces contain points whose minimum lies in the sector set") {
  const TropicalHalfspace h(TropicalPoint{0, 0, 0}, {1});
  CHECK(halfspace_contains(h, TropicalPoint{0, 1, 1}));
  CHECK_FALSE(halfspace_contains(h, TropicalPoint{1, 0, 1}));
  CHECK(halfspace_contains(h, TropicalPoint{0, 0, 1}));
  const TropicalHalfspace g(TropicalPoint{0, 0, 0}, {3, 1});
  CHECK(g.sectors() == std::vector<int>{1, 3});
  CHECK(g.complement() == std::vector<int>{2});
  CHECK(errc_of([] { TropicalHalfspace(TropicalPoint{0, 0, 0}, {}); }) == Errc::OutOfRange);
  CHECK(errc_of([] { TropicalHalfspace(TropicalPoint{0, 0, 0}, {1, 2, 3}); }) ==
        Errc::OutOfRange);
  CHECK(errc_of([] { TropicalHalfspace(TropicalPoint{0, 0, 0}, {4}); }) == Errc::OutOfRange);
}

TEST_CASE("dimension and emptiness errors") {
  CHECK(errc_of([] { fine_type(TropicalPoint{0, 0}, kSimplex); }) == Errc::DimensionMismatch);
  CHECK(errc_of([] { fine_type(TropicalPoint{0, 0, 0}, {}); }) == Errc::EmptyInput);
  CHECK(errc_of([] { TropicalPoint::unit(3, 4); }) == Errc::OutOfRange);
}
