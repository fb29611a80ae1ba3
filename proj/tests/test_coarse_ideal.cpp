#include <vector>

#include "check_error.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "tropmat/coarse_ideal.hpp"

using namespace tropmat;

namespace {

MonomialIdealModel transcribed_ideal() {
  return parse_ideal_text(read_file(fixtures::path("running_example_ideal_zero_based.txt")), 5,
                          VariableBase::Zero);
}

}  // namespace

TEST_CASE("monomials") {
  const Monomial a{{1, 0, 2}};
  const Monomial b{{1, 1, 3}};
  CHECK(a.degree() == 3);
  CHECK(a.variables() == 3);
  CHECK(a.divides(b));
  CHECK_FALSE(b.divides(a));
  CHECK(a.divides(a));
  CHECK(errc_of([&] { a.divides(Monomial{{1, 0}}); }) == Errc::DimensionMismatch);
}

TEST_CASE("monomial text form") {
  CHECK(format_monomial(Monomial{{2, 0, 1}}) == "x_1^2*x_3^1");
  CHECK(format_monomial(Monomial{{2, 0, 1}}, VariableBase::Zero) == "x_0^2*x_2^1");
  CHECK(format_monomial(Monomial{{0, 0}}) == "1");
  CHECK(parse_monomial("x_1^2*x_3", 3) == Monomial{{2, 0, 1}});
  CHECK(parse_monomial("x_0^2*x_2^1", 3, VariableBase::Zero) == Monomial{{2, 0, 1}});
  CHECK(parse_monomial("1", 2) == Monomial{{0, 0}});
  CHECK(parse_monomial(" x_2^4 ", 2) == Monomial{{0, 4}});
}

TEST_CASE("malformed monomials") {
  CHECK(errc_of([] { parse_monomial("", 3); }) == Errc::MalformedInput);
  CHECK(errc_of([] { parse_monomial("y_1", 3); }) == Errc::MalformedInput);
  CHECK(errc_of([] { parse_monomial("x_1^", 3); }) == Errc::MalformedInput);
  CHECK(errc_of([] { parse_monomial("x_1^-2", 3); }) == Errc::MalformedInput);
  CHECK(errc_of([] { parse_monomial("x_1**x_2", 3); }) == Errc::MalformedInput);
  CHECK(errc_of([] { parse_monomial("x_4", 3); }) == Errc::OutOfRange);
  CHECK(errc_of([] { parse_monomial("x_0", 3); }) == Errc::OutOfRange);
  CHECK(errc_of([] { parse_monomial("x_3", 3, VariableBase::Zero); }) == Errc::OutOfRange);
}

TEST_CASE("ideals are sorted, deduplicated and checked for width") {
  const auto ideal = make_ideal(2, {Monomial{{0, 1}}, Monomial{{1, 0}}, Monomial{{0, 1}}});
  CHECK(ideal.generators == std::vector<Monomial>{Monomial{{0, 1}}, Monomial{{1, 0}}});
  CHECK(errc_of([] { make_ideal(2, {Monomial{{1, 0, 0}}}); }) == Errc::DimensionMismatch);
  CHECK(is_minimal_generating(ideal));
  CHECK_FALSE(is_minimal_generating(make_ideal(2, {Monomial{{1, 0}}, Monomial{{2, 1}}})));
}

TEST_CASE("running example ideal equals the transcribed 73 generators") {
  const auto computed = ideal_generators(fixtures::running_example());
  const auto transcribed = transcribed_ideal();
  CHECK(transcribed.generators.size() == 73);
  CHECK(computed.variables == 5);
  CHECK(computed.generators == transcribed.generators);
  CHECK(is_minimal_generating(computed));
  CHECK(format_ideal_text(computed, VariableBase::Zero) ==
        format_ideal_text(transcribed, VariableBase::Zero));
}

TEST_CASE("every cell type lies in the ideal and outside types do not") {
  const auto p = fixtures::running_polytope();
  const auto ideal = ideal_generators(p.matroid);
  const auto complex = enumerate_all_cells(p);
  for (const auto& c : complex.cells) {
    CHECK(ideal_membership(fine_type(c.witness, p.generators).coarse(), ideal));
  }
  CHECK_FALSE(ideal_membership(CoarseType{{0, 0, 0, 0, 0}}, ideal));
  CHECK_FALSE(ideal_membership(CoarseType{{7, 0, 0, 0, 0}}, ideal));
  CHECK(ideal_membership(CoarseType{{8, 0, 0, 0, 0}}, ideal));
  CHECK(errc_of([&] { ideal_membership(CoarseType{{1, 1}}, ideal); }) == Errc::DimensionMismatch);
}

TEST_CASE("resolution ranks reverse the f-vector") {
  const auto complex = enumerate_all_cells(fixtures::running_polytope());
  CHECK(resolution_ranks(complex) == std::vector<std::size_t>{73, 180, 172, 78, 14});
}

TEST_CASE("ideal text round-trips and skips comments") {
  const auto ideal = ideal_generators(GroundMatroid::uniform(2, 4));
  for (auto base : {VariableBase::One, VariableBase::Zero}) {
    CHECK(parse_ideal_text(format_ideal_text(ideal, base), 4, base).generators == ideal.generators);
  }
  const auto parsed = parse_ideal_text("# header\n\nx_1^2\n  \nx_2^1*x_3^1\n", 3);
  CHECK(parsed.generators.size() == 2);
  CHECK(errc_of([] { parse_ideal_text("x_1\nbad\n", 3); }) == Errc::MalformedInput);
}
