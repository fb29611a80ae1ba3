#include <string>
#include <vector>

#include "check_error.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "tropmat/matroid.hpp"

using namespace tropmat;

namespace {

std::vector<ElementSet> sets(const std::vector<std::vector<int>>& lists) {
  std::vector<ElementSet> out;
  for (const auto& l : lists) out.emplace_back(std::span<const int>(l));
  return out;
}

Errc graph_error(const std::string& json) {
  const auto code = errc_of([&] { parse_graph(json); });
  REQUIRE(code.has_value());
  return *code;
}

LabeledGraph complete_graph(int n) {
  LabeledGraph g;
  for (int v = 0; v < n; ++v) g.vertices.push_back(std::string(1, static_cast<char>('a' + v)));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.edges.emplace_back(a, b);
  }
  return g;
}

}  // namespace

TEST_CASE("running example graph yields the eight listed bases in order") {
  const auto m = fixtures::running_example();
  CHECK(m.ground_size() == 5);
  CHECK(m.rank() == 3);
  CHECK(m.bases() == sets({{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5},
                           {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {3, 4, 5}}));
  CHECK(non_bases(m) == sets({{1, 2, 3}, {2, 4, 5}}));
  CHECK(m.basis(1) == ElementSet{1, 2, 4});
  CHECK(m.index_of(ElementSet{3, 4, 5}) == 8);
  CHECK_FALSE(m.is_basis(ElementSet{1, 2, 3}));
}

TEST_CASE("basis list fixture describes the same matroid") {
  const auto from_list =
      parse_basis_list(read_file(fixtures::path("running_example_bases.json")));
  CHECK(from_list == fixtures::running_example());
}

TEST_CASE("spanning tree methods agree") {
  for (int n : {3, 4, 5}) {
    CAPTURE(n);
    const auto g = complete_graph(n);
    const auto exhaustive = spanning_trees(g, SpanningTreeMethod::Exhaustive);
    CHECK(exhaustive == spanning_trees(g, SpanningTreeMethod::Recursive));
    std::size_t cayley = 1;
    for (int i = 0; i < n - 2; ++i) cayley *= static_cast<std::size_t>(n);
    CHECK(exhaustive.size() == cayley);
  }
  const auto running = parse_graph(read_file(fixtures::path("running_example_graph.json")));
  CHECK(spanning_trees(running, SpanningTreeMethod::Exhaustive) ==
        spanning_trees(running, SpanningTreeMethod::Recursive));
}

TEST_CASE("complete graphs give the expected matroids") {
  CHECK(fixtures::graph("k3.json") == GroundMatroid::uniform(2, 3));
  const auto k4 = fixtures::graph("k4.json");
  CHECK(k4.basis_count() == 16);
  CHECK(non_bases(k4).size() == 4);
  CHECK(check_exchange(k4));
}

TEST_CASE("invalid graphs are rejected with distinct codes") {
  CHECK(graph_error(R"({"vertices":[],"edges":[]})") == Errc::EmptyInput);
  CHECK(graph_error(R"({"vertices":["a","a"],"edges":[]})") == Errc::DuplicateVertex);
  CHECK(graph_error(R"({"vertices":["a","b"],"edges":[["a","c"]]})") == Errc::UnknownVertex);
  CHECK(graph_error(R"({"vertices":["a","b","c"],"edges":[["a","a"],["a","b"],["b","c"],["c","a"]]})") ==
        Errc::LoopEdge);
  CHECK(graph_error(R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","a"],["b","c"],["c","a"]]})") ==
        Errc::DuplicateEdge);
  CHECK(graph_error(R"({"vertices":["a","b","c","d","e","f"],"edges":[["a","b"],["b","c"],["c","a"],["d","e"],["e","f"],["f","d"]]})") ==
        Errc::Disconnected);
  CHECK(graph_error(R"({"vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","a"],["c","d"]]})") ==
        Errc::BridgePresent);
  CHECK(graph_error(R"({"vertices":["a"]})") == Errc::MalformedInput);
  CHECK(graph_error(R"({"vertices":["a","b"],"edges":[["a"]]})") == Errc::MalformedInput);
  CHECK(graph_error(R"({"vertices":[1,2],"edges":[]})") == Errc::MalformedInput);
  CHECK(graph_error("not json") == Errc::MalformedInput);
}

TEST_CASE("basis lists are validated") {
  const auto code = [](int ground, std::vector<std::vector<int>> bases) {
    return errc_of([&] { matroid_from_bases(ground, bases); });
  };
  CHECK(code(3, {}) == Errc::EmptyInput);
  CHECK(code(0, {{1}}) == Errc::OutOfRange);
  CHECK(code(3, {{1, 4}}) == Errc::OutOfRange);
  CHECK(code(3, {{1, 2}, {3}}) == Errc::UnequalBasisSizes);
  CHECK(code(3, {{1, 2}, {2, 1}, {1, 3}, {2, 3}}) == Errc::DuplicateBasis);
  CHECK(code(4, {{1, 2}, {3, 4}}) == Errc::ExchangeViolated);
  CHECK(code(3, {{1, 2}, {1, 3}}) == Errc::ElementInEveryBasis);
  CHECK(code(3, {{1}, {2}}) == Errc::ElementInNoBasis);
  CHECK(code(3, {{1, 1}}) == Errc::MalformedInput);
}

TEST_CASE("exchange property on explicit lists") {
  CHECK(check_exchange(sets({{1, 2}, {1, 3}, {2, 3}})));
  CHECK_FALSE(check_exchange(sets({{1, 2}, {3, 4}})));
  CHECK(check_exchange(fixtures::running_example()));
}

TEST_CASE("uniform matroids contain every k-subset") {
  const auto u = GroundMatroid::uniform(2, 4);
  CHECK(u.basis_count() == 6);
  CHECK(non_bases(u).empty());
  CHECK(errc_of([] { GroundMatroid::uniform(3, 3); }) == Errc::OutOfRange);
  CHECK(errc_of([] { GroundMatroid::uniform(0, 3); }) == Errc::OutOfRange);
}

TEST_CASE("basis counts with forced and forbidden elements") {
  const auto m = fixtures::running_example();
  CHECK(count_b(m, ElementSet{}, ElementSet{}) == 8);
  CHECK(count_b(m, ElementSet{1}, ElementSet{}) == 5);
  CHECK(count_b(m, ElementSet{}, ElementSet{1}) == 3);
  CHECK(count_b(m, ElementSet{1}, ElementSet{2, 3}) == 1);
  CHECK(errc_of([&] { count_b(m, ElementSet{1}, ElementSet{1}); }) == Errc::OverlappingSets);
}

TEST_CASE("binomials and subsets") {
  CHECK(binomial(5, 3) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(200, 100) == std::numeric_limits<std::uint64_t>::max());
  CHECK(k_subsets(4, 2) == sets({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  CHECK(k_subsets(3, 0) == sets({{}}));
  CHECK(k_subsets(3, 4).empty());
}
