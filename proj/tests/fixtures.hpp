#pragma once

#include <string>

#include "tropmat/io.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/polytope.hpp"

namespace fixtures {

inline std::string path(const std::string& name) {
  return std::string(TROPMAT_FIXTURE_DIR) + "/" + name;
}

inline tropmat::GroundMatroid graph(const std::string& name) {
  return tropmat::enumerate_bases(tropmat::parse_graph(tropmat::read_file(path(name))));
}

inline tropmat::GroundMatroid running_example() { return graph("running_example_graph.json"); }

inline tropmat::PolytopeModel running_polytope() {
  return tropmat::build_polytope(running_example());
}

inline tropmat::Json expected() {
  return tropmat::Json::parse(tropmat::read_file(path("running_example_expected.json")));
}

inline tropmat::FineType type_of(const tropmat::Json& j) {
  return tropmat::fine_type_from_json(j);
}

}  // namespace fixtures
