#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tropmat/cell_complex.hpp"
#include "tropmat/coarse_ideal.hpp"
#include "tropmat/halfspace_hull.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/minplus.hpp"
#include "tropmat/polytope.hpp"

namespace tropmat {

using Json = nlohmann::json;

/// Integers stay JSON numbers; other rationals become "p/q" strings.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Canonical coordinates, so equal classes serialize identically.
Json to_json(const TropicalPoint& p);
TropicalPoint point_from_json(const Json& j);

Json to_json(const FineType& t);
FineType fine_type_from_json(const Json& j);
Json to_json(const CoarseType& t);
CoarseType coarse_type_from_json(const Json& j);
Json to_json(ElementSet s);

Json to_json(const GroundMatroid& m);
/// {"ground_size":int,"bases":[[int...]...]}
GroundMatroid parse_basis_list(std::string_view json_text);
GroundMatroid matroid_from_json(const Json& j);

Json to_json(const PolytopeModel& p);
Json to_json(const PseudoVertex& v, const PolytopeModel& p);
Json to_json(const BoundedCell& c);

/// {"type":..,"dim":..,"bounded":..,"coarse":..,"witness":..}
Json to_json(const CellRecord& c);
CellRecord cell_from_json(const Json& j);
Json to_json(const std::vector<CellRecord>& cells);
Json to_json(const CrossValidationReport& r);

Json to_json(const TropicalHalfspace& h);
TropicalHalfspace halfspace_from_json(const Json& j);
Json to_json(const HalfspaceSystem& s);
HalfspaceSystem halfspace_system_from_json(const Json& j);
Json to_json(const ExteriorReport& r);

/// List of exponent arrays.
Json to_json(const MonomialIdealModel& ideal);
MonomialIdealModel ideal_from_json(const Json& j);

/// Undirected DOT graph: pseudovertices as nodes, bounded edges of the
/// complex as edges. Node names follow pseudovertex_label.
std::string skeleton_dot(const PolytopeModel& p, const CellComplexModel& complex);

/// Reads a whole file; throws Error(MalformedInput) if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace tropmat
