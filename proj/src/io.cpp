#include "tropmat/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "tropmat/error.hpp"

namespace tropmat {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::MalformedInput, std::string("malformed ") + what + ": " + e.what());
  }
}

Json parse_document(std::string_view text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::MalformedInput, std::string("malformed ") + what + " JSON: " + e.what());
  }
}

void require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::MalformedInput, std::string(what) + " must be an array");
}

IndexSet index_set_from_json(const Json& j) {
  require_array(j, "type entry");
  IndexSet s;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(Errc::MalformedInput, "type entries hold integers");
    s.push_back(v.get<int>());
  }
  return s;
}

}  // namespace

Json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(Errc::MalformedInput, "rationals are integers or \"p/q\" strings");
}

Json to_json(const TropicalPoint& p) {
  Json out = Json::array();
  const TropicalPoint canonical = p.canonical();
  for (const auto& c : canonical.coords()) out.push_back(rational_to_json(c));
  return out;
}

TropicalPoint point_from_json(const Json& j) {
  require_array(j, "point");
  if (j.empty()) throw Error(Errc::EmptyInput, "point has no coordinates");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return TropicalPoint(std::move(c));
}

Json to_json(const FineType& t) {
  Json out = Json::array();
  for (const auto& e : t.entries()) out.push_back(e);
  return out;
}

FineType fine_type_from_json(const Json& j) {
  require_array(j, "type");
  std::vector<IndexSet> entries;
  for (const auto& e : j) entries.push_back(index_set_from_json(e));
  return FineType(std::move(entries));
}

Json to_json(const CoarseType& t) { return t.counts; }

CoarseType coarse_type_from_json(const Json& j) {
  require_array(j, "coarse type");
  return guarded("coarse type", [&] { return CoarseType{j.get<std::vector<int>>()}; });
}

Json to_json(ElementSet s) { return s.elements(); }

Json to_json(const GroundMatroid& m) {
  Json bases = Json::array();
  for (ElementSet b : m.bases()) bases.push_back(to_json(b));
  return {{"ground_size", m.ground_size()}, {"rank", m.rank()}, {"bases", bases}};
}

GroundMatroid matroid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground_size") || !j.contains("bases")) {
    throw Error(Errc::MalformedInput, "basis list needs \"ground_size\" and \"bases\"");
  }
  return guarded("basis list", [&] {
    const int ground = j.at("ground_size").get<int>();
    const auto bases = j.at("bases").get<std::vector<std::vector<int>>>();
    if (bases.empty()) throw Error(Errc::EmptyInput, "basis list is empty");
    return matroid_from_bases(ground, bases);
  });
}

GroundMatroid parse_basis_list(std::string_view json_text) {
  return matroid_from_json(parse_document(json_text, "basis list"));
}

Json to_json(const PolytopeModel& p) {
  Json gens = Json::array();
  for (const auto& g : p.generators) gens.push_back(to_json(g));
  return {{"matroid", to_json(p.matroid)},
          {"generators", gens},
          {"origin_type", to_json(p.origin_type)}};
}

Json to_json(const PseudoVertex& v, const PolytopeModel& p) {
  return {{"label", pseudovertex_label(p, v.support)},
          {"support", to_json(v.support)},
          {"point", to_json(v.point)},
          {"type", to_json(v.type)}};
}

Json to_json(const BoundedCell& c) {
  Json chain = Json::array();
  for (const auto& v : c.vertex_chain) chain.push_back(to_json(v));
  return {{"sequence", c.sequence},
          {"basis", to_json(c.basis)},
          {"basis_index", c.basis_index},
          {"vertex_chain", chain},
          {"interior_type", to_json(c.interior_type)},
          {"dim", cell_dimension(c.interior_type)}};
}

Json to_json(const CellRecord& c) {
  return {{"type", to_json(c.type)},
          {"dim", c.dimension},
          {"bounded", c.bounded},
          {"coarse", to_json(c.type.coarse())},
          {"witness", to_json(c.witness)}};
}

CellRecord cell_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::MalformedInput, "cell must be an object");
  return guarded("cell", [&] {
    CellRecord c;
    c.type = fine_type_from_json(j.at("type"));
    c.dimension = j.at("dim").get<int>();
    c.bounded = j.at("bounded").get<bool>();
    c.witness = point_from_json(j.at("witness"));
    return c;
  });
}

Json to_json(const std::vector<CellRecord>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) out.push_back(to_json(c));
  return out;
}

Json to_json(const CrossValidationReport& r) {
  Json missing = Json::array();
  for (const auto& t : r.missing_from_formula) missing.push_back(to_json(t));
  Json extra = Json::array();
  for (const auto& t : r.extra_in_formula) extra.push_back(to_json(t));
  return {{"enumerated", r.enumerated},
          {"formula", r.formula},
          {"multiset_equal", r.multiset_equal},
          {"set_equal", r.set_equal},
          {"missing_from_formula", missing},
          {"extra_in_formula", extra}};
}

Json to_json(const TropicalHalfspace& h) {
  return {{"apex", to_json(h.apex())}, {"sectors", h.sectors()}};
}

TropicalHalfspace halfspace_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::MalformedInput, "halfspace must be an object");
  return guarded("halfspace", [&] {
    return TropicalHalfspace(point_from_json(j.at("apex")),
                             j.at("sectors").get<std::vector<int>>());
  });
}

Json to_json(const HalfspaceSystem& s) {
  Json out = Json::array();
  for (const auto& h : s.halfspaces) out.push_back(to_json(h));
  return out;
}

HalfspaceSystem halfspace_system_from_json(const Json& j) {
  require_array(j, "halfspace system");
  HalfspaceSystem s;
  for (const auto& h : j) s.halfspaces.push_back(halfspace_from_json(h));
  return s;
}

Json to_json(const ExteriorReport& r) {
  Json cex = Json::array();
  for (const auto& c : r.counterexamples) {
    cex.push_back({{"point", to_json(c.point)},
                   {"in_hull", c.in_hull},
                   {"in_system", c.in_system}});
  }
  return {{"pass", r.ok()},
          {"generators_contained", r.generators_contained},
          {"lattice_probes", r.lattice_probes},
          {"anchor_probes", r.anchor_probes},
          {"counterexamples", cex}};
}

Json to_json(const MonomialIdealModel& ideal) {
  Json out = Json::array();
  for (const auto& g : ideal.generators) out.push_back(g.exponents);
  return out;
}

MonomialIdealModel ideal_from_json(const Json& j) {
  require_array(j, "ideal");
  if (j.empty()) throw Error(Errc::EmptyInput, "ideal has no generators");
  return guarded("ideal", [&] {
    std::vector<Monomial> gens;
    for (const auto& e : j) gens.push_back({e.get<std::vector<int>>()});
    for (const auto& g : gens) {
      for (int a : g.exponents) {
        if (a < 0) throw Error(Errc::MalformedInput, "negative exponent");
      }
    }
    const std::size_t variables = gens.front().variables();
    return make_ideal(variables, std::move(gens));
  });
}

std::string skeleton_dot(const PolytopeModel& p, const CellComplexModel& complex) {
  const auto pvs = pseudovertices(p);
  std::vector<std::string> names;
  std::vector<const CellRecord*> vertices;
  for (const auto& c : complex.cells) {
    if (c.dimension != 0 || !c.bounded) continue;
    std::string name = to_string(c.witness);
    for (const auto& v : pvs) {
      if (v.point == c.witness) name = pseudovertex_label(p, v.support);
    }
    names.push_back(std::move(name));
    vertices.push_back(&c);
  }

  std::ostringstream out;
  out << "graph skeleton {\n";
  for (const auto& n : names) out << "  \"" << n << "\";\n";
  for (const auto& c : complex.cells) {
    if (c.dimension != 1 || !c.bounded) continue;
    std::vector<std::size_t> ends;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (vertices[v]->type.contains(c.type)) ends.push_back(v);
    }
    if (ends.size() != 2) {
      throw Error(Errc::InternalAssertion, "bounded edge without two endpoints");
    }
    out << "  \"" << names[ends[0]] << "\" -- \"" << names[ends[1]] << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::MalformedInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tropmat
