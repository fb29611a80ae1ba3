#include "tropmat/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tropmat/cell_complex.hpp"
#include "tropmat/coarse_ideal.hpp"
#include "tropmat/error.hpp"
#include "tropmat/halfspace_hull.hpp"
#include "tropmat/invariants.hpp"
#include "tropmat/io.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/polytope.hpp"

namespace tropmat {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(Errc::MalformedInput, message);
}

bool needs_matroid(const std::string& command) {
  return command != "hypersimplex-halfspaces" && command != "check-minimal" &&
         command != "verify-exterior";
}

OutputFormat default_format(const RunConfig& c) {
  if (c.command == "skeleton") return OutputFormat::Dot;
  if (c.command == "check" || c.command == "ideal") return OutputFormat::Text;
  if (c.command == "coarse-types" && c.coarse_mode == CoarseMode::CrossValidate) {
    return OutputFormat::Text;
  }
  return OutputFormat::Json;
}

OutputFormat resolved_format(const RunConfig& c) {
  return c.format == OutputFormat::Auto ? default_format(c) : c.format;
}

GroundMatroid load_matroid(const RunConfig& c) {
  switch (c.input_kind) {
    case InputKind::Graph:
      return enumerate_bases(parse_graph(read_file(c.input_path)));
    case InputKind::Bases:
      return parse_basis_list(read_file(c.input_path));
    case InputKind::Uniform:
      return GroundMatroid::uniform(*c.k, *c.d + 1);
    case InputKind::None:
      break;
  }
  invalid("no input given; use --graph, --bases or --uniform");
}

/// Generators and halfspace system for the halfspace commands: a file
/// system checked against the input polytope, or the hypersimplex system.
struct HalfspaceJob {
  std::vector<TropicalPoint> generators;
  HalfspaceSystem system;
};

HalfspaceJob load_halfspace_job(const RunConfig& c) {
  HalfspaceJob job;
  if (c.input_kind == InputKind::Graph || c.input_kind == InputKind::Bases) {
    job.generators = build_polytope(load_matroid(c)).generators;
  } else {
    job.generators = hypersimplex_generators(*c.k, *c.d);
  }
  if (c.halfspaces_path.empty()) {
    job.system = hypersimplex_halfspaces(*c.k, *c.d);
    return job;
  }
  const Json parsed = Json::parse(read_file(c.halfspaces_path), nullptr, false);
  if (parsed.is_discarded()) invalid("malformed halfspace JSON in '" + c.halfspaces_path + "'");
  job.system = halfspace_system_from_json(parsed);
  if (job.system.halfspaces.empty()) invalid("halfspace system is empty");
  return job;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

void require_format(const RunConfig& c, std::initializer_list<OutputFormat> allowed) {
  const OutputFormat f = resolved_format(c);
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    invalid("output format not supported by '" + c.command + "'");
  }
}

int cmd_bases(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Json, OutputFormat::Text});
  const auto m = load_matroid(c);
  if (resolved_format(c) == OutputFormat::Json) {
    emit(out, to_json(m));
  } else {
    for (ElementSet b : m.bases()) out << to_string(b) << '\n';
  }
  return kExitOk;
}

int cmd_nonbases(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Json, OutputFormat::Text});
  const auto nb = non_bases(load_matroid(c));
  if (resolved_format(c) == OutputFormat::Json) {
    Json j = Json::array();
    for (ElementSet s : nb) j.push_back(to_json(s));
    emit(out, j);
  } else {
    for (ElementSet s : nb) out << to_string(s) << '\n';
  }
  return kExitOk;
}

int cmd_generators(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Json, OutputFormat::Text});
  const auto p = build_polytope(load_matroid(c));
  if (resolved_format(c) == OutputFormat::Json) {
    Json j = Json::array();
    for (const auto& g : p.generators) j.push_back(to_json(g));
    emit(out, j);
  } else {
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      out << "v_" << i + 1 << ' ' << to_string(p.matroid.bases()[i]) << ' '
          << to_string(p.generators[i]) << '\n';
    }
  }
  return kExitOk;
}

int cmd_origin_type(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Json, OutputFormat::Text});
  const auto p = build_polytope(load_matroid(c));
  if (resolved_format(c) == OutputFormat::Json) {
    emit(out, to_json(p.origin_type));
  } else {
    out << to_string(p.origin_type) << '\n';
  }
  return kExitOk;
}

int cmd_corners(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Json, OutputFormat::Text});
  const auto p = build_polytope(load_matroid(c));
  const std::span<const TropicalPoint> gens(p.generators);
  Json j = Json::array();
  for (int i = 1; i <= p.ambient(); ++i) {
    const TropicalPoint x = corner(p, i);
    const FineType t = fine_type(x, gens);
    if (resolved_format(c) == OutputFormat::Json) {
      j.push_back({{"coordinate", i}, {"point", to_json(x)}, {"type", to_json(t)}});
    } else {
      out << "c_" << i << ' ' << to_string(x) << ' ' << to_string(t) << '\n';
    }
  }
  if (resolved_format(c) == OutputFormat::Json) emit(out, j);
  return kExitOk;
}

int cmd_pseudovertices(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Json, OutputFormat::Text});
  const auto p = build_polytope(load_matroid(c));
  const auto pvs = pseudovertices(p);
  if (resolved_format(c) == OutputFormat::Json) {
    Json j = Json::array();
    for (const auto& v : pvs) j.push_back(to_json(v, p));
    emit(out, j);
  } else {
    for (const auto& v : pvs) {
      out << pseudovertex_label(p, v.support) << ' ' << to_string(v.point) << ' '
          << to_string(v.type) << '\n';
    }
  }
  return kExitOk;
}

int cmd_bounded_cells(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Json, OutputFormat::Text});
  const auto p = build_polytope(load_matroid(c));
  const auto cells = maximal_bounded_cells(p);
  if (resolved_format(c) == OutputFormat::Json) {
    Json j = Json::array();
    for (const auto& cell : cells) j.push_back(to_json(cell));
    emit(out, j);
  } else {
    for (const auto& cell : cells) {
      out << "B_" << cell.basis_index << " seq";
      for (int i : cell.sequence) out << ' ' << i;
      out << ' ' << to_string(cell.interior_type) << '\n';
    }
  }
  return kExitOk;
}

int cmd_complex(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Json, OutputFormat::Text});
  const auto p = build_polytope(load_matroid(c));
  const auto complex = enumerate_all_cells(p, {c.cap});
  std::vector<std::size_t> f = complex.f_vector;
  if (c.with_empty_face) f.insert(f.begin(), 1);
  const bool json = resolved_format(c) == OutputFormat::Json;
  if (c.fvector) {
    if (json) {
      emit(out, f);
    } else {
      for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
      out << '\n';
    }
    return kExitOk;
  }
  if (json) {
    emit(out, {{"f_vector", f},
               {"euler_characteristic", complex.euler_characteristic()},
               {"cells", to_json(complex.cells)}});
  } else {
    for (const auto& cell : complex.cells) {
      out << cell.dimension << (cell.bounded ? " bounded " : " unbounded ")
          << to_string(cell.type) << ' ' << to_string(cell.witness) << '\n';
    }
  }
  return kExitOk;
}

int cmd_coarse_types(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Json, OutputFormat::Text});
  const auto p = build_polytope(load_matroid(c));
  const bool json = resolved_format(c) == OutputFormat::Json;
  switch (c.coarse_mode) {
    case CoarseMode::Formula: {
      const auto types = theorem_coarse_types(p.matroid);
      Json j = Json::array();
      for (const auto& s : types) {
        if (json) {
          j.push_back({{"sequence", s.sequence}, {"type", to_json(s.type)}});
        } else {
          for (std::size_t i = 0; i < s.sequence.size(); ++i) {
            out << (i ? "," : "") << s.sequence[i];
          }
          out << ' ' << to_string(s.type) << '\n';
        }
      }
      if (json) emit(out, j);
      return kExitOk;
    }
    case CoarseMode::Brute: {
      const auto cells = enumerate_maximal_cells(p, {c.cap});
      std::vector<CoarseType> types;
      for (const auto& cell : cells) types.push_back(cell.type.coarse());
      std::sort(types.begin(), types.end());
      Json j = Json::array();
      for (const auto& t : types) {
        if (json) {
          j.push_back(to_json(t));
        } else {
          out << to_string(t) << '\n';
        }
      }
      if (json) emit(out, j);
      return kExitOk;
    }
    case CoarseMode::CrossValidate: {
      const auto report = cross_validate(p, {c.cap});
      if (json) {
        emit(out, to_json(report));
      } else if (report.ok()) {
        out << "OK: " << report.enumerated << " cells, formula == enumeration\n";
      } else {
        out << "MISMATCH: " << report.enumerated << " enumerated, " << report.formula
            << " by formula" << (report.set_equal ? " (equal as sets)" : "") << '\n';
        for (const auto& t : report.missing_from_formula) {
          out << "  missing from formula " << to_string(t) << '\n';
        }
        for (const auto& t : report.extra_in_formula) {
          out << "  extra in formula " << to_string(t) << '\n';
        }
      }
      return report.ok() ? kExitOk : kExitMismatch;
    }
  }
  return kExitOk;
}

int cmd_ideal(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Json, OutputFormat::Text});
  const auto ideal = ideal_generators(load_matroid(c));
  if (resolved_format(c) == OutputFormat::Json) {
    emit(out, to_json(ideal));
  } else {
    out << format_ideal_text(ideal, c.zero_based_vars ? VariableBase::Zero : VariableBase::One);
  }
  return kExitOk;
}

int cmd_hypersimplex_halfspaces(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Json, OutputFormat::Text});
  const auto system = hypersimplex_halfspaces(*c.k, *c.d);
  if (resolved_format(c) == OutputFormat::Json) {
    emit(out, to_json(system));
  } else {
    out << inequality_form(system);
  }
  return kExitOk;
}

int cmd_check_minimal(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Json, OutputFormat::Text});
  const auto job = load_halfspace_job(c);
  const std::span<const TropicalPoint> gens(job.generators);
  bool all = true;
  Json j = Json::array();
  for (const auto& h : job.system.halfspaces) {
    const bool minimal = gk_minimal(h, gens);
    all = all && minimal;
    if (resolved_format(c) == OutputFormat::Json) {
      j.push_back({{"halfspace", to_json(h)}, {"minimal", minimal}});
    } else {
      out << (minimal ? "minimal     " : "not minimal ") << inequality_form(h) << '\n';
    }
  }
  if (resolved_format(c) == OutputFormat::Json) emit(out, j);
  return all ? kExitOk : kExitMismatch;
}

int cmd_verify_exterior(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Json, OutputFormat::Text});
  const auto job = load_halfspace_job(c);
  const auto report = verify_exterior_description(job.system, job.generators, c.probe_budget);
  if (resolved_format(c) == OutputFormat::Json) {
    emit(out, to_json(report));
  } else {
    out << (report.ok() ? "PASS" : "FAIL") << ": " << report.lattice_probes
        << " lattice probes, " << report.anchor_probes << " anchor probes, "
        << report.counterexamples.size() << " counterexamples\n";
    for (const auto& cex : report.counterexamples) {
      out << "  " << to_string(cex.point) << (cex.in_hull ? " in hull" : " outside hull")
          << (cex.in_system ? ", satisfies system\n" : ", violates system\n");
    }
  }
  return report.ok() ? kExitOk : kExitMismatch;
}

int cmd_skeleton(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Dot});
  const auto p = build_polytope(load_matroid(c));
  out << skeleton_dot(p, enumerate_all_cells(p, {c.cap}));
  return kExitOk;
}

int cmd_check(const RunConfig& c, std::ostream& out) {
  require_format(c, {OutputFormat::Json, OutputFormat::Text});
  const auto results = run_invariant_suite(build_polytope(load_matroid(c)), {c.cap});
  if (resolved_format(c) == OutputFormat::Json) {
    Json j = Json::array();
    for (const auto& r : results) {
      j.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    emit(out, j);
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) out << ": " << r.detail;
      out << '\n';
    }
  }
  return all_passed(results) ? kExitOk : kExitMismatch;
}

using Handler = int (*)(const RunConfig&, std::ostream&);

struct Command {
  Handler handler;
  const char* description;
};

const std::map<std::string, Command>& handlers() {
  static const std::map<std::string, Command> table{
      {"bases", {cmd_bases, "list the bases of the matroid"}},
      {"nonbases", {cmd_nonbases, "list the k-subsets that are not bases"}},
      {"generators", {cmd_generators, "tropical generators, one per basis"}},
      {"origin-type", {cmd_origin_type, "fine type of the origin"}},
      {"corners", {cmd_corners, "corner points and their types"}},
      {"pseudovertices", {cmd_pseudovertices, "pseudovertices with their types"}},
      {"bounded-cells", {cmd_bounded_cells, "maximal bounded cells from valid sequences"}},
      {"complex", {cmd_complex, "full polyhedral complex of types"}},
      {"coarse-types", {cmd_coarse_types, "coarse types of maximal cells"}},
      {"ideal", {cmd_ideal, "minimal generators of the coarse-type ideal"}},
      {"hypersimplex-halfspaces", {cmd_hypersimplex_halfspaces, "minimal halfspace system of a hypersimplex"}},
      {"check-minimal", {cmd_check_minimal, "test every halfspace of a system for minimality"}},
      {"verify-exterior", {cmd_verify_exterior, "probe a halfspace system against the hull"}},
      {"skeleton", {cmd_skeleton, "bounded 1-skeleton as a graph"}},
      {"check", {cmd_check, "run every structural invariant"}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, command] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

void validate_config(const RunConfig& c) {
  if (!handlers().contains(c.command)) invalid("unknown command '" + c.command + "'");
  const bool has_kd = c.k.has_value() || c.d.has_value();
  if (has_kd && !(c.k && c.d)) invalid("-k and -d go together");
  if (c.input_kind == InputKind::Uniform && !has_kd) invalid("uniform input needs k and d");
  if ((c.input_kind == InputKind::Graph || c.input_kind == InputKind::Bases) &&
      c.input_path.empty()) {
    invalid("input file path is empty");
  }
  if ((c.input_kind == InputKind::Graph || c.input_kind == InputKind::Bases) && has_kd) {
    invalid("-k/-d cannot be combined with --graph or --bases");
  }
  if (needs_matroid(c.command) && c.input_kind == InputKind::None) {
    invalid("'" + c.command + "' needs one of --graph, --bases, --uniform");
  }
  if (c.command == "hypersimplex-halfspaces") {
    if (!has_kd) invalid("hypersimplex-halfspaces needs -k and -d");
    if (c.input_kind == InputKind::Graph || c.input_kind == InputKind::Bases) {
      invalid("hypersimplex-halfspaces takes no matroid input");
    }
  }
  if ((c.command == "check-minimal" || c.command == "verify-exterior") &&
      c.halfspaces_path.empty() && !has_kd) {
    invalid("'" + c.command + "' needs --halfspaces or -k/-d");
  }
  if ((c.command == "check-minimal" || c.command == "verify-exterior") &&
      !c.halfspaces_path.empty() && c.input_kind == InputKind::None && !has_kd) {
    invalid("a halfspace file needs the polytope it describes");
  }
  if (c.with_empty_face && !c.fvector) invalid("--with-empty-face requires --fvector");
  if (c.fvector && c.command != "complex") invalid("--fvector belongs to 'complex'");
  if (c.zero_based_vars && c.command != "ideal") invalid("--zero-based-vars belongs to 'ideal'");
  if (c.coarse_mode != CoarseMode::Formula && c.command != "coarse-types") {
    invalid("--brute/--cross-validate belong to 'coarse-types'");
  }
  if (c.cap == 0) invalid("--cap must be positive");
  if (c.probe_budget == 0) invalid("--probes must be positive");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate_config(config);
    std::ostringstream buffer;
    const int status = handlers().at(config.command).handler(config, buffer);
    out << buffer.str();
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::InternalAssertion ? kExitMismatch : kExitValidation;
  }
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical matroid polytopes: bases, types, cells, ideals, halfspaces"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig config;
  std::string graph_path;
  std::string bases_path;
  std::string uniform;
  std::string format = "auto";

  auto* graph_opt = app.add_option("--graph", graph_path, "graph JSON file");
  auto* bases_opt = app.add_option("--bases", bases_path, "basis list JSON file");
  auto* uniform_opt = app.add_option("--uniform", uniform, "uniform matroid U_{k,d+1} as k,d");
  graph_opt->excludes(bases_opt)->excludes(uniform_opt);
  bases_opt->excludes(uniform_opt);
  app.add_option("--format", format, "json, text or dot")
      ->check(CLI::IsMember({"auto", "json", "text", "dot"}));
  app.add_option("--cap", config.cap, "search budget for cell enumeration");

  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name, handlers().at(name).description);
    if (name == "complex") {
      sub->add_flag("--fvector", config.fvector, "print only the f-vector");
      sub->add_flag("--with-empty-face", config.with_empty_face, "prepend the empty face");
    } else if (name == "coarse-types") {
      auto* f = sub->add_flag("--formula", "closed-form coarse types (default)");
      auto* b = sub->add_flag("--brute", "coarse types of enumerated maximal cells");
      auto* x = sub->add_flag("--cross-validate", "compare formula with enumeration");
      f->excludes(b)->excludes(x);
      b->excludes(x);
      sub->callback([&config, b, x] {
        if (b->count()) config.coarse_mode = CoarseMode::Brute;
        if (x->count()) config.coarse_mode = CoarseMode::CrossValidate;
      });
    } else if (name == "ideal") {
      sub->add_flag("--zero-based-vars", config.zero_based_vars, "name variables x_0..x_d");
    } else if (name == "hypersimplex-halfspaces" || name == "check-minimal" ||
               name == "verify-exterior") {
      sub->add_option("-k", config.k, "rank");
      sub->add_option("-d", config.d, "dimension");
      if (name != "hypersimplex-halfspaces") {
        sub->add_option("--halfspaces", config.halfspaces_path, "halfspace system JSON file");
      }
      if (name == "verify-exterior") {
        sub->add_option("--probes", config.probe_budget, "lattice probe budget");
      }
    } else if (name == "skeleton") {
      sub->add_flag("--dot", "emit Graphviz DOT (the only format)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (!graph_path.empty()) {
    config.input_kind = InputKind::Graph;
    config.input_path = graph_path;
  } else if (!bases_path.empty()) {
    config.input_kind = InputKind::Bases;
    config.input_path = bases_path;
  } else if (!uniform.empty()) {
    config.input_kind = InputKind::Uniform;
    int k = 0;
    int d = 0;
    char comma = 0;
    std::istringstream in(uniform);
    if (!(in >> k >> comma >> d) || comma != ',' || !in.eof()) {
      err << "error: --uniform expects k,d\n";
      return kExitValidation;
    }
    if ((config.k && *config.k != k) || (config.d && *config.d != d)) {
      err << "error: --uniform disagrees with -k/-d\n";
      return kExitValidation;
    }
    config.k = k;
    config.d = d;
  }
  if (format == "json") config.format = OutputFormat::Json;
  if (format == "text") config.format = OutputFormat::Text;
  if (format == "dot") config.format = OutputFormat::Dot;
  return run(config, out, err);
}

}  // namespace tropmat
