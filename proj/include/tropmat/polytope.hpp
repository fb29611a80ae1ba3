#pragma once

#include <string>
#include <vector>

#include "tropmat/element_set.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/minplus.hpp"

namespace tropmat {

/// Tropical convex hull of the negative incidence vectors -e_B of a
/// matroid's bases.
struct PolytopeModel {
  GroundMatroid matroid;
  /// Canonical generators v_B: 0 on B, 1 elsewhere, in basis order.
  std::vector<TropicalPoint> generators;
  /// type of the origin; entry i = {j : i in B_j}.
  FineType origin_type;

  int ambient() const { return matroid.ground_size(); }
  int dim() const { return matroid.ground_size() - 1; }
  int rank() const { return matroid.rank(); }
  std::size_t generator_count() const { return generators.size(); }
};

PolytopeModel build_polytope(const GroundMatroid& m);

/// Canonical generator of basis b: 0 on b and 1 on its complement.
TropicalPoint basis_point(ElementSet b, int ground_size);

/// c_i(V), 1-based. For every matroid polytope this is e_i.
TropicalPoint corner(const PolytopeModel& p, int coordinate);

/// Type of the corner e_i from the closed form: entry i is all of [n], entry
/// j != i is {l : j in B_l, i not in B_l}.
FineType corner_type_by_formula(const PolytopeModel& p, int coordinate);

/// 0-dimensional cell -e_J for a union J of bases.
struct PseudoVertex {
  ElementSet support;  // J
  TropicalPoint point;  // canonical: 0 on J, 1 on the complement
  FineType type;
};

/// Type of -e_J from the origin type alone: for j in J the entry is
/// T0_j minus the entries of the deleted coordinates; otherwise T0_j united
/// with the generators avoiding every deleted coordinate.
FineType pseudovertex_type_by_formula(const PolytopeModel& p, ElementSet support);

/// All unions of nonempty basis collections whose type is 0-dimensional,
/// sorted by (|J|, lex J). For U_{1,d+1} the origin is excluded since it is an
/// interior point of the standard simplex.
std::vector<PseudoVertex> pseudovertices(const PolytopeModel& p);

/// Display name: "0" for the origin, "v_i" for generator i, otherwise
/// "e_{i1,i2,...}" listing the deleted coordinates.
std::string pseudovertex_label(const PolytopeModel& p, ElementSet support);

/// Ordered edge deletions (i_1, ..., i_m) whose complement still contains a
/// basis. Coordinates are 1-based.
using ValidSequence = std::vector<int>;

/// Deleting the set still leaves a basis.
bool is_valid_deletion(const GroundMatroid& m, ElementSet deleted);

/// All valid sequences of the given length, lexicographic. Requires
/// 0 <= length <= d-k+1.
std::vector<ValidSequence> valid_sequences(const PolytopeModel& p, int length);

struct BoundedCell {
  ValidSequence sequence;
  ElementSet basis;
  int basis_index = 0;  // 1-based
  /// 0, e_{i1}, e_{i1,i2}, ..., v_B; canonical.
  std::vector<TropicalPoint> vertex_chain;
  FineType interior_type;

  /// Ordinary average of the chain, a rational relative-interior point.
  TropicalPoint sample_point() const;
};

/// One cell per complete valid sequence; n * (d+1-k)! of them. Requires k <= d.
std::vector<BoundedCell> maximal_bounded_cells(const PolytopeModel& p);

}  // namespace tropmat
