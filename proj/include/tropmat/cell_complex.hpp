#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tropmat/matroid.hpp"
#include "tropmat/minplus.hpp"
#include "tropmat/polytope.hpp"

namespace tropmat {

/// Components of the graph on the coordinates joining j and k whenever
/// T_j and T_k meet, minus one. Empty entries are isolated vertices.
int cell_dimension(const FineType& t);

struct CellRecord {
  FineType type;
  int dimension = 0;
  bool bounded = false;
  /// Canonical rational point in the relative interior.
  TropicalPoint witness;
};

struct CellComplexModel {
  /// Sorted by (dimension, type).
  std::vector<CellRecord> cells;
  /// f_0, ..., f_d, without the empty face.
  std::vector<std::size_t> f_vector;

  /// Sum of (-1)^i f_i.
  long euler_characteristic() const;
};

struct EnumerationOptions {
  /// Upper bound on the number of partial argmin assignments tested.
  std::uint64_t cap = 10'000'000;
};

/// Full-dimensional cells, one per realizable argmin map, sorted by type.
std::vector<CellRecord> enumerate_maximal_cells(std::span<const TropicalPoint> generators,
                                                const EnumerationOptions& options = {});
std::vector<CellRecord> enumerate_maximal_cells(const PolytopeModel& p,
                                                const EnumerationOptions& options = {});

/// Every cell of the complex, found by tightening one inequality at a time
/// starting from the maximal cells.
CellComplexModel enumerate_all_cells(std::span<const TropicalPoint> generators,
                                     const EnumerationOptions& options = {});
CellComplexModel enumerate_all_cells(const PolytopeModel& p,
                                     const EnumerationOptions& options = {});

/// Affine dimension of the closed cell {x : type(x) contains t}, read off the
/// implicit equalities of its difference-constraint system. Independent of
/// cell_dimension; -1 if the cell is empty.
int face_affine_dimension(const FineType& t, std::span<const TropicalPoint> generators);

struct SequenceCoarseType {
  /// (i_1, ..., i_{d'+1}), 1-based coordinates.
  std::vector<int> sequence;
  CoarseType type;
};

/// Closed-form coarse types of the maximal cells, one per admissible
/// sequence, d' ranging over 0..d-k+1. Ordered by length, then sequence.
std::vector<SequenceCoarseType> theorem_coarse_types(const GroundMatroid& m);

/// Closed-form tuple for the uniform matroid U_{k,d+1} and a given alpha,
/// padded with zeros to length d+1. alpha = 0 is accepted for inspection
/// even though its first entry exceeds the generator count.
CoarseType hypersimplex_alpha_tuple(int k, int d, int alpha);

/// The tuples for alpha = 1..d+2-k, sorted and deduplicated.
/// Requires 2 <= k <= d.
std::vector<CoarseType> hypersimplex_coarse_types(int k, int d);

/// Entries sorted descending: a representative of the orbit under
/// coordinate permutations.
CoarseType orbit_representative(const CoarseType& t);

struct CrossValidationReport {
  std::size_t enumerated = 0;
  std::size_t formula = 0;
  /// Equal as multisets: the sequences and the cells correspond one to one.
  bool multiset_equal = false;
  /// Equal after discarding multiplicities.
  bool set_equal = false;
  /// Coarse types whose multiplicity is higher on the enumeration side.
  std::vector<CoarseType> missing_from_formula;
  /// Coarse types whose multiplicity is higher on the formula side.
  std::vector<CoarseType> extra_in_formula;

  bool ok() const { return multiset_equal; }
};

CrossValidationReport cross_validate(const PolytopeModel& p,
                                     const EnumerationOptions& options = {});

}  // namespace tropmat
