#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropmat/element_set.hpp"

namespace tropmat {

/// Simple, connected, bridge-free graph. Edge i (1-based position in `edges`)
/// is ground-set element i of its cycle matroid.
struct LabeledGraph {
  std::vector<std::string> vertices;
  /// Pairs of 0-based indices into `vertices`.
  std::vector<std::pair<int, int>> edges;

  std::size_t edge_count() const { return edges.size(); }
};

/// Checks simplicity, connectivity and bridge-freeness; throws Error with a
/// distinct code for each failure.
void validate_graph(const LabeledGraph& g);

/// Parses {"vertices":[...],"edges":[[u,v],...]} and validates it.
LabeledGraph parse_graph(std::string_view json_text);

/// A matroid given by its bases, indexed 1..n in lexicographic order of the
/// sorted element lists.
class GroundMatroid {
 public:
  /// Validates and sorts. Throws Error on unequal cardinalities, elements out
  /// of range, duplicate bases, a violated exchange property, or an element
  /// contained in every basis / in no basis.
  static GroundMatroid from_bases(int ground_size, std::vector<ElementSet> bases);

  /// All k-subsets of [ground_size].
  static GroundMatroid uniform(int rank, int ground_size);

  int ground_size() const { return ground_size_; }
  int rank() const { return rank_; }
  std::size_t basis_count() const { return bases_.size(); }
  const std::vector<ElementSet>& bases() const { return bases_; }
  /// 1-based basis index.
  ElementSet basis(int index) const { return bases_.at(index - 1); }
  /// 1-based index of `b`, if it is a basis.
  std::optional<int> index_of(ElementSet b) const;
  bool is_basis(ElementSet b) const { return index_of(b).has_value(); }

  friend bool operator==(const GroundMatroid&, const GroundMatroid&) = default;

 private:
  GroundMatroid(int ground_size, int rank, std::vector<ElementSet> bases)
      : ground_size_(ground_size), rank_(rank), bases_(std::move(bases)) {}

  int ground_size_ = 0;
  int rank_ = 0;
  std::vector<ElementSet> bases_;
};

enum class SpanningTreeMethod {
  Auto,        // exhaustive when C(edges, rank) <= 10^6, else recursive
  Exhaustive,  // every k-subset tested for acyclicity
  Recursive,   // contraction/deletion branching
};

/// Spanning trees of `g` as edge-label sets, lexicographically ordered.
std::vector<ElementSet> spanning_trees(const LabeledGraph& g,
                                       SpanningTreeMethod method = SpanningTreeMethod::Auto);

/// Cycle matroid of `g`; rank = |vertices| - 1.
GroundMatroid enumerate_bases(const LabeledGraph& g,
                              SpanningTreeMethod method = SpanningTreeMethod::Auto);

/// Alias of GroundMatroid::from_bases over plain integer lists.
GroundMatroid matroid_from_bases(int ground_size,
                                 const std::vector<std::vector<int>>& bases);

/// k-subsets of the ground set that are not bases, lexicographic.
std::vector<ElementSet> non_bases(const GroundMatroid& m);

/// b_{I,J}: bases containing all of I and none of J. Throws on overlap.
std::size_t count_b(const GroundMatroid& m, ElementSet in, ElementSet out);

/// Basis-exchange axiom over all ordered pairs of bases.
bool check_exchange(const std::vector<ElementSet>& bases);
bool check_exchange(const GroundMatroid& m);

/// Binomial coefficient, saturating at uint64 max.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All k-subsets of [ground_size] in lexicographic order.
std::vector<ElementSet> k_subsets(int ground_size, int k);

}  // namespace tropmat
