#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "tropmat/rational.hpp"

namespace tropmat {

/// A bound `value + eps * epsilon` for an infinitesimal epsilon > 0. Strict
/// constraints carry eps = -1, so lexicographic order on (value, eps) decides
/// feasibility of mixed strict/non-strict systems exactly.
struct LexWeight {
  Rational value;
  int eps = 0;

  friend LexWeight operator+(const LexWeight& a, const LexWeight& b) {
    return {a.value + b.value, a.eps + b.eps};
  }
  friend bool operator==(const LexWeight& a, const LexWeight& b) {
    return a.value == b.value && a.eps == b.eps;
  }
  friend std::strong_ordering operator<=>(const LexWeight& a, const LexWeight& b) {
    const int c = cmp(a.value, b.value);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.eps <=> b.eps;
  }
};

/// System of difference constraints x_to - x_from <= bound (or < bound) over a
/// small number of variables. Parallel constraints keep only the tightest.
class DifferenceSystem {
 public:
  explicit DifferenceSystem(std::size_t variables);

  std::size_t variables() const { return n_; }

  /// x_to - x_from <= bound, or < bound when `strict`. 0-based variables.
  void add(std::size_t from, std::size_t to, const Rational& bound, bool strict);
  /// x_a - x_b = value.
  void add_equality(std::size_t a, std::size_t b, const Rational& value);

  /// Tightest bound on x_to - x_from stated directly, if any.
  const std::optional<LexWeight>& edge(std::size_t from, std::size_t to) const {
    return edges_[from * n_ + to];
  }

  /// Bellman-Ford from a virtual source; false iff a lexicographically
  /// negative cycle exists.
  bool feasible() const;

  /// An exact rational solution satisfying every constraint (strict ones
  /// strictly), or nullopt when infeasible.
  std::optional<std::vector<Rational>> solve() const;

  /// All-pairs closure: entry [a][b] is the supremum of x_b - x_a over the
  /// solution set (nullopt = unbounded). Strictness is tracked in eps.
  /// Returns nullopt when infeasible.
  std::optional<std::vector<std::vector<std::optional<LexWeight>>>> closure() const;

 private:
  std::optional<std::vector<LexWeight>> potentials() const;

  std::size_t n_;
  std::vector<std::optional<LexWeight>> edges_;
};

}  // namespace tropmat
