#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tropmat/rational.hpp"

namespace tropmat {

// Min-plus kernel. Tropical addition is min, tropical multiplication is +.
//
// Storage inside TropicalPoint is an ordinary 0-based vector, but every
// coordinate *label* that crosses the public interface (sector sets, corner
// indices, type entries) is 1-based: coordinates are [d+1] = {1..d+1} and
// generator indices are [n] = {1..n}.

/// A class in the tropical torus R^{d+1} / R(1,...,1), held by one
/// representative. Equality compares classes, not representatives.
class TropicalPoint {
 public:
  TropicalPoint() = default;
  explicit TropicalPoint(std::vector<Rational> coords);
  TropicalPoint(std::initializer_list<Rational> coords);
  TropicalPoint(std::initializer_list<int> coords);

  static TropicalPoint origin(std::size_t ambient);
  /// The canonical unit vector e_i, 1-based.
  static TropicalPoint unit(std::size_t ambient, int coordinate);

  /// d+1, the length of the representative.
  std::size_t ambient() const { return coords_.size(); }
  /// d, the dimension of the torus the point lives in.
  std::size_t dim() const { return coords_.empty() ? 0 : coords_.size() - 1; }

  std::span<const Rational> coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  /// Representative with all coordinates >= 0 and at least one 0.
  TropicalPoint canonical() const;
  bool is_canonical() const;

  /// Ordinary-arithmetic helpers used for sampling and perturbation.
  TropicalPoint translated(std::span<const Rational> offset) const;
  TropicalPoint shifted(const Rational& constant) const;

  friend bool operator==(const TropicalPoint& a, const TropicalPoint& b);
  /// Orders classes by their canonical coordinates.
  friend std::strong_ordering operator<=>(const TropicalPoint& a,
                                          const TropicalPoint& b);

 private:
  std::vector<Rational> coords_;
};

TropicalPoint canonical(const TropicalPoint& p);

/// c_0 chart: (x_2 - x_1, ..., x_{d+1} - x_1). A bijection T^d -> Q^d.
std::vector<Rational> c0_chart(const TropicalPoint& p);
/// Inverse of c0_chart: the class of (0, v_1, ..., v_d).
TropicalPoint from_c0_chart(std::span<const Rational> chart);

/// Breakpoints of the min-plus segment between x and y, endpoints included,
/// ordered from x to y. Consecutive breakpoints are joined by ordinary
/// segments. All returned points are canonical.
std::vector<TropicalPoint> trop_segment(const TropicalPoint& x,
                                        const TropicalPoint& y);

/// The tropical combination min_i(scalars_i + points_i).
TropicalPoint tropical_combination(std::span<const TropicalPoint> points,
                                   std::span<const Rational> scalars);

/// Sorted 1-based generator indices.
using IndexSet = std::vector<int>;

/// Per-coordinate coarse counts t_k = |T_k|.
struct CoarseType {
  std::vector<int> counts;

  std::size_t size() const { return counts.size(); }
  int operator[](std::size_t i) const { return counts[i]; }
  int total() const;
  /// Number of nonzero entries.
  int support_size() const;

  friend auto operator<=>(const CoarseType&, const CoarseType&) = default;
  friend bool operator==(const CoarseType&, const CoarseType&) = default;
};

/// type_V(x) = (T_1, ..., T_{d+1}); T_k holds the generators whose
/// difference v_i - x attains its minimum at coordinate k.
class FineType {
 public:
  FineType() = default;
  explicit FineType(std::vector<IndexSet> entries);

  std::size_t size() const { return entries_.size(); }
  /// 1-based coordinate.
  const IndexSet& entry(int coordinate) const { return entries_[coordinate - 1]; }
  const std::vector<IndexSet>& entries() const { return entries_; }

  CoarseType coarse() const;
  /// No entry is empty.
  bool bounded() const;
  /// Union of all entries.
  IndexSet support() const;
  /// Entrywise superset.
  bool contains(const FineType& other) const;
  /// Entrywise intersection.
  FineType meet(const FineType& other) const;

  friend auto operator<=>(const FineType&, const FineType&) = default;
  friend bool operator==(const FineType&, const FineType&) = default;

 private:
  std::vector<IndexSet> entries_;
};

/// "({1,2,3,4,5},{1,2,6,7},...)"
std::string to_string(const FineType& t);
/// "(5,4,5,5,5)"
std::string to_string(const CoarseType& t);
/// "(0,1,1/2)"
std::string to_string(const TropicalPoint& p);

FineType fine_type(const TropicalPoint& x, std::span<const TropicalPoint> generators);
CoarseType coarse_type(const TropicalPoint& x,
                       std::span<const TropicalPoint> generators);

/// True iff x lies in a bounded cell of the complex, i.e. in tconv(V).
bool in_tconv(const TropicalPoint& x, std::span<const TropicalPoint> generators);

/// k-th corner c_k(V) = min_j (v_j - v_{j,k}), canonical. 1-based k.
TropicalPoint corner(std::span<const TropicalPoint> generators, int coordinate);

/// Closed tropical halfspace apex + closure(S_I): the points x for which
/// x - apex attains its minimum at some coordinate of I.
class TropicalHalfspace {
 public:
  /// `sectors` are 1-based coordinates; requires 1 <= |I| <= d.
  TropicalHalfspace(TropicalPoint apex, std::vector<int> sectors);

  const TropicalPoint& apex() const { return apex_; }
  /// Sorted, 1-based.
  const std::vector<int>& sectors() const { return sectors_; }
  /// Coordinates not in the sector set, sorted.
  std::vector<int> complement() const;
  std::size_t ambient() const { return apex_.ambient(); }

  friend bool operator==(const TropicalHalfspace&, const TropicalHalfspace&) = default;

 private:
  TropicalPoint apex_;
  std::vector<int> sectors_;
};

bool halfspace_contains(const TropicalHalfspace& h, const TropicalPoint& x);

}  // namespace tropmat
