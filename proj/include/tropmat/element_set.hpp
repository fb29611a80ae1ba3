#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tropmat {

/// A subset of a small 1-based label range {1,...,63}, stored as a bitmask.
/// Used for matroid ground-set elements and for torus coordinates.
class ElementSet {
 public:
  static constexpr int kMaxElement = 63;

  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<int> elements);
  explicit ElementSet(std::span<const int> elements);

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  /// {1,...,size}
  static ElementSet full(int size);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  bool contains(int element) const;
  void insert(int element);
  void erase(int element);

  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool disjoint(ElementSet other) const {
    return (bits_ & other.bits_) == 0;
  }
  /// Sorted ascending.
  std::vector<int> elements() const;
  /// Complement inside {1,...,ground_size}.
  ElementSet complement(int ground_size) const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted element lists ({1,2,4} < {1,3} < {2}).
bool lex_less(ElementSet a, ElementSet b);

/// "{1,2,4}"
std::string to_string(ElementSet s);

struct ElementSetHash {
  std::size_t operator()(ElementSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

}  // namespace tropmat
