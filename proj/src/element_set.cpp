#include "tropmat/element_set.hpp"

#include <algorithm>

#include "tropmat/error.hpp"

namespace tropmat {

namespace {

void check_label(int element) {
  if (element < 1 || element > ElementSet::kMaxElement) {
    throw Error(Errc::OutOfRange,
                "element label " + std::to_string(element) + " outside 1..63");
  }
}

}  // namespace

ElementSet::ElementSet(std::initializer_list<int> elements) {
  for (int e : elements) insert(e);
}

ElementSet::ElementSet(std::span<const int> elements) {
  for (int e : elements) insert(e);
}

ElementSet ElementSet::full(int size) {
  if (size < 0 || size > kMaxElement) {
    throw Error(Errc::OutOfRange, "set size outside 0..63");
  }
  return from_bits(size == 0 ? 0 : (~std::uint64_t{0} >> (64 - size)) << 1);
}

bool ElementSet::contains(int element) const {
  if (element < 1 || element > kMaxElement) return false;
  return (bits_ >> element) & 1U;
}

void ElementSet::insert(int element) {
  check_label(element);
  bits_ |= std::uint64_t{1} << element;
}

void ElementSet::erase(int element) {
  check_label(element);
  bits_ &= ~(std::uint64_t{1} << element);
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

ElementSet ElementSet::complement(int ground_size) const {
  return full(ground_size) - *this;
}

bool lex_less(ElementSet a, ElementSet b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::string to_string(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace tropmat
