#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "tropmat/cell_complex.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/minplus.hpp"

namespace tropmat {

/// x^a with one exponent per coordinate; position c holds the exponent of the
/// variable for coordinate c+1.
struct Monomial {
  std::vector<int> exponents;

  std::size_t variables() const { return exponents.size(); }
  int degree() const;
  /// Componentwise <=. Throws on a variable-count mismatch.
  bool divides(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialIdealModel {
  std::size_t variables = 0;
  /// Sorted, without duplicates.
  std::vector<Monomial> generators;
};

/// Sorts and deduplicates; every monomial must have `variables` entries.
MonomialIdealModel make_ideal(std::size_t variables, std::vector<Monomial> generators);

/// Monomials x^t for the closed-form maximal-cell coarse types.
MonomialIdealModel ideal_generators(const GroundMatroid& m);

/// No generator divides a different generator.
bool is_minimal_generating(const MonomialIdealModel& ideal);

/// Some generator divides x^t.
bool ideal_membership(const CoarseType& t, const MonomialIdealModel& ideal);

/// (f_d, ..., f_0): the free ranks of the cellular resolution, starting with
/// the module mapping onto the ideal.
std::vector<std::size_t> resolution_ranks(const CellComplexModel& complex);

enum class VariableBase { One, Zero };

/// "x_1^2*x_3^1": zero exponents omitted, "^1" kept, "1" for the unit.
std::string format_monomial(const Monomial& m, VariableBase base = VariableBase::One);
Monomial parse_monomial(std::string_view text, std::size_t variables,
                        VariableBase base = VariableBase::One);

/// One monomial per line.
std::string format_ideal_text(const MonomialIdealModel& ideal,
                              VariableBase base = VariableBase::One);
/// Blank lines and lines starting with '#' are skipped.
MonomialIdealModel parse_ideal_text(std::string_view text, std::size_t variables,
                                    VariableBase base = VariableBase::One);

}  // namespace tropmat
