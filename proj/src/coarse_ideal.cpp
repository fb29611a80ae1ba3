#include "tropmat/coarse_ideal.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "tropmat/error.hpp"

namespace tropmat {

namespace {

std::string_view trim(std::string_view s) {
  const auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

int parse_natural(std::string_view digits, std::string_view context) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || value < 0) {
    throw Error(Errc::MalformedInput, "bad monomial term '" + std::string(context) + "'");
  }
  return value;
}

}  // namespace

int Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool Monomial::divides(const Monomial& other) const {
  if (variables() != other.variables()) {
    throw Error(Errc::DimensionMismatch, "monomials over different variable counts");
  }
  for (std::size_t c = 0; c < exponents.size(); ++c) {
    if (exponents[c] > other.exponents[c]) return false;
  }
  return true;
}

MonomialIdealModel make_ideal(std::size_t variables, std::vector<Monomial> generators) {
  for (const auto& g : generators) {
    if (g.variables() != variables) {
      throw Error(Errc::DimensionMismatch, "generator has the wrong number of variables");
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return {variables, std::move(generators)};
}

MonomialIdealModel ideal_generators(const GroundMatroid& m) {
  std::vector<Monomial> gens;
  for (auto& s : theorem_coarse_types(m)) gens.push_back({std::move(s.type.counts)});
  return make_ideal(static_cast<std::size_t>(m.ground_size()), std::move(gens));
}

bool is_minimal_generating(const MonomialIdealModel& ideal) {
  const auto& g = ideal.generators;
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (a != b && g[a] != g[b] && g[a].divides(g[b])) return false;
    }
  }
  return true;
}

bool ideal_membership(const CoarseType& t, const MonomialIdealModel& ideal) {
  if (t.size() != ideal.variables) {
    throw Error(Errc::DimensionMismatch, "coarse type and ideal differ in variable count");
  }
  const Monomial x{t.counts};
  return std::any_of(ideal.generators.begin(), ideal.generators.end(),
                     [&](const Monomial& g) { return g.divides(x); });
}

std::vector<std::size_t> resolution_ranks(const CellComplexModel& complex) {
  return {complex.f_vector.rbegin(), complex.f_vector.rend()};
}

std::string format_monomial(const Monomial& m, VariableBase base) {
  const int offset = base == VariableBase::One ? 1 : 0;
  std::string out;
  for (std::size_t c = 0; c < m.exponents.size(); ++c) {
    if (m.exponents[c] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x_" + std::to_string(static_cast<int>(c) + offset) + "^" +
           std::to_string(m.exponents[c]);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, std::size_t variables, VariableBase base) {
  const int offset = base == VariableBase::One ? 1 : 0;
  Monomial m{std::vector<int>(variables, 0)};
  text = trim(text);
  if (text == "1") return m;
  if (text.empty()) throw Error(Errc::MalformedInput, "empty monomial");
  while (true) {
    const auto star = text.find('*');
    const std::string_view term = trim(text.substr(0, star));
    if (term.size() < 3 || term.substr(0, 2) != "x_") {
      throw Error(Errc::MalformedInput, "bad monomial term '" + std::string(term) + "'");
    }
    const auto caret = term.find('^');
    const std::string_view index = term.substr(2, caret == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : caret - 2);
    const int exponent =
        caret == std::string_view::npos ? 1 : parse_natural(term.substr(caret + 1), term);
    const int c = parse_natural(index, term) - offset;
    if (c < 0 || static_cast<std::size_t>(c) >= variables) {
      throw Error(Errc::OutOfRange, "variable out of range in '" + std::string(term) + "'");
    }
    m.exponents[c] += exponent;
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  return m;
}

std::string format_ideal_text(const MonomialIdealModel& ideal, VariableBase base) {
  std::string out;
  for (const auto& g : ideal.generators) out += format_monomial(g, base) + "\n";
  return out;
}

MonomialIdealModel parse_ideal_text(std::string_view text, std::size_t variables,
                                    VariableBase base) {
  std::vector<Monomial> gens;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    if (!line.empty() && line.front() != '#') gens.push_back(parse_monomial(line, variables, base));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return make_ideal(variables, std::move(gens));
}

}  // namespace tropmat
