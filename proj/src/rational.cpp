#include "tropmat/rational.hpp"

#include <cctype>

#include "tropmat/error.hpp"

namespace tropmat {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-' || den.front() == '+') {
    throw Error(Errc::MalformedInput,
                "not an exact rational: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  const mpz_class d{std::string(den)};
  if (d == 0) {
    throw Error(Errc::MalformedInput,
                "zero denominator: '" + std::string(text) + "'");
  }
  Rational value{mpz_class{n}, d};
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  return reduced.get_str();
}

}  // namespace tropmat
