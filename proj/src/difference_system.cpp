#include "tropmat/difference_system.hpp"

#include <cstdlib>

#include "tropmat/error.hpp"

namespace tropmat {

DifferenceSystem::DifferenceSystem(std::size_t variables)
    : n_(variables), edges_(variables * variables) {}

void DifferenceSystem::add(std::size_t from, std::size_t to, const Rational& bound,
                           bool strict) {
  if (from >= n_ || to >= n_) {
    throw Error(Errc::OutOfRange, "difference constraint variable out of range");
  }
  LexWeight w{bound, strict ? -1 : 0};
  auto& slot = edges_[from * n_ + to];
  if (!slot || w < *slot) slot = std::move(w);
}

void DifferenceSystem::add_equality(std::size_t a, std::size_t b,
                                    const Rational& value) {
  add(b, a, value, false);
  add(a, b, -value, false);
}

std::optional<std::vector<LexWeight>> DifferenceSystem::potentials() const {
  // Virtual source with zero-weight edges to every variable: start all
  // potentials at zero and relax.
  std::vector<LexWeight> dist(n_, LexWeight{Rational(0), 0});
  for (std::size_t round = 0; round <= n_; ++round) {
    bool changed = false;
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = 0; v < n_; ++v) {
        const auto& e = edges_[u * n_ + v];
        if (!e) continue;
        LexWeight candidate = dist[u] + *e;
        if (candidate < dist[v]) {
          dist[v] = std::move(candidate);
          changed = true;
        }
      }
    }
    if (!changed) return dist;
  }
  return std::nullopt;
}

bool DifferenceSystem::feasible() const { return potentials().has_value(); }

std::optional<std::vector<Rational>> DifferenceSystem::solve() const {
  auto dist = potentials();
  if (!dist) return std::nullopt;

  // x_v = value_v + eps_v * epsilon. Pick epsilon small enough that every
  // constraint whose rational part has slack keeps it.
  Rational epsilon(1);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      const auto& e = edges_[u * n_ + v];
      if (!e) continue;
      const Rational slack = (*dist)[u].value + e->value - (*dist)[v].value;
      if (slack > 0) {
        const int spread = std::abs((*dist)[v].eps - (*dist)[u].eps) + 1;
        const Rational bound = slack / spread;
        if (bound < epsilon) epsilon = bound;
      }
    }
  }
  epsilon /= 2;

  std::vector<Rational> x(n_);
  for (std::size_t v = 0; v < n_; ++v) {
    x[v] = (*dist)[v].value + (*dist)[v].eps * epsilon;
  }
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      const auto& e = edges_[u * n_ + v];
      if (!e) continue;
      const Rational lhs = x[v] - x[u];
      const bool ok = e->eps < 0 ? lhs < e->value : lhs <= e->value;
      if (!ok) {
        throw Error(Errc::InternalAssertion,
                    "difference-system witness violates a constraint");
      }
    }
  }
  return x;
}

std::optional<std::vector<std::vector<std::optional<LexWeight>>>>
DifferenceSystem::closure() const {
  std::vector<std::vector<std::optional<LexWeight>>> d(
      n_, std::vector<std::optional<LexWeight>>(n_));
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) d[u][v] = edges_[u * n_ + v];
    const LexWeight zero{Rational(0), 0};
    if (!d[u][u] || zero < *d[u][u]) d[u][u] = zero;
  }
  for (std::size_t k = 0; k < n_; ++k) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!d[i][k]) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!d[k][j]) continue;
        LexWeight through = *d[i][k] + *d[k][j];
        if (!d[i][j] || through < *d[i][j]) d[i][j] = std::move(through);
      }
    }
  }
  const LexWeight zero{Rational(0), 0};
  for (std::size_t u = 0; u < n_; ++u) {
    if (*d[u][u] < zero) return std::nullopt;
  }
  return d;
}

}  // namespace tropmat
