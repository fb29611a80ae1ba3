#include "tropmat/cell_complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "tropmat/difference_system.hpp"
#include "tropmat/error.hpp"

namespace tropmat {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

void require_uniform_ambient(std::span<const TropicalPoint> generators) {
  if (generators.empty()) throw Error(Errc::EmptyInput, "generator list is empty");
  for (const auto& v : generators) {
    if (v.ambient() != generators.front().ambient()) {
      throw Error(Errc::DimensionMismatch, "generators differ in dimension");
    }
  }
}

// v_i attains its minimum at k: x_j - x_k <= v_ij - v_ik for every j.
void require_argmin(DifferenceSystem& s, const TropicalPoint& v, std::size_t k,
                    bool strict) {
  for (std::size_t j = 0; j < v.ambient(); ++j) {
    if (j != k) s.add(k, j, v[j] - v[k], strict);
  }
}

DifferenceSystem closed_system(const FineType& t, std::span<const TropicalPoint> generators) {
  DifferenceSystem s(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    for (int i : t.entries()[k]) require_argmin(s, generators[i - 1], k, false);
  }
  return s;
}

using Distances = std::vector<std::vector<std::optional<Rational>>>;

// Shortest-path closure of a closed system: [a][b] bounds x_b - x_a.
std::optional<Distances> closed_distances(const DifferenceSystem& s) {
  const auto lex = s.closure();
  if (!lex) return std::nullopt;
  Distances d(lex->size(), std::vector<std::optional<Rational>>(lex->size()));
  for (std::size_t a = 0; a < d.size(); ++a) {
    for (std::size_t b = 0; b < d.size(); ++b) {
      if ((*lex)[a][b]) d[a][b] = (*lex)[a][b]->value;
    }
  }
  return d;
}

std::optional<Rational> sum(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

bool shorter(const std::optional<Rational>& candidate, const std::optional<Rational>& current) {
  return candidate && (!current || *candidate < *current);
}

// gap[i][k][j] = v_ij - v_ik, the bound on x_j - x_k when v_i attains its
// minimum at k.
using Gaps = std::vector<std::vector<std::vector<Rational>>>;

Gaps generator_gaps(std::span<const TropicalPoint> generators) {
  const std::size_t m = generators.front().ambient();
  Gaps g(generators.size(), std::vector<std::vector<Rational>>(m, std::vector<Rational>(m)));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < m; ++j) g[i][k][j] = generators[i][j] - generators[i][k];
    }
  }
  return g;
}

// Closure after adding x_l - x_j <= gap_l for every l. All new edges leave j,
// so a shortest path uses at most one of them.
std::optional<Distances> tighten(const Distances& d, const std::vector<Rational>& gap,
                                 std::size_t j) {
  const std::size_t m = d.size();
  std::vector<std::optional<Rational>> via(m);
  for (std::size_t l = 0; l < m; ++l) {
    const Rational& w = gap[l];
    for (std::size_t b = 0; b < m; ++b) {
      auto c = sum(w, d[l][b]);
      if (shorter(c, via[b])) via[b] = std::move(c);
    }
  }
  if (via[j] && *via[j] < 0) return std::nullopt;
  Distances out = d;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto c = sum(d[a][j], via[b]);
      if (shorter(c, out[a][b])) out[a][b] = std::move(c);
    }
  }
  return out;
}

// Exact type of the relative interior of a nonempty closed cell: generator i
// sits in entry k iff the argmin inequalities for (i, k) hold on all of it.
// Pairs already in `known` hold on any subset of its closed cell.
FineType interior_type(const Distances& dist, const Gaps& gaps, const FineType& known) {
  const std::size_t m = dist.size();
  std::vector<IndexSet> entries(m);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const int label = static_cast<int>(i) + 1;
    for (std::size_t k = 0; k < m; ++k) {
      const auto& e = known.entries()[k];
      bool always = std::binary_search(e.begin(), e.end(), label);
      if (!always) {
        always = true;
        for (std::size_t j = 0; j < m && always; ++j) {
          always = dist[k][j] && *dist[k][j] <= gaps[i][k][j];
        }
      }
      if (always) entries[k].push_back(label);
    }
  }
  return FineType(std::move(entries));
}

TropicalPoint relative_interior_point(const FineType& t,
                                      std::span<const TropicalPoint> generators) {
  const std::size_t m = t.size();
  DifferenceSystem s(m);
  std::vector<int> home(generators.size() + 1, -1);
  std::vector<std::vector<bool>> member(generators.size() + 1, std::vector<bool>(m, false));
  for (std::size_t k = 0; k < m; ++k) {
    for (int i : t.entries()[k]) {
      member[i][k] = true;
      if (home[i] < 0) home[i] = static_cast<int>(k);
    }
  }
  for (std::size_t i = 1; i <= generators.size(); ++i) {
    if (home[i] < 0) throw Error(Errc::InternalAssertion, "generator missing from type");
    const auto& v = generators[i - 1];
    const auto k = static_cast<std::size_t>(home[i]);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      if (member[i][j]) {
        s.add_equality(j, k, v[j] - v[k]);
      } else {
        s.add(k, j, v[j] - v[k], true);
      }
    }
  }
  auto x = s.solve();
  if (!x) throw Error(Errc::InternalAssertion, "cell type is not realizable");
  TropicalPoint w = TropicalPoint(std::move(*x)).canonical();
  if (fine_type(w, generators) != t) {
    throw Error(Errc::InternalAssertion, "witness does not realize its cell type");
  }
  return w;
}

CellRecord make_record(FineType t, std::span<const TropicalPoint> generators) {
  CellRecord r;
  r.witness = relative_interior_point(t, generators);
  r.dimension = cell_dimension(t);
  r.bounded = t.bounded();
  r.type = std::move(t);
  return r;
}

struct SearchBudget {
  std::uint64_t cap;
  std::uint64_t used = 0;

  void spend() {
    if (++used > cap) {
      throw Error(Errc::CapExceeded, "argmin search exceeded the enumeration cap of " +
                                         std::to_string(cap) + " candidates");
    }
  }
};

// Depth-first over the argmin coordinate of each generator; a prefix whose
// strict system is already infeasible has no realizable completion.
void extend_argmin(std::span<const TropicalPoint> generators, std::size_t next,
                   const DifferenceSystem& s, std::vector<IndexSet>& entries,
                   SearchBudget& budget, std::vector<FineType>& out) {
  if (next == generators.size()) {
    out.emplace_back(entries);
    return;
  }
  const auto& v = generators[next];
  for (std::size_t k = 0; k < v.ambient(); ++k) {
    budget.spend();
    DifferenceSystem child = s;
    require_argmin(child, v, k, true);
    if (!child.feasible()) continue;
    entries[k].push_back(static_cast<int>(next) + 1);
    extend_argmin(generators, next + 1, child, entries, budget, out);
    entries[k].pop_back();
  }
}

void extend_prefixes(const GroundMatroid& m, std::size_t length, std::vector<int>& prefix,
                     ElementSet used, std::vector<std::vector<int>>& out) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  for (int e = 1; e <= m.ground_size(); ++e) {
    if (used.contains(e)) continue;
    ElementSet next = used;
    next.insert(e);
    if (!is_valid_deletion(m, next)) continue;
    prefix.push_back(e);
    extend_prefixes(m, length, prefix, next, out);
    prefix.pop_back();
  }
}

std::map<CoarseType, long> tally(const std::vector<CoarseType>& types) {
  std::map<CoarseType, long> counts;
  for (const auto& t : types) ++counts[t];
  return counts;
}

}  // namespace

int cell_dimension(const FineType& t) {
  const std::size_t m = t.size();
  if (m == 0) return -1;
  UnionFind uf(m);
  std::size_t components = m;
  for (std::size_t a = 0; a < m; ++a) {
    const auto& ea = t.entries()[a];
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto& eb = t.entries()[b];
      std::vector<int> common;
      std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                            std::back_inserter(common));
      if (!common.empty() && uf.unite(a, b)) --components;
    }
  }
  return static_cast<int>(components) - 1;
}

long CellComplexModel::euler_characteristic() const {
  long sum = 0;
  for (std::size_t i = 0; i < f_vector.size(); ++i) {
    const long f = static_cast<long>(f_vector[i]);
    sum += (i % 2 == 0) ? f : -f;
  }
  return sum;
}

std::vector<CellRecord> enumerate_maximal_cells(std::span<const TropicalPoint> generators,
                                                const EnumerationOptions& options) {
  require_uniform_ambient(generators);
  const std::size_t m = generators.front().ambient();
  std::vector<FineType> types;
  std::vector<IndexSet> entries(m);
  SearchBudget budget{options.cap};
  extend_argmin(generators, 0, DifferenceSystem(m), entries, budget, types);
  std::sort(types.begin(), types.end());

  std::vector<CellRecord> cells;
  cells.reserve(types.size());
  for (auto& t : types) cells.push_back(make_record(std::move(t), generators));
  return cells;
}

std::vector<CellRecord> enumerate_maximal_cells(const PolytopeModel& p,
                                                const EnumerationOptions& options) {
  return enumerate_maximal_cells(std::span<const TropicalPoint>(p.generators), options);
}

CellComplexModel enumerate_all_cells(std::span<const TropicalPoint> generators,
                                     const EnumerationOptions& options) {
  auto maximal = enumerate_maximal_cells(generators, options);
  const std::size_t m = generators.front().ambient();
  const Gaps gaps = generator_gaps(generators);

  std::map<FineType, CellRecord> found;
  std::deque<FineType> queue;
  for (auto& c : maximal) {
    queue.push_back(c.type);
    found.emplace(c.type, std::move(c));
  }
  while (!queue.empty()) {
    const FineType t = std::move(queue.front());
    queue.pop_front();
    const auto base = closed_distances(closed_system(t, generators));
    if (!base) throw Error(Errc::InternalAssertion, "enumerated cell is empty");
    for (std::size_t j = 0; j < m; ++j) {
      const auto& entry = t.entries()[j];
      for (std::size_t i = 1; i <= generators.size(); ++i) {
        if (std::binary_search(entry.begin(), entry.end(), static_cast<int>(i))) continue;
        const auto dist = tighten(*base, gaps[i - 1][j], j);
        if (!dist) continue;
        FineType sub = interior_type(*dist, gaps, t);
        if (found.count(sub)) continue;
        queue.push_back(sub);
        auto record = make_record(sub, generators);
        found.emplace(std::move(sub), std::move(record));
      }
    }
  }

  CellComplexModel model;
  model.f_vector.assign(m, 0);
  model.cells.reserve(found.size());
  for (auto& [type, record] : found) {
    ++model.f_vector.at(static_cast<std::size_t>(record.dimension));
    model.cells.push_back(std::move(record));
  }
  std::stable_sort(model.cells.begin(), model.cells.end(),
                   [](const CellRecord& a, const CellRecord& b) {
                     return a.dimension < b.dimension;
                   });
  return model;
}

CellComplexModel enumerate_all_cells(const PolytopeModel& p,
                                     const EnumerationOptions& options) {
  return enumerate_all_cells(std::span<const TropicalPoint>(p.generators), options);
}

int face_affine_dimension(const FineType& t, std::span<const TropicalPoint> generators) {
  require_uniform_ambient(generators);
  if (t.size() != generators.front().ambient()) {
    throw Error(Errc::DimensionMismatch, "type and generators differ in dimension");
  }
  const auto dist = closed_system(t, generators).closure();
  if (!dist) return -1;
  const std::size_t m = t.size();
  UnionFind uf(m);
  std::size_t classes = m;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto& ab = (*dist)[a][b];
      const auto& ba = (*dist)[b][a];
      if (ab && ba && ab->value + ba->value == 0 && uf.unite(a, b)) --classes;
    }
  }
  return static_cast<int>(classes) - 1;
}

std::vector<SequenceCoarseType> theorem_coarse_types(const GroundMatroid& m) {
  const int ground = m.ground_size();
  const int longest = ground - m.rank();
  std::vector<SequenceCoarseType> out;
  for (int dprime = 0; dprime <= longest; ++dprime) {
    std::vector<std::vector<int>> prefixes;
    std::vector<int> prefix;
    extend_prefixes(m, static_cast<std::size_t>(dprime), prefix, ElementSet{}, prefixes);
    for (const auto& pre : prefixes) {
      const ElementSet used(pre);
      for (int last = 1; last <= ground; ++last) {
        if (used.contains(last)) continue;
        std::vector<int> seq = pre;
        seq.push_back(last);
        ElementSet all = used;
        all.insert(last);

        CoarseType t{std::vector<int>(ground, 0)};
        ElementSet earlier;
        for (std::size_t l = 0; l < seq.size(); ++l) {
          const int i = seq[l];
          std::size_t value = count_b(m, ElementSet{i}, earlier);
          if (l == 0) value += count_b(m, ElementSet{}, all);
          t.counts[i - 1] = static_cast<int>(value);
          earlier.insert(i);
        }
        out.push_back({std::move(seq), std::move(t)});
      }
    }
  }
  return out;
}

CoarseType hypersimplex_alpha_tuple(int k, int d, int alpha) {
  if (k < 1 || d < 1 || k > d || alpha < 0 || alpha > d + 2 - k) {
    throw Error(Errc::OutOfRange, "hypersimplex tuple parameters out of range");
  }
  const auto c = [](int n, int r) -> int {
    if (n < 0 || r < 0) return 0;
    return static_cast<int>(binomial(static_cast<std::uint64_t>(n),
                                     static_cast<std::uint64_t>(r)));
  };
  CoarseType t{std::vector<int>(d + 1, 0)};
  t.counts[0] = c(d + 1 - alpha, k) + c(d, k - 1);
  for (int l = 2; l <= alpha; ++l) t.counts[l - 1] = c(d - l + 1, k - 1);
  return t;
}

std::vector<CoarseType> hypersimplex_coarse_types(int k, int d) {
  if (k < 2 || k > d) {
    throw Error(Errc::OutOfRange, "hypersimplex coarse types need 2 <= k <= d");
  }
  std::vector<CoarseType> out;
  for (int alpha = 1; alpha <= d + 2 - k; ++alpha) {
    out.push_back(orbit_representative(hypersimplex_alpha_tuple(k, d, alpha)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CoarseType orbit_representative(const CoarseType& t) {
  CoarseType r = t;
  std::sort(r.counts.begin(), r.counts.end(), std::greater<>());
  return r;
}

CrossValidationReport cross_validate(const PolytopeModel& p,
                                     const EnumerationOptions& options) {
  std::vector<CoarseType> brute;
  for (const auto& c : enumerate_maximal_cells(p, options)) brute.push_back(c.type.coarse());
  std::vector<CoarseType> formula;
  for (const auto& s : theorem_coarse_types(p.matroid)) formula.push_back(s.type);

  CrossValidationReport r;
  r.enumerated = brute.size();
  r.formula = formula.size();
  const auto lhs = tally(brute);
  const auto rhs = tally(formula);
  r.multiset_equal = lhs == rhs;
  r.set_equal = std::equal(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                           [](const auto& a, const auto& b) { return a.first == b.first; });
  for (const auto& [t, n] : lhs) {
    auto it = rhs.find(t);
    if (it == rhs.end() || it->second < n) r.missing_from_formula.push_back(t);
  }
  for (const auto& [t, n] : rhs) {
    auto it = lhs.find(t);
    if (it == lhs.end() || it->second < n) r.extra_in_formula.push_back(t);
  }
  return r;
}

}  // namespace tropmat
