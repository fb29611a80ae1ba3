#include "tropmat/polytope.hpp"

#include <algorithm>
#include <set>

#include "tropmat/cell_complex.hpp"
#include "tropmat/error.hpp"

namespace tropmat {

namespace {

IndexSet bases_where(const GroundMatroid& m, auto&& predicate) {
  IndexSet out;
  for (std::size_t l = 0; l < m.basis_count(); ++l) {
    if (predicate(m.bases()[l])) out.push_back(static_cast<int>(l) + 1);
  }
  return out;
}

void extend_sequences(const GroundMatroid& m, int length, ValidSequence& prefix,
                      ElementSet used, std::vector<ValidSequence>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    out.push_back(prefix);
    return;
  }
  for (int e = 1; e <= m.ground_size(); ++e) {
    if (used.contains(e)) continue;
    ElementSet next = used;
    next.insert(e);
    if (!is_valid_deletion(m, next)) continue;
    prefix.push_back(e);
    extend_sequences(m, length, prefix, next, out);
    prefix.pop_back();
  }
}

}  // namespace

TropicalPoint basis_point(ElementSet b, int ground_size) {
  std::vector<Rational> c(ground_size, Rational(1));
  for (int e : b.elements()) c[e - 1] = 0;
  return TropicalPoint(std::move(c));
}

PolytopeModel build_polytope(const GroundMatroid& m) {
  PolytopeModel p{m, {}, {}};
  p.generators.reserve(m.basis_count());
  for (ElementSet b : m.bases()) p.generators.push_back(basis_point(b, m.ground_size()));

  std::vector<IndexSet> origin(m.ground_size());
  for (int i = 1; i <= m.ground_size(); ++i) {
    origin[i - 1] = bases_where(m, [i](ElementSet b) { return b.contains(i); });
  }
  p.origin_type = FineType(std::move(origin));
  return p;
}

TropicalPoint corner(const PolytopeModel& p, int coordinate) {
  return corner(std::span<const TropicalPoint>(p.generators), coordinate);
}

FineType corner_type_by_formula(const PolytopeModel& p, int coordinate) {
  const auto& m = p.matroid;
  if (coordinate < 1 || coordinate > m.ground_size()) {
    throw Error(Errc::OutOfRange, "corner coordinate out of range");
  }
  std::vector<IndexSet> entries(m.ground_size());
  for (int j = 1; j <= m.ground_size(); ++j) {
    if (j == coordinate) {
      entries[j - 1] = bases_where(m, [](ElementSet) { return true; });
    } else {
      entries[j - 1] = bases_where(m, [&](ElementSet b) {
        return b.contains(j) && !b.contains(coordinate);
      });
    }
  }
  return FineType(std::move(entries));
}

FineType pseudovertex_type_by_formula(const PolytopeModel& p, ElementSet support) {
  const auto& m = p.matroid;
  const int ground = m.ground_size();
  const ElementSet deleted = support.complement(ground);
  // Generators avoiding every deleted coordinate: complement of the union of
  // the origin entries at deleted coordinates.
  IndexSet removed;
  for (int i : deleted.elements()) {
    const auto& t = p.origin_type.entry(i);
    IndexSet merged;
    std::set_union(removed.begin(), removed.end(), t.begin(), t.end(),
                   std::back_inserter(merged));
    removed = std::move(merged);
  }
  IndexSet avoiding;
  for (int l = 1; l <= static_cast<int>(m.basis_count()); ++l) {
    if (!std::binary_search(removed.begin(), removed.end(), l)) avoiding.push_back(l);
  }

  std::vector<IndexSet> entries(ground);
  for (int j = 1; j <= ground; ++j) {
    const auto& t0 = p.origin_type.entry(j);
    IndexSet e;
    if (support.contains(j)) {
      std::set_difference(t0.begin(), t0.end(), removed.begin(), removed.end(),
                          std::back_inserter(e));
    } else {
      std::set_union(t0.begin(), t0.end(), avoiding.begin(), avoiding.end(),
                     std::back_inserter(e));
    }
    entries[j - 1] = std::move(e);
  }
  return FineType(std::move(entries));
}

std::vector<PseudoVertex> pseudovertices(const PolytopeModel& p) {
  const auto& bases = p.matroid.bases();
  std::set<std::uint64_t> seen;
  std::vector<ElementSet> frontier;
  for (ElementSet b : bases) {
    if (seen.insert(b.bits()).second) frontier.push_back(b);
  }
  std::vector<ElementSet> unions = frontier;
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (ElementSet j : frontier) {
      for (ElementSet b : bases) {
        const ElementSet u = j | b;
        if (seen.insert(u.bits()).second) {
          next.push_back(u);
          unions.push_back(u);
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<PseudoVertex> out;
  for (ElementSet j : unions) {
    FineType t = pseudovertex_type_by_formula(p, j);
    if (cell_dimension(t) != 0) continue;
    out.push_back({j, basis_point(j, p.ambient()), std::move(t)});
  }
  std::sort(out.begin(), out.end(), [](const PseudoVertex& a, const PseudoVertex& b) {
    if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
    return lex_less(a.support, b.support);
  });
  return out;
}

std::string pseudovertex_label(const PolytopeModel& p, ElementSet support) {
  const ElementSet deleted = support.complement(p.ambient());
  if (deleted.empty()) return "0";
  if (auto idx = p.matroid.index_of(support)) return "v_" + std::to_string(*idx);
  std::string out = "e_";
  bool first = true;
  for (int e : deleted.elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out;
}

bool is_valid_deletion(const GroundMatroid& m, ElementSet deleted) {
  return std::any_of(m.bases().begin(), m.bases().end(),
                     [deleted](ElementSet b) { return b.disjoint(deleted); });
}

std::vector<ValidSequence> valid_sequences(const PolytopeModel& p, int length) {
  const int limit = p.ambient() - p.rank();
  if (length < 0 || length > limit) {
    throw Error(Errc::OutOfRange, "valid sequence length must lie in 0.." +
                                      std::to_string(limit));
  }
  std::vector<ValidSequence> out;
  ValidSequence prefix;
  extend_sequences(p.matroid, length, prefix, ElementSet{}, out);
  return out;
}

TropicalPoint BoundedCell::sample_point() const {
  const std::size_t m = vertex_chain.front().ambient();
  std::vector<Rational> sum(m, Rational(0));
  for (const auto& v : vertex_chain) {
    for (std::size_t i = 0; i < m; ++i) sum[i] += v[i];
  }
  for (auto& s : sum) s /= static_cast<long>(vertex_chain.size());
  return TropicalPoint(std::move(sum));
}

std::vector<BoundedCell> maximal_bounded_cells(const PolytopeModel& p) {
  const int ground = p.ambient();
  const int length = ground - p.rank();
  if (length < 1) {
    throw Error(Errc::OutOfRange, "maximal bounded cells need k <= d");
  }
  std::vector<BoundedCell> cells;
  for (auto& seq : valid_sequences(p, length)) {
    BoundedCell cell;
    ElementSet deleted;
    cell.vertex_chain.push_back(TropicalPoint::origin(ground));
    std::vector<IndexSet> entries(ground);
    IndexSet covered;  // union of origin entries of coordinates deleted so far
    for (int i : seq) {
      const auto& t0 = p.origin_type.entry(i);
      std::set_difference(t0.begin(), t0.end(), covered.begin(), covered.end(),
                          std::back_inserter(entries[i - 1]));
      IndexSet merged;
      std::set_union(covered.begin(), covered.end(), t0.begin(), t0.end(),
                     std::back_inserter(merged));
      covered = std::move(merged);
      deleted.insert(i);
      cell.vertex_chain.push_back(basis_point(deleted.complement(ground), ground));
    }
    cell.basis = deleted.complement(ground);
    cell.basis_index = p.matroid.index_of(cell.basis).value();
    for (int j : cell.basis.elements()) {
      const auto& t0 = p.origin_type.entry(j);
      std::set_difference(t0.begin(), t0.end(), covered.begin(), covered.end(),
                          std::back_inserter(entries[j - 1]));
    }
    cell.interior_type = FineType(std::move(entries));
    cell.sequence = std::move(seq);
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace tropmat
