#include "tropmat/matroid.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include <gmpxx.h>
#include <json.hpp>

#include "tropmat/error.hpp"

namespace tropmat {

namespace {

constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Connected using only edges whose label is not in `removed`.
bool connected_without(const LabeledGraph& g, ElementSet removed) {
  UnionFind uf(g.vertices.size());
  std::size_t components = g.vertices.size();
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (removed.contains(static_cast<int>(e) + 1)) continue;
    if (uf.unite(g.edges[e].first, g.edges[e].second)) --components;
  }
  return components <= 1;
}

bool is_spanning_tree(const LabeledGraph& g, ElementSet edges) {
  UnionFind uf(g.vertices.size());
  for (int e : edges.elements()) {
    const auto& [a, b] = g.edges[e - 1];
    if (!uf.unite(a, b)) return false;
  }
  return edges.size() + 1 == static_cast<int>(g.vertices.size());
}

void next_subsets(int ground, int k, int start, ElementSet current,
                  std::vector<ElementSet>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  const int needed = k - current.size();
  for (int e = start; e <= ground - needed + 1; ++e) {
    ElementSet next = current;
    next.insert(e);
    next_subsets(ground, k, e + 1, next, out);
  }
}

// Include-first branching over edges in label order, which yields trees in
// lexicographic order. Including an edge contracts it; excluding deletes it
// and is only allowed while the remaining graph stays connected.
void branch_trees(const LabeledGraph& g, std::size_t edge, ElementSet chosen,
                  ElementSet deleted, std::vector<ElementSet>& out) {
  const int target = static_cast<int>(g.vertices.size()) - 1;
  if (chosen.size() == target) {
    out.push_back(chosen);
    return;
  }
  if (edge == g.edges.size()) return;
  const int label = static_cast<int>(edge) + 1;

  ElementSet with = chosen;
  with.insert(label);
  UnionFind uf(g.vertices.size());
  bool acyclic = true;
  for (int e : with.elements()) {
    if (!uf.unite(g.edges[e - 1].first, g.edges[e - 1].second)) {
      acyclic = false;
      break;
    }
  }
  if (acyclic) branch_trees(g, edge + 1, with, deleted, out);

  ElementSet without = deleted;
  without.insert(label);
  if (connected_without(g, without)) branch_trees(g, edge + 1, chosen, without, out);
}

void sort_lex(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  if (!result.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
  return result.get_ui();
}

std::vector<ElementSet> k_subsets(int ground_size, int k) {
  std::vector<ElementSet> out;
  if (k < 0 || k > ground_size) return out;
  next_subsets(ground_size, k, 1, ElementSet{}, out);
  return out;
}

void validate_graph(const LabeledGraph& g) {
  if (g.vertices.empty()) throw Error(Errc::EmptyInput, "graph has no vertices");
  if (g.edges.size() > static_cast<std::size_t>(ElementSet::kMaxElement)) {
    throw Error(Errc::OutOfRange, "at most 63 edges are supported");
  }
  std::set<std::string> names;
  for (const auto& v : g.vertices) {
    if (!names.insert(v).second) {
      throw Error(Errc::DuplicateVertex, "duplicate vertex '" + v + "'");
    }
  }
  std::set<std::pair<int, int>> seen;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e];
    const auto nv = static_cast<int>(g.vertices.size());
    if (a < 0 || b < 0 || a >= nv || b >= nv) {
      throw Error(Errc::UnknownVertex, "edge " + std::to_string(e + 1) +
                                           " references an unknown vertex");
    }
    if (a == b) {
      throw Error(Errc::LoopEdge, "edge " + std::to_string(e + 1) + " is a loop");
    }
    if (!seen.insert(std::minmax(a, b)).second) {
      throw Error(Errc::DuplicateEdge,
                  "edge " + std::to_string(e + 1) + " duplicates an earlier edge");
    }
  }
  if (!connected_without(g, ElementSet{})) {
    throw Error(Errc::Disconnected, "graph is not connected");
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const int label = static_cast<int>(e) + 1;
    if (!connected_without(g, ElementSet{label})) {
      throw Error(Errc::BridgePresent,
                  "edge " + std::to_string(label) + " is a bridge");
    }
  }
}

LabeledGraph parse_graph(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::MalformedInput, std::string("malformed graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
      !doc["vertices"].is_array() || !doc["edges"].is_array()) {
    throw Error(Errc::MalformedInput,
                "graph JSON needs array fields \"vertices\" and \"edges\"");
  }
  LabeledGraph g;
  std::map<std::string, int> index;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw Error(Errc::MalformedInput, "vertex names must be strings");
    const auto name = v.get<std::string>();
    if (!index.emplace(name, static_cast<int>(g.vertices.size())).second) {
      throw Error(Errc::DuplicateVertex, "duplicate vertex '" + name + "'");
    }
    g.vertices.push_back(name);
  }
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw Error(Errc::MalformedInput, "each edge must be a pair of vertex names");
    }
    const auto a = index.find(e[0].get<std::string>());
    const auto b = index.find(e[1].get<std::string>());
    if (a == index.end() || b == index.end()) {
      throw Error(Errc::UnknownVertex, "edge references an unknown vertex");
    }
    g.edges.emplace_back(a->second, b->second);
  }
  validate_graph(g);
  return g;
}

std::vector<ElementSet> spanning_trees(const LabeledGraph& g, SpanningTreeMethod method) {
  const int edges = static_cast<int>(g.edges.size());
  const int rank = static_cast<int>(g.vertices.size()) - 1;
  if (method == SpanningTreeMethod::Auto) {
    method = binomial(edges, rank) <= kExhaustiveLimit ? SpanningTreeMethod::Exhaustive
                                                       : SpanningTreeMethod::Recursive;
  }
  std::vector<ElementSet> trees;
  if (method == SpanningTreeMethod::Exhaustive) {
    for (ElementSet s : k_subsets(edges, rank)) {
      if (is_spanning_tree(g, s)) trees.push_back(s);
    }
  } else {
    branch_trees(g, 0, ElementSet{}, ElementSet{}, trees);
  }
  sort_lex(trees);
  return trees;
}

GroundMatroid enumerate_bases(const LabeledGraph& g, SpanningTreeMethod method) {
  validate_graph(g);
  return GroundMatroid::from_bases(static_cast<int>(g.edges.size()),
                                   spanning_trees(g, method));
}

GroundMatroid GroundMatroid::from_bases(int ground_size, std::vector<ElementSet> bases) {
  if (ground_size < 1 || ground_size > ElementSet::kMaxElement) {
    throw Error(Errc::OutOfRange, "ground set size must lie in 1..63");
  }
  if (bases.empty()) throw Error(Errc::EmptyInput, "basis list is empty");
  const ElementSet ground = ElementSet::full(ground_size);
  const int rank = bases.front().size();
  for (ElementSet b : bases) {
    if (!b.subset_of(ground)) {
      throw Error(Errc::OutOfRange, "basis " + to_string(b) + " has an element outside [" +
                                        std::to_string(ground_size) + "]");
    }
    if (b.size() != rank) {
      throw Error(Errc::UnequalBasisSizes, "bases have different cardinalities");
    }
  }
  sort_lex(bases);
  if (std::adjacent_find(bases.begin(), bases.end()) != bases.end()) {
    throw Error(Errc::DuplicateBasis, "basis list contains a duplicate");
  }
  ElementSet in_some, in_all = ground;
  for (ElementSet b : bases) {
    in_some = in_some | b;
    in_all = in_all & b;
  }
  if (!in_all.empty()) {
    throw Error(Errc::ElementInEveryBasis,
                "element " + std::to_string(in_all.elements().front()) +
                    " lies in every basis (coloop)");
  }
  if (in_some != ground) {
    throw Error(Errc::ElementInNoBasis,
                "element " + std::to_string((ground - in_some).elements().front()) +
                    " lies in no basis (loop)");
  }
  if (!check_exchange(bases)) {
    throw Error(Errc::ExchangeViolated, "basis exchange property violated");
  }
  return GroundMatroid(ground_size, rank, std::move(bases));
}

GroundMatroid GroundMatroid::uniform(int rank, int ground_size) {
  if (rank < 1 || rank >= ground_size) {
    throw Error(Errc::OutOfRange, "uniform matroid needs 1 <= k < d+1");
  }
  return from_bases(ground_size, k_subsets(ground_size, rank));
}

std::optional<int> GroundMatroid::index_of(ElementSet b) const {
  const auto it = std::lower_bound(bases_.begin(), bases_.end(), b, lex_less);
  if (it == bases_.end() || *it != b) return std::nullopt;
  return static_cast<int>(it - bases_.begin()) + 1;
}

GroundMatroid matroid_from_bases(int ground_size,
                                 const std::vector<std::vector<int>>& bases) {
  std::vector<ElementSet> sets;
  sets.reserve(bases.size());
  for (const auto& b : bases) {
    for (int e : b) {
      if (e < 1 || e > ground_size) {
        throw Error(Errc::OutOfRange, "basis element " + std::to_string(e) +
                                          " outside [" + std::to_string(ground_size) +
                                          "]");
      }
    }
    ElementSet s(b);
    if (s.size() != static_cast<int>(b.size())) {
      throw Error(Errc::MalformedInput, "basis lists an element twice");
    }
    sets.push_back(s);
  }
  return GroundMatroid::from_bases(ground_size, std::move(sets));
}

std::vector<ElementSet> non_bases(const GroundMatroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet s : k_subsets(m.ground_size(), m.rank())) {
    if (!m.is_basis(s)) out.push_back(s);
  }
  return out;
}

std::size_t count_b(const GroundMatroid& m, ElementSet in, ElementSet out) {
  if (!in.disjoint(out)) {
    throw Error(Errc::OverlappingSets, "b_{I,J} needs disjoint I and J");
  }
  return static_cast<std::size_t>(
      std::count_if(m.bases().begin(), m.bases().end(), [&](ElementSet b) {
        return in.subset_of(b) && b.disjoint(out);
      }));
}

bool check_exchange(const std::vector<ElementSet>& bases) {
  std::vector<ElementSet> sorted = bases;
  sort_lex(sorted);
  auto contains = [&](ElementSet s) {
    return std::binary_search(sorted.begin(), sorted.end(), s, lex_less);
  };
  for (ElementSet u : bases) {
    for (ElementSet v : bases) {
      if (u == v) continue;
      for (int x : (u - v).elements()) {
        bool found = false;
        for (int y : (v - u).elements()) {
          ElementSet swapped = u;
          swapped.erase(x);
          swapped.insert(y);
          if (contains(swapped)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool check_exchange(const GroundMatroid& m) {
  return check_exchange(m.bases());
}

}  // namespace tropmat
