#include "tropmat/minplus.hpp"

#include <algorithm>
#include <numeric>

#include "tropmat/error.hpp"

namespace tropmat {

namespace {

void require_same_ambient(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(Errc::DimensionMismatch,
                "dimension mismatch: " + std::to_string(a) + " vs " +
                    std::to_string(b) + " coordinates");
  }
}

void require_generators(const TropicalPoint& x,
                        std::span<const TropicalPoint> generators) {
  if (generators.empty()) {
    throw Error(Errc::EmptyInput, "generator list is empty");
  }
  for (const auto& v : generators) require_same_ambient(x.ambient(), v.ambient());
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

// --- TropicalPoint ----------------------------------------------------------

TropicalPoint::TropicalPoint(std::vector<Rational> coords)
    : coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
}

TropicalPoint::TropicalPoint(std::initializer_list<Rational> coords)
    : TropicalPoint(std::vector<Rational>(coords)) {}

TropicalPoint::TropicalPoint(std::initializer_list<int> coords) {
  coords_.reserve(coords.size());
  for (int c : coords) coords_.emplace_back(c);
}

TropicalPoint TropicalPoint::origin(std::size_t ambient) {
  return TropicalPoint(std::vector<Rational>(ambient, Rational(0)));
}

TropicalPoint TropicalPoint::unit(std::size_t ambient, int coordinate) {
  if (coordinate < 1 || static_cast<std::size_t>(coordinate) > ambient) {
    throw Error(Errc::OutOfRange, "unit vector coordinate out of range");
  }
  std::vector<Rational> c(ambient, Rational(0));
  c[coordinate - 1] = 1;
  return TropicalPoint(std::move(c));
}

TropicalPoint TropicalPoint::canonical() const {
  if (coords_.empty()) return *this;
  const Rational low = *std::min_element(coords_.begin(), coords_.end());
  std::vector<Rational> c(coords_);
  for (auto& x : c) x -= low;
  return TropicalPoint(std::move(c));
}

bool TropicalPoint::is_canonical() const {
  return !coords_.empty() &&
         *std::min_element(coords_.begin(), coords_.end()) == 0;
}

TropicalPoint TropicalPoint::translated(std::span<const Rational> offset) const {
  require_same_ambient(ambient(), offset.size());
  std::vector<Rational> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += offset[i];
  return TropicalPoint(std::move(c));
}

TropicalPoint TropicalPoint::shifted(const Rational& constant) const {
  std::vector<Rational> c(coords_);
  for (auto& x : c) x += constant;
  return TropicalPoint(std::move(c));
}

bool operator==(const TropicalPoint& a, const TropicalPoint& b) {
  if (a.ambient() != b.ambient()) return false;
  if (a.coords_.empty()) return true;
  const Rational offset = b.coords_[0] - a.coords_[0];
  for (std::size_t i = 1; i < a.coords_.size(); ++i) {
    if (b.coords_[i] - a.coords_[i] != offset) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const TropicalPoint& a, const TropicalPoint& b) {
  if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
  const auto ca = a.canonical();
  const auto cb = b.canonical();
  for (std::size_t i = 0; i < ca.ambient(); ++i) {
    const int s = cmp(ca[i], cb[i]);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

TropicalPoint canonical(const TropicalPoint& p) { return p.canonical(); }

std::vector<Rational> c0_chart(const TropicalPoint& p) {
  std::vector<Rational> out;
  if (p.ambient() == 0) return out;
  out.reserve(p.dim());
  for (std::size_t i = 1; i < p.ambient(); ++i) out.push_back(p[i] - p[0]);
  return out;
}

TropicalPoint from_c0_chart(std::span<const Rational> chart) {
  std::vector<Rational> c;
  c.reserve(chart.size() + 1);
  c.emplace_back(0);
  c.insert(c.end(), chart.begin(), chart.end());
  return TropicalPoint(std::move(c));
}

std::vector<TropicalPoint> trop_segment(const TropicalPoint& x,
                                        const TropicalPoint& y) {
  require_same_ambient(x.ambient(), y.ambient());
  // Points of the segment are min(x, y + mu) up to class; the shape changes
  // exactly when mu passes one of the differences x_i - y_i. Walking mu from
  // the largest difference (the point is x) down to the smallest (the point
  // is a representative of y) visits every breakpoint once.
  std::vector<Rational> deltas;
  deltas.reserve(x.ambient());
  for (std::size_t i = 0; i < x.ambient(); ++i) deltas.push_back(x[i] - y[i]);
  std::sort(deltas.begin(), deltas.end(), std::greater<>());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());

  std::vector<TropicalPoint> out;
  out.reserve(deltas.size());
  for (const auto& mu : deltas) {
    std::vector<Rational> c(x.ambient());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Rational shifted_y = y[i] + mu;
      c[i] = x[i] < shifted_y ? x[i] : shifted_y;
    }
    out.push_back(TropicalPoint(std::move(c)).canonical());
  }
  return out;
}

TropicalPoint tropical_combination(std::span<const TropicalPoint> points,
                                   std::span<const Rational> scalars) {
  if (points.empty()) throw Error(Errc::EmptyInput, "no points to combine");
  if (points.size() != scalars.size()) {
    throw Error(Errc::DimensionMismatch, "one scalar per point required");
  }
  std::vector<Rational> c(points[0].coords().begin(), points[0].coords().end());
  for (auto& v : c) v += scalars[0];
  for (std::size_t j = 1; j < points.size(); ++j) {
    require_same_ambient(c.size(), points[j].ambient());
    for (std::size_t i = 0; i < c.size(); ++i) {
      Rational candidate = points[j][i] + scalars[j];
      if (candidate < c[i]) c[i] = std::move(candidate);
    }
  }
  return TropicalPoint(std::move(c));
}

// --- types -----------------------------------------------------------------

int CoarseType::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

int CoarseType::support_size() const {
  return static_cast<int>(
      std::count_if(counts.begin(), counts.end(), [](int c) { return c != 0; }));
}

FineType::FineType(std::vector<IndexSet> entries) : entries_(std::move(entries)) {
  for (auto& e : entries_) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
}

CoarseType FineType::coarse() const {
  CoarseType t;
  t.counts.reserve(entries_.size());
  for (const auto& e : entries_) t.counts.push_back(static_cast<int>(e.size()));
  return t;
}

bool FineType::bounded() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const IndexSet& e) { return e.empty(); });
}

IndexSet FineType::support() const {
  IndexSet out;
  for (const auto& e : entries_) out = set_union(out, e);
  return out;
}

bool FineType::contains(const FineType& other) const {
  if (size() != other.size()) return false;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!std::includes(entries_[k].begin(), entries_[k].end(),
                       other.entries_[k].begin(), other.entries_[k].end())) {
      return false;
    }
  }
  return true;
}

FineType FineType::meet(const FineType& other) const {
  require_same_ambient(size(), other.size());
  std::vector<IndexSet> out(entries_.size());
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    out[k] = set_intersection(entries_[k], other.entries_[k]);
  }
  return FineType(std::move(out));
}

std::string to_string(const FineType& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ',';
    out += '{';
    const auto& e = t.entries()[k];
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(e[j]);
    }
    out += '}';
  }
  return out + ")";
}

std::string to_string(const CoarseType& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(t[k]);
  }
  return out + ")";
}

std::string to_string(const TropicalPoint& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.ambient(); ++k) {
    if (k) out += ',';
    out += to_string(p[k]);
  }
  return out + ")";
}

FineType fine_type(const TropicalPoint& x, std::span<const TropicalPoint> generators) {
  require_generators(x, generators);
  const std::size_t m = x.ambient();
  std::vector<IndexSet> entries(m);
  std::vector<Rational> diff(m);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& v = generators[i];
    for (std::size_t k = 0; k < m; ++k) diff[k] = v[k] - x[k];
    const Rational& low = *std::min_element(diff.begin(), diff.end());
    for (std::size_t k = 0; k < m; ++k) {
      if (diff[k] == low) entries[k].push_back(static_cast<int>(i) + 1);
    }
  }
  return FineType(std::move(entries));
}

CoarseType coarse_type(const TropicalPoint& x,
                       std::span<const TropicalPoint> generators) {
  return fine_type(x, generators).coarse();
}

bool in_tconv(const TropicalPoint& x, std::span<const TropicalPoint> generators) {
  return fine_type(x, generators).bounded();
}

TropicalPoint corner(std::span<const TropicalPoint> generators, int coordinate) {
  if (generators.empty()) throw Error(Errc::EmptyInput, "generator list is empty");
  const std::size_t m = generators[0].ambient();
  if (coordinate < 1 || static_cast<std::size_t>(coordinate) > m) {
    throw Error(Errc::OutOfRange, "corner coordinate out of range");
  }
  std::vector<Rational> scalars;
  scalars.reserve(generators.size());
  for (const auto& v : generators) {
    require_same_ambient(m, v.ambient());
    scalars.push_back(-v[coordinate - 1]);
  }
  return tropical_combination(generators, scalars).canonical();
}

// --- halfspaces --------------------------------------------------------------

TropicalHalfspace::TropicalHalfspace(TropicalPoint apex, std::vector<int> sectors)
    : apex_(std::move(apex)), sectors_(std::move(sectors)) {
  std::sort(sectors_.begin(), sectors_.end());
  sectors_.erase(std::unique(sectors_.begin(), sectors_.end()), sectors_.end());
  const auto m = static_cast<int>(apex_.ambient());
  if (sectors_.empty() || static_cast<int>(sectors_.size()) >= m) {
    throw Error(Errc::OutOfRange,
                "sector set must be a nonempty proper subset of the coordinates");
  }
  if (sectors_.front() < 1 || sectors_.back() > m) {
    throw Error(Errc::OutOfRange, "sector index out of range");
  }
}

std::vector<int> TropicalHalfspace::complement() const {
  std::vector<int> out;
  for (int k = 1; k <= static_cast<int>(ambient()); ++k) {
    if (!std::binary_search(sectors_.begin(), sectors_.end(), k)) out.push_back(k);
  }
  return out;
}

bool halfspace_contains(const TropicalHalfspace& h, const TropicalPoint& x) {
  require_same_ambient(h.ambient(), x.ambient());
  // With the linear form a = -apex: min over I of (a_i + x_i) must not exceed
  // the minimum over the complement.
  Rational best_in, best_out;
  bool have_in = false, have_out = false;
  for (std::size_t k = 0; k < x.ambient(); ++k) {
    Rational value = x[k] - h.apex()[k];
    const bool inside =
        std::binary_search(h.sectors().begin(), h.sectors().end(),
                           static_cast<int>(k) + 1);
    Rational& best = inside ? best_in : best_out;
    bool& have = inside ? have_in : have_out;
    if (!have || value < best) {
      best = std::move(value);
      have = true;
    }
  }
  return best_in <= best_out;
}

}  // namespace tropmat
