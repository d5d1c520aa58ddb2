#include "implab/sperner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>

#include "implab/errors.hpp"
#include "implab/rng.hpp"

namespace implab {

namespace {

constexpr std::array<long long, 6> kFactorial = {1, 1, 2, 6, 24, 120};
constexpr std::array<int, 5> kMaxResolution = {0, 100000, 4096, 128, 32};

void require_input(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

// Permutations of {1..d} in lexicographic order.
const std::vector<std::array<int, 4>>& perm_table(int d) {
  static const auto tables = [] {
    std::array<std::vector<std::array<int, 4>>, 5> t;
    for (int d = 1; d <= 4; ++d) {
      std::vector<int> p(static_cast<std::size_t>(d));
      std::iota(p.begin(), p.end(), 1);
      do {
        std::array<int, 4> a{};
        std::copy(p.begin(), p.end(), a.begin());
        t[static_cast<std::size_t>(d)].push_back(a);
      } while (std::next_permutation(p.begin(), p.end()));
    }
    return t;
  }();
  return tables[static_cast<std::size_t>(d)];
}

int perm_rank(const std::array<int, 4>& p, int d) {
  int rank = 0;
  for (int i = 0; i < d; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < d; ++j) smaller += p[j] < p[i] ? 1 : 0;
    rank = rank * (d - i) + smaller;
  }
  return rank;
}

// Steps the composition (c_0..c_d) of total to its lexicographic successor.
// Returns false once the last composition (total, 0, ..., 0) is reached.
bool next_composition(std::vector<long long>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  int i = d;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == 0) --i;
  if (i <= 0) return false;
  c[static_cast<std::size_t>(i - 1)] += 1;
  long long rest = c[static_cast<std::size_t>(i)] - 1;
  c[static_cast<std::size_t>(i)] = 0;
  c[static_cast<std::size_t>(d)] = rest;
  return true;
}

std::vector<long long> sorted_facet(const std::vector<long long>& cell, int facet) {
  std::vector<long long> key;
  key.reserve(cell.size() - 1);
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (static_cast<int>(i) != facet) key.push_back(cell[i]);
  }
  std::sort(key.begin(), key.end());
  return key;
}

using FacetMap = std::map<std::vector<long long>, std::vector<std::pair<long long, int>>>;

FacetMap build_facet_map(const Triangulation& t) {
  FacetMap out;
  for (long long c = 0; c < t.cell_count(); ++c) {
    const auto verts = t.cell_vertices(c);
    for (int f = 0; f <= t.dim(); ++f) {
      out[sorted_facet(verts, f)].emplace_back(c, f);
    }
  }
  return out;
}

}  // namespace

std::vector<double> BaryPoint::to_point() const {
  std::vector<double> out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    out[i] = static_cast<double>(coords[i]) / static_cast<double>(denom);
  }
  return out;
}

int Triangulation::max_kuhn_resolution(int dim) {
  require_input(dim >= 1 && dim <= 4, "dimension must be between 1 and 4");
  return kMaxResolution[static_cast<std::size_t>(dim)];
}

Triangulation Triangulation::kuhn(int dim, int resolution) {
  require_input(dim >= 1 && dim <= 4, "dimension must be between 1 and 4");
  require_input(resolution >= 1, "resolution must be positive");
  require_input(resolution <= kMaxResolution[static_cast<std::size_t>(dim)],
                "resolution " + std::to_string(resolution) +
                    " exceeds the cap for dimension " + std::to_string(dim));

  Triangulation t;
  t.dim_ = dim;
  t.res_ = resolution;
  t.denom_ = resolution;
  t.kuhn_ = true;

  const long long k = resolution;
  t.binom_.assign(static_cast<std::size_t>(k + dim + 1), {});
  for (long long n = 0; n <= k + dim; ++n) {
    auto& row = t.binom_[static_cast<std::size_t>(n)];
    row[0] = 1;
    for (int j = 1; j <= dim; ++j) {
      row[static_cast<std::size_t>(j)] =
          n == 0 ? 0
                 : t.binom_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j - 1)] +
                       t.binom_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j)];
    }
  }
  t.vcount_ = t.binom(k + dim, dim);

  long long expected_cells = 1;
  for (int i = 0; i < dim; ++i) expected_cells *= k;
  t.codes_.reserve(static_cast<std::size_t>(expected_cells));

  const auto& perms = perm_table(dim);
  std::vector<long long> c(static_cast<std::size_t>(dim + 1), 0);
  c.back() = k;
  std::array<long long, 5> w{};
  long long rank = 0;
  do {
    for (std::size_t pr = 0; pr < perms.size(); ++pr) {
      std::copy(c.begin(), c.end(), w.begin());
      bool ok = true;
      for (int j = 0; j < dim; ++j) {
        const int s = perms[pr][static_cast<std::size_t>(j)];
        if (w[static_cast<std::size_t>(s - 1)] == 0) {
          ok = false;
          break;
        }
        w[static_cast<std::size_t>(s - 1)] -= 1;
        w[static_cast<std::size_t>(s)] += 1;
      }
      if (ok) {
        t.codes_.push_back(static_cast<std::uint64_t>(rank) *
                               static_cast<std::uint64_t>(kFactorial[static_cast<std::size_t>(dim)]) +
                           pr);
      }
    }
    ++rank;
  } while (next_composition(c));

  t.ccount_ = static_cast<long long>(t.codes_.size());
  if (t.ccount_ != expected_cells || rank != t.vcount_) {
    throw InternalInvariantBroken("grid enumeration came out the wrong size");
  }
  return t;
}

Triangulation Triangulation::from_data(int dim, long long denom,
                                       std::vector<std::vector<long long>> vertex_coords,
                                       std::vector<std::vector<int>> cells) {
  require_input(dim >= 1 && dim <= 4, "dimension must be between 1 and 4");
  require_input(denom >= 1, "denominator must be positive");
  require_input(!vertex_coords.empty(), "no vertices");
  require_input(!cells.empty(), "no cells");

  Triangulation t;
  t.dim_ = dim;
  t.res_ = 0;
  t.denom_ = denom;
  t.kuhn_ = false;
  t.vcount_ = static_cast<long long>(vertex_coords.size());
  t.ccount_ = static_cast<long long>(cells.size());

  std::map<std::vector<long long>, int> seen;
  t.coords_.reserve(vertex_coords.size() * static_cast<std::size_t>(dim + 1));
  for (const auto& v : vertex_coords) {
    require_input(static_cast<int>(v.size()) == dim + 1,
                  "vertex needs dim + 1 coordinates");
    long long sum = 0;
    for (long long x : v) {
      require_input(x >= 0, "vertex coordinate is negative");
      sum += x;
    }
    require_input(sum == denom, "vertex coordinates must sum to the denominator");
    require_input(seen.emplace(v, 0).second, "duplicate vertex");
    t.coords_.insert(t.coords_.end(), v.begin(), v.end());
  }
  for (const auto& cell : cells) {
    require_input(static_cast<int>(cell.size()) == dim + 1,
                  "cell needs dim + 1 vertices");
    auto sorted = cell;
    std::sort(sorted.begin(), sorted.end());
    require_input(sorted.front() >= 0 && sorted.back() < t.vcount_,
                  "cell vertex out of range");
    require_input(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                  "cell repeats a vertex");
    t.cells_.insert(t.cells_.end(), cell.begin(), cell.end());
  }
  return t;
}

long long Triangulation::binom(long long n, int j) const {
  if (n < 0 || j < 0) return 0;
  if (n >= static_cast<long long>(binom_.size())) {
    throw InternalInvariantBroken("binomial table too small");
  }
  return binom_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
}

long long Triangulation::vertex_rank(const long long* c) const {
  long long r = 0;
  long long s = denom_;
  for (int i = 0; i < dim_; ++i) {
    const int rem = dim_ - i;
    r += binom(s + rem, rem) - binom(s - c[i] + rem, rem);
    s -= c[i];
  }
  return r;
}

void Triangulation::vertex_unrank(long long rank, long long* c) const {
  long long s = denom_;
  for (int i = 0; i < dim_; ++i) {
    const int rem = dim_ - i;
    const long long total = binom(s + rem, rem);
    long long lo = 0;
    long long hi = s;
    while (lo < hi) {
      const long long mid = lo + (hi - lo + 1) / 2;
      if (total - binom(s - mid + rem, rem) <= rank) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    rank -= total - binom(s - lo + rem, rem);
    c[i] = lo;
    s -= lo;
  }
  c[dim_] = s;
}

void Triangulation::decode_cell(long long idx,
                                std::array<std::array<long long, 5>, 5>& verts,
                                std::array<int, 4>& perm) const {
  const std::uint64_t fact =
      static_cast<std::uint64_t>(kFactorial[static_cast<std::size_t>(dim_)]);
  const std::uint64_t code = codes_[static_cast<std::size_t>(idx)];
  vertex_unrank(static_cast<long long>(code / fact), verts[0].data());
  perm = perm_table(dim_)[static_cast<std::size_t>(code % fact)];
  for (int j = 1; j <= dim_; ++j) {
    verts[static_cast<std::size_t>(j)] = verts[static_cast<std::size_t>(j - 1)];
    const int s = perm[static_cast<std::size_t>(j - 1)];
    verts[static_cast<std::size_t>(j)][static_cast<std::size_t>(s - 1)] -= 1;
    verts[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] += 1;
  }
}

long long Triangulation::cell_index_of(const long long* v0,
                                       const std::array<int, 4>& perm) const {
  const std::uint64_t fact =
      static_cast<std::uint64_t>(kFactorial[static_cast<std::size_t>(dim_)]);
  const std::uint64_t code = static_cast<std::uint64_t>(vertex_rank(v0)) * fact +
                             static_cast<std::uint64_t>(perm_rank(perm, dim_));
  auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) return -1;
  return static_cast<long long>(it - codes_.begin());
}

BaryPoint Triangulation::vertex(long long v) const {
  return BaryPoint{vertex_coords(v), denom_};
}

std::vector<long long> Triangulation::vertex_coords(long long v) const {
  require_input(v >= 0 && v < vcount_, "vertex index out of range");
  std::vector<long long> out(static_cast<std::size_t>(dim_ + 1));
  if (kuhn_) {
    vertex_unrank(v, out.data());
  } else {
    const std::size_t base = static_cast<std::size_t>(v) * static_cast<std::size_t>(dim_ + 1);
    std::copy(coords_.begin() + static_cast<std::ptrdiff_t>(base),
              coords_.begin() + static_cast<std::ptrdiff_t>(base + out.size()), out.begin());
  }
  return out;
}

std::vector<int> Triangulation::carrier(long long v) const {
  const auto c = vertex_coords(v);
  std::vector<int> out;
  for (int i = 0; i <= dim_; ++i) {
    if (c[static_cast<std::size_t>(i)] > 0) out.push_back(i);
  }
  return out;
}

std::vector<double> Triangulation::vertex_point(long long v) const {
  return vertex(v).to_point();
}

std::vector<long long> Triangulation::cell_vertices(long long c) const {
  require_input(c >= 0 && c < ccount_, "cell index out of range");
  std::vector<long long> out(static_cast<std::size_t>(dim_ + 1));
  if (kuhn_) {
    std::array<std::array<long long, 5>, 5> verts{};
    std::array<int, 4> perm{};
    decode_cell(c, verts, perm);
    for (int j = 0; j <= dim_; ++j) {
      out[static_cast<std::size_t>(j)] = vertex_rank(verts[static_cast<std::size_t>(j)].data());
    }
  } else {
    const std::size_t base = static_cast<std::size_t>(c) * static_cast<std::size_t>(dim_ + 1);
    for (int j = 0; j <= dim_; ++j) {
      out[static_cast<std::size_t>(j)] = cells_[base + static_cast<std::size_t>(j)];
    }
  }
  return out;
}

std::vector<double> Triangulation::cell_barycenter(long long c) const {
  const auto ids = cell_vertices(c);
  std::vector<double> out(static_cast<std::size_t>(dim_ + 1), 0.0);
  for (long long v : ids) {
    const auto vc = vertex_coords(v);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += static_cast<double>(vc[i]);
  }
  const double scale = static_cast<double>(dim_ + 1) * static_cast<double>(denom_);
  for (double& x : out) x /= scale;
  return out;
}

Triangulation::FacetNeighbor Triangulation::neighbor_across(long long cell,
                                                            int facet) const {
  require_input(cell >= 0 && cell < ccount_, "cell index out of range");
  require_input(facet >= 0 && facet <= dim_, "facet index out of range");
  if (!kuhn_) {
    const auto key = sorted_facet(cell_vertices(cell), facet);
    FacetNeighbor found;
    int matches = 0;
    for (long long c = 0; c < ccount_; ++c) {
      if (c == cell) continue;
      const auto verts = cell_vertices(c);
      for (int f = 0; f <= dim_; ++f) {
        if (sorted_facet(verts, f) == key) {
          ++matches;
          found.cell = c;
          found.entry = f;
        }
      }
    }
    if (matches > 1) throw InputError("facet shared by more than two cells");
    return found;
  }

  const int d = dim_;
  std::array<std::array<long long, 5>, 5> verts{};
  std::array<int, 4> perm{};
  decode_cell(cell, verts, perm);

  std::array<long long, 5> nv0{};
  std::array<int, 4> np{};
  int entry = 0;
  if (facet > 0 && facet < d) {
    // Swapping the two steps around the dropped vertex reflects it.
    const int s = perm[static_cast<std::size_t>(facet)];
    if (verts[static_cast<std::size_t>(facet - 1)][static_cast<std::size_t>(s - 1)] == 0) {
      return FacetNeighbor{};
    }
    np = perm;
    std::swap(np[static_cast<std::size_t>(facet - 1)], np[static_cast<std::size_t>(facet)]);
    nv0 = verts[0];
    entry = facet;
  } else if (facet == 0) {
    // The walk restarts one vertex later and wraps its first step to the end.
    const int s = perm[0];
    if (verts[static_cast<std::size_t>(d)][static_cast<std::size_t>(s - 1)] == 0) {
      return FacetNeighbor{};
    }
    for (int j = 0; j + 1 < d; ++j) np[static_cast<std::size_t>(j)] = perm[static_cast<std::size_t>(j + 1)];
    np[static_cast<std::size_t>(d - 1)] = perm[0];
    nv0 = verts[1];
    entry = d;
  } else {
    // The last step is unwound and replayed first from one vertex earlier.
    const int s = perm[static_cast<std::size_t>(d - 1)];
    if (verts[0][static_cast<std::size_t>(s)] == 0) return FacetNeighbor{};
    nv0 = verts[0];
    nv0[static_cast<std::size_t>(s - 1)] += 1;
    nv0[static_cast<std::size_t>(s)] -= 1;
    np[0] = perm[static_cast<std::size_t>(d - 1)];
    for (int j = 1; j < d; ++j) np[static_cast<std::size_t>(j)] = perm[static_cast<std::size_t>(j - 1)];
    entry = 0;
  }
  const long long idx = cell_index_of(nv0.data(), np);
  if (idx < 0) throw InternalInvariantBroken("neighbour cell missing from the grid");
  return FacetNeighbor{idx, entry};
}

std::vector<std::pair<long long, int>> Triangulation::bottom_face_incidences() const {
  std::vector<std::pair<long long, int>> out;
  if (!kuhn_) {
    for (long long c = 0; c < ccount_; ++c) {
      const auto verts = cell_vertices(c);
      for (int f = 0; f <= dim_; ++f) {
        bool on_bottom = true;
        for (int j = 0; j <= dim_ && on_bottom; ++j) {
          if (j == f) continue;
          const auto vc = vertex_coords(verts[static_cast<std::size_t>(j)]);
          on_bottom = vc[static_cast<std::size_t>(dim_)] == 0;
        }
        if (!on_bottom) continue;
        if (neighbor_across(c, f).cell < 0) out.emplace_back(c, f);
      }
    }
    return out;
  }

  const int d = dim_;
  std::array<long long, 5> v0{};
  std::array<int, 4> parent{};
  if (d == 1) {
    v0[0] = res_;
    parent[0] = 1;
    const long long idx = cell_index_of(v0.data(), parent);
    if (idx < 0) throw InternalInvariantBroken("bottom cell missing from the grid");
    out.emplace_back(idx, 1);
    return out;
  }

  // Cells of the bottom face form the same kind of grid one dimension down;
  // appending the final step to a face walk lands on its unique parent cell.
  const auto& face_perms = perm_table(d - 1);
  std::vector<long long> c(static_cast<std::size_t>(d), 0);
  c.back() = res_;
  do {
    for (const auto& fp : face_perms) {
      std::array<long long, 5> w{};
      std::copy(c.begin(), c.end(), w.begin());
      bool ok = true;
      for (int j = 0; j + 1 < d; ++j) {
        const int s = fp[static_cast<std::size_t>(j)];
        if (w[static_cast<std::size_t>(s - 1)] == 0) {
          ok = false;
          break;
        }
        w[static_cast<std::size_t>(s - 1)] -= 1;
        w[static_cast<std::size_t>(s)] += 1;
      }
      if (!ok) continue;
      std::copy(c.begin(), c.end(), v0.begin());
      v0[static_cast<std::size_t>(d)] = 0;
      for (int j = 0; j + 1 < d; ++j) parent[static_cast<std::size_t>(j)] = fp[static_cast<std::size_t>(j)];
      parent[static_cast<std::size_t>(d - 1)] = d;
      const long long idx = cell_index_of(v0.data(), parent);
      if (idx < 0) throw InternalInvariantBroken("bottom cell missing from the grid");
      out.emplace_back(idx, d);
    }
  } while (next_composition(c));
  return out;
}

void for_each_vertex(const Triangulation& t,
                     const std::function<void(long long, const long long*)>& fn) {
  if (t.is_kuhn()) {
    std::vector<long long> c(static_cast<std::size_t>(t.dim() + 1), 0);
    c.back() = t.denom();
    long long idx = 0;
    do {
      fn(idx, c.data());
      ++idx;
    } while (next_composition(c));
    if (idx != t.vertex_count()) {
      throw InternalInvariantBroken("vertex sweep came out the wrong size");
    }
  } else {
    for (long long v = 0; v < t.vertex_count(); ++v) {
      const auto coords = t.vertex_coords(v);
      fn(v, coords.data());
    }
  }
}

void validate_triangulation(const Triangulation& t) {
  const auto facets = build_facet_map(t);
  for (const auto& [key, owners] : facets) {
    if (owners.size() > 2) {
      throw InputError("facet shared by " + std::to_string(owners.size()) + " cells");
    }
    if (owners.size() == 1) {
      // A one-sided facet must lie flat on a face of the simplex.
      bool on_face = false;
      for (int i = 0; i <= t.dim() && !on_face; ++i) {
        on_face = true;
        for (long long v : key) {
          if (t.vertex_coords(v)[static_cast<std::size_t>(i)] != 0) {
            on_face = false;
            break;
          }
        }
      }
      if (!on_face) {
        throw InputError("boundary facet of cell " +
                         std::to_string(owners.front().first) +
                         " does not lie on a face of the simplex");
      }
    }
  }
}

void validate_labeling(const Triangulation& t, const Labeling& labels) {
  require_input(static_cast<long long>(labels.size()) == t.vertex_count(),
                "labeling size does not match the vertex count");
  const int d = t.dim();
  std::string problem;
  for_each_vertex(t, [&](long long v, const long long* c) {
    if (!problem.empty()) return;
    const int l = labels[static_cast<std::size_t>(v)];
    if (l < 0 || l > d) {
      problem = "label of vertex " + std::to_string(v) + " is out of range";
    } else if (c[static_cast<std::size_t>(l)] == 0) {
      problem = "vertex " + std::to_string(v) + " is labeled " + std::to_string(l) +
                " outside its carrier";
    }
  });
  require_input(problem.empty(), problem);
}

namespace {

int cell_label_mask(const Triangulation& t, const Labeling& labels, long long cell,
                    std::array<int, 5>& out) {
  const auto verts = t.cell_vertices(cell);
  int mask = 0;
  for (int j = 0; j <= t.dim(); ++j) {
    out[static_cast<std::size_t>(j)] =
        labels[static_cast<std::size_t>(verts[static_cast<std::size_t>(j)])];
    mask |= 1 << out[static_cast<std::size_t>(j)];
  }
  return mask;
}

}  // namespace

std::vector<long long> find_panchromatic_all(const Triangulation& t,
                                             const Labeling& labels) {
  validate_labeling(t, labels);
  const int full = (1 << (t.dim() + 1)) - 1;
  std::vector<long long> out;
  std::array<int, 5> cl{};
  for (long long c = 0; c < t.cell_count(); ++c) {
    if (cell_label_mask(t, labels, c, cl) == full) out.push_back(c);
  }
  return out;
}

PathResult find_panchromatic_path(const Triangulation& t, const Labeling& labels) {
  validate_labeling(t, labels);
  const int d = t.dim();
  const int door_mask = (1 << d) - 1;
  const int full_mask = (1 << (d + 1)) - 1;

  // Loaded triangulations get one prebuilt incidence map; the grid answers
  // neighbour queries arithmetically.
  FacetMap loaded_facets;
  if (!t.is_kuhn()) loaded_facets = build_facet_map(t);
  auto neighbor = [&](long long cell, int facet) -> Triangulation::FacetNeighbor {
    if (t.is_kuhn()) return t.neighbor_across(cell, facet);
    const auto& owners = loaded_facets.at(sorted_facet(t.cell_vertices(cell), facet));
    for (const auto& [c, f] : owners) {
      if (c != cell) return Triangulation::FacetNeighbor{c, f};
    }
    return Triangulation::FacetNeighbor{};
  };

  auto door_id = [d](long long cell, int facet) {
    return cell * (d + 1) + facet;
  };

  PathResult res;
  std::unordered_set<long long> used;
  std::array<int, 5> cl{};
  for (const auto& [start_cell, start_facet] : t.bottom_face_incidences()) {
    cell_label_mask(t, labels, start_cell, cl);
    int facet_mask = 0;
    for (int j = 0; j <= d; ++j) {
      if (j != start_facet) facet_mask |= 1 << cl[static_cast<std::size_t>(j)];
    }
    if (facet_mask != door_mask) continue;
    if (!used.insert(door_id(start_cell, start_facet)).second) continue;

    ++res.doors_tried;
    long long cur = start_cell;
    int entry = start_facet;
    std::vector<long long> trace;
    for (;;) {
      ++res.cells_visited;
      trace.push_back(cur);
      if (static_cast<long long>(trace.size()) > t.cell_count()) {
        throw InternalInvariantBroken("walk revisited a cell");
      }
      const int cur_mask = cell_label_mask(t, labels, cur, cl);
      if (cur_mask == full_mask) {
        res.cell = cur;
        res.trace = std::move(trace);
        return res;
      }
      int exit = -1;
      for (int j = 0; j <= d; ++j) {
        if (j != entry &&
            cl[static_cast<std::size_t>(j)] == cl[static_cast<std::size_t>(entry)]) {
          exit = j;
          break;
        }
      }
      if (exit < 0) throw InternalInvariantBroken("walk entered through a non-door");
      const auto n = neighbor(cur, exit);
      if (n.cell < 0) {
        used.insert(door_id(cur, exit));
        break;
      }
      cur = n.cell;
      entry = n.entry;
    }
  }
  throw InternalInvariantBroken("no walk reached a fully multicolored cell");
}

Labeling random_sperner_labeling(const Triangulation& t, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Labeling labels(static_cast<std::size_t>(t.vertex_count()), -1);
  const int d = t.dim();
  std::array<int, 5> carrier{};
  for_each_vertex(t, [&](long long v, const long long* c) {
    int count = 0;
    for (int i = 0; i <= d; ++i) {
      if (c[static_cast<std::size_t>(i)] > 0) carrier[static_cast<std::size_t>(count++)] = i;
    }
    labels[static_cast<std::size_t>(v)] =
        carrier[static_cast<std::size_t>(rand_below(gen, static_cast<std::uint64_t>(count)))];
  });
  return labels;
}

}  // namespace implab
