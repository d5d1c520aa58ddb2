#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace implab {

// Barycentric coordinates with a shared integer denominator.
struct BaryPoint {
  std::vector<long long> coords;  // dim+1 entries, nonnegative, sum to denom
  long long denom = 1;

  std::vector<double> to_point() const;
};

// A triangulated standard simplex. Two flavours share one interface: the
// structured grid built by kuhn(), whose vertices and cells are recovered
// arithmetically from their indices, and explicit data passed to
// from_data(). Cell vertex lists are ordered; facet f of a cell is the cell
// with vertex f removed.
class Triangulation {
 public:
  static Triangulation kuhn(int dim, int resolution);
  // Largest resolution kuhn() accepts for this dimension.
  static int max_kuhn_resolution(int dim);
  static Triangulation from_data(int dim, long long denom,
                                 std::vector<std::vector<long long>> vertex_coords,
                                 std::vector<std::vector<int>> cells);

  int dim() const { return dim_; }
  int resolution() const { return res_; }  // grid steps per edge, 0 if loaded
  long long denom() const { return denom_; }
  bool is_kuhn() const { return kuhn_; }
  long long vertex_count() const { return vcount_; }
  long long cell_count() const { return ccount_; }

  BaryPoint vertex(long long v) const;
  std::vector<long long> vertex_coords(long long v) const;
  std::vector<int> carrier(long long v) const;  // coordinates with mass
  std::vector<double> vertex_point(long long v) const;
  std::vector<long long> cell_vertices(long long c) const;
  std::vector<double> cell_barycenter(long long c) const;

  struct FacetNeighbor {
    long long cell = -1;  // -1: the facet lies on the boundary
    int entry = -1;       // facet of the neighbour that is the shared one
  };
  // Grid triangulations answer this arithmetically; loaded ones scan, so
  // prefer batch queries there.
  FacetNeighbor neighbor_across(long long cell, int facet) const;

  // Cells with a facet on the bottom face (last coordinate zero), as
  // (cell, facet) pairs ascending.
  std::vector<std::pair<long long, int>> bottom_face_incidences() const;

 private:
  Triangulation() = default;

  long long vertex_rank(const long long* c) const;
  void vertex_unrank(long long rank, long long* c) const;
  void decode_cell(long long idx, std::array<std::array<long long, 5>, 5>& verts,
                   std::array<int, 4>& perm) const;
  long long cell_index_of(const long long* v0, const std::array<int, 4>& perm) const;
  long long binom(long long n, int j) const;

  int dim_ = 0;
  int res_ = 0;
  long long denom_ = 1;
  bool kuhn_ = false;
  long long vcount_ = 0;
  long long ccount_ = 0;
  std::vector<long long> coords_;        // loaded: dim+1 per vertex
  std::vector<int> cells_;               // loaded: dim+1 per cell
  std::vector<std::uint64_t> codes_;     // kuhn: v0 rank * dim! + perm rank
  std::vector<std::array<long long, 5>> binom_;  // kuhn: C(n, j) for j <= 4
};

// Calls fn(vertex, coords) for every vertex in index order; coords points at
// dim + 1 entries. Cheaper than per-vertex lookups on grid triangulations.
void for_each_vertex(const Triangulation& t,
                     const std::function<void(long long, const long long*)>& fn);

// One color per vertex, each in 0..dim.
using Labeling = std::vector<int>;

// Facet-level consistency: every facet is shared by at most two cells, and a
// facet owned by one cell only must lie on a face of the simplex.
void validate_triangulation(const Triangulation& t);

// Admissibility: each vertex colored from its own carrier.
void validate_labeling(const Triangulation& t, const Labeling& labels);

// All fully multicolored cells, ascending. Scans everything.
std::vector<long long> find_panchromatic_all(const Triangulation& t,
                                             const Labeling& labels);

struct PathResult {
  long long cell = -1;
  std::vector<long long> trace;   // cells of the successful walk, in order
  long long cells_visited = 0;    // across all attempted walks
  long long doors_tried = 0;      // boundary doors consumed
};

// Walks door to door from the bottom face instead of scanning. A door is a
// facet showing every color except the last; an odd number of them sit on
// the bottom face, and following them either loops back to the boundary or
// ends in a multicolored cell, so some walk must succeed.
PathResult find_panchromatic_path(const Triangulation& t, const Labeling& labels);

// Uniform admissible coloring, deterministic per seed.
Labeling random_sperner_labeling(const Triangulation& t, std::uint64_t seed);

}  // namespace implab
