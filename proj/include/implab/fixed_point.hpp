#pragma once

#include <functional>
#include <string>
#include <vector>

#include "implab/sperner.hpp"

namespace implab {

// Continuous self-map of the d-simplex. The evaluator must return a point
// of the simplex (within tolerance) for every input point and must be
// deterministic; everything downstream assumes both.
struct SimplexMap {
  int dim = 0;
  std::function<std::vector<double>(const std::vector<double>&)> evaluator;
  std::string description;

  std::vector<double> operator()(const std::vector<double>& x) const;
};

SimplexMap identity_map(int dim);
SimplexMap rotate_map(int dim);  // cyclic coordinate shift
SimplexMap constant_map(std::vector<double> target);
SimplexMap squash_map(int dim, double t);  // pull toward the barycenter

// "identity", "rotate", "const:c0,c1,...", "squash:t". The const form
// fixes its own dimension and must agree with dim.
SimplexMap parse_named_map(const std::string& name, int dim);

// Colors every vertex with the first carrier coordinate the map does not
// increase. The result is always admissible.
Labeling label_from_map(const SimplexMap& f, const Triangulation& t);

struct FixedPointResult {
  std::vector<double> point;
  double residual = 0.0;  // max-coordinate distance |f(x) - x|
  int subdivision = 0;    // grid resolution the point came from
  long long cell = -1;    // panchromatic cell it was read from
  bool converged = false;

  struct Stage {
    int subdivision = 0;
    double residual = 0.0;
  };
  std::vector<Stage> stages;  // one entry per grid tried, in order
};

// Refines the grid (k0, 2*k0, 4*k0, ... up to max_k), reads off the
// barycenter of a panchromatic cell each round, and keeps the best point
// seen. Stops early once the residual drops to eps.
FixedPointResult approx_fixed_point(const SimplexMap& f, double eps, int k0,
                                    int max_k);

}  // namespace implab
