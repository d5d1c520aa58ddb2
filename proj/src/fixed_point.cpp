#include "implab/fixed_point.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "implab/errors.hpp"

namespace implab {

namespace {

constexpr double kMembershipTol = 1e-9;
constexpr double kLabelTol = 1e-12;

void require_input(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InputError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw InputError("not a number: '" + text + "'");
  return value;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item));
  require_input(!out.empty(), "expected a comma-separated list of numbers");
  return out;
}

}  // namespace

std::vector<double> SimplexMap::operator()(const std::vector<double>& x) const {
  std::vector<double> fx = evaluator(x);
  const std::size_t want = static_cast<std::size_t>(dim) + 1;
  if (fx.size() != want) {
    throw MapRangeError(description + " returned " + std::to_string(fx.size()) +
                        " coordinates, expected " + std::to_string(want));
  }
  double sum = 0.0;
  for (double c : fx) {
    if (c < -kMembershipTol) {
      throw MapRangeError(description + " left the simplex: coordinate " +
                          std::to_string(c));
    }
    sum += c;
  }
  if (std::abs(sum - 1.0) > kMembershipTol) {
    throw MapRangeError(description + " left the simplex: coordinates sum to " +
                        std::to_string(sum));
  }
  return fx;
}

SimplexMap identity_map(int dim) {
  require_input(dim >= 1, "dimension must be positive");
  SimplexMap f;
  f.dim = dim;
  f.evaluator = [](const std::vector<double>& x) { return x; };
  f.description = "identity";
  return f;
}

SimplexMap rotate_map(int dim) {
  require_input(dim >= 1, "dimension must be positive");
  SimplexMap f;
  f.dim = dim;
  f.evaluator = [](const std::vector<double>& x) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[(i + 1) % x.size()];
    return out;
  };
  f.description = "rotate";
  return f;
}

SimplexMap constant_map(std::vector<double> target) {
  require_input(target.size() >= 2, "target needs at least two coordinates");
  double sum = 0.0;
  for (double c : target) {
    require_input(c >= 0.0, "target coordinates must be non-negative");
    sum += c;
  }
  require_input(std::abs(sum - 1.0) <= kMembershipTol,
                "target coordinates must sum to 1");
  SimplexMap f;
  f.dim = static_cast<int>(target.size()) - 1;
  std::string desc = "const:";
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (i) desc += ',';
    desc += std::to_string(target[i]);
  }
  f.evaluator = [target = std::move(target)](const std::vector<double>&) {
    return target;
  };
  f.description = std::move(desc);
  return f;
}

SimplexMap squash_map(int dim, double t) {
  require_input(dim >= 1, "dimension must be positive");
  require_input(t >= 0.0 && t <= 1.0, "squash factor must lie in [0,1]");
  SimplexMap f;
  f.dim = dim;
  const double center = 1.0 / (dim + 1);
  f.evaluator = [t, center](const std::vector<double>& x) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[i] = (1.0 - t) * x[i] + t * center;
    }
    return out;
  };
  f.description = "squash:" + std::to_string(t);
  return f;
}

SimplexMap parse_named_map(const std::string& name, int dim) {
  require_input(dim >= 1, "dimension must be positive");
  if (name == "identity") return identity_map(dim);
  if (name == "rotate") return rotate_map(dim);
  if (name.rfind("const:", 0) == 0) {
    SimplexMap f = constant_map(parse_double_list(name.substr(6)));
    require_input(f.dim == dim, "constant target has dimension " +
                                    std::to_string(f.dim) + ", expected " +
                                    std::to_string(dim));
    return f;
  }
  if (name.rfind("squash:", 0) == 0) {
    return squash_map(dim, parse_double(name.substr(7)));
  }
  throw InputError("unknown map '" + name +
                   "' (try identity, rotate, const:c0,c1,..., squash:t)");
}

Labeling label_from_map(const SimplexMap& f, const Triangulation& t) {
  require_input(f.dim == t.dim(), "map dimension " + std::to_string(f.dim) +
                                      " does not match the grid's " +
                                      std::to_string(t.dim()));
  Labeling out(static_cast<std::size_t>(t.vertex_count()), -1);
  for (long long v = 0; v < t.vertex_count(); ++v) {
    const std::vector<double> p = t.vertex_point(v);
    const std::vector<double> fp = f(p);
    for (int i : t.carrier(v)) {
      if (fp[static_cast<std::size_t>(i)] <= p[static_cast<std::size_t>(i)] + kLabelTol) {
        out[static_cast<std::size_t>(v)] = i;
        break;
      }
    }
    if (out[static_cast<std::size_t>(v)] < 0) {
      throw InternalInvariantBroken(
          "no carrier coordinate shrank at vertex " + std::to_string(v) +
          "; the map strays too far from the simplex");
    }
  }
  return out;
}

FixedPointResult approx_fixed_point(const SimplexMap& f, double eps, int k0,
                                    int max_k) {
  require_input(eps > 0.0, "eps must be positive");
  require_input(k0 >= 1, "initial subdivision must be positive");
  require_input(k0 <= max_k, "initial subdivision exceeds the cap");
  require_input(max_k <= Triangulation::max_kuhn_resolution(f.dim),
                "subdivision cap " + std::to_string(max_k) +
                    " exceeds the grid limit for dimension " +
                    std::to_string(f.dim));

  FixedPointResult best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int k = k0; k <= max_k; k *= 2) {
    const Triangulation t = Triangulation::kuhn(f.dim, k);
    const Labeling labels = label_from_map(f, t);
    const PathResult path = find_panchromatic_path(t, labels);
    const std::vector<double> x = t.cell_barycenter(path.cell);
    const std::vector<double> fx = f(x);
    double residual = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      residual = std::max(residual, std::abs(fx[i] - x[i]));
    }
    best.stages.push_back({k, residual});
    if (residual < best.residual) {
      best.point = x;
      best.residual = residual;
      best.subdivision = k;
      best.cell = path.cell;
    }
    if (best.residual <= eps) {
      best.converged = true;
      break;
    }
  }
  return best;
}

}  // namespace implab
