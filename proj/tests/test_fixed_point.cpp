#include "implab/fixed_point.hpp"

#include <doctest.h>

#include <cmath>

#include "implab/errors.hpp"

using namespace implab;

namespace {

double inf_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("the identity map labels every vertex with its first carrier entry") {
  for (int k : {1, 3, 8}) {
    auto t = Triangulation::kuhn(2, k);
    const auto labels = label_from_map(identity_map(2), t);
    validate_labeling(t, labels);
    for (long long v = 0; v < t.vertex_count(); ++v) {
      CHECK(labels[static_cast<std::size_t>(v)] == t.carrier(v).front());
    }
  }
}

TEST_CASE("rotation and barycenter maps label the corners by index") {
  auto t = Triangulation::kuhn(2, 4);
  for (const auto& f : {rotate_map(2), squash_map(2, 1.0)}) {
    const auto labels = label_from_map(f, t);
    validate_labeling(t, labels);
    for (long long v = 0; v < t.vertex_count(); ++v) {
      const auto carrier = t.carrier(v);
      if (carrier.size() == 1) {
        CHECK(labels[static_cast<std::size_t>(v)] == carrier.front());
      }
    }
  }
}

TEST_CASE("labelings stay admissible across maps and grid sizes") {
  const SimplexMap maps[] = {identity_map(2), rotate_map(2),
                             constant_map({0.2, 0.3, 0.5}), squash_map(2, 0.5)};
  for (const auto& f : maps) {
    for (int k : {1, 2, 5, 16}) {
      auto t = Triangulation::kuhn(2, k);
      validate_labeling(t, label_from_map(f, t));
    }
  }
  auto t3 = Triangulation::kuhn(3, 4);
  validate_labeling(t3, label_from_map(rotate_map(3), t3));
}

TEST_CASE("maps that leave the simplex are rejected") {
  SimplexMap bad;
  bad.dim = 2;
  bad.description = "escape";
  bad.evaluator = [](const std::vector<double>& x) {
    std::vector<double> out = x;
    out[0] += 0.5;
    return out;
  };
  auto t = Triangulation::kuhn(2, 2);
  CHECK_THROWS_AS(label_from_map(bad, t), MapRangeError);

  SimplexMap negative;
  negative.dim = 2;
  negative.description = "negative";
  negative.evaluator = [](const std::vector<double>&) {
    return std::vector<double>{1.5, -0.5, 0.0};
  };
  CHECK_THROWS_AS(label_from_map(negative, t), MapRangeError);

  CHECK_THROWS_AS(label_from_map(identity_map(3), t), InputError);
}

TEST_CASE("named maps parse and unknown names do not") {
  CHECK(parse_named_map("identity", 2).description == "identity");
  CHECK(parse_named_map("rotate", 3).dim == 3);
  const auto c = parse_named_map("const:0.2,0.3,0.5", 2);
  CHECK(c({1.0, 0.0, 0.0}) == std::vector<double>{0.2, 0.3, 0.5});
  CHECK(parse_named_map("squash:0.25", 2).dim == 2);

  CHECK_THROWS_AS(parse_named_map("spiral", 2), InputError);
  CHECK_THROWS_AS(parse_named_map("const:0.5,0.5", 2), InputError);
  CHECK_THROWS_AS(parse_named_map("const:0.9,0.9,0.9", 2), InputError);
  CHECK_THROWS_AS(parse_named_map("squash:2.0", 2), InputError);
  CHECK_THROWS_AS(parse_named_map("squash:abc", 2), InputError);
}

TEST_CASE("the identity map is solved exactly on the first grid") {
  const auto res = approx_fixed_point(identity_map(2), 1e-6, 2, 64);
  CHECK(res.converged);
  CHECK(res.subdivision == 2);
  CHECK(res.residual == 0.0);
  CHECK(res.stages.size() == 1);
}

TEST_CASE("the rotation map converges to the barycenter") {
  const auto res = approx_fixed_point(rotate_map(2), 1e-3, 1, 4096);
  CHECK(res.converged);
  CHECK(res.residual <= 1e-3);
  CHECK(inf_dist(res.point, {1.0 / 3, 1.0 / 3, 1.0 / 3}) <= 2e-3);

  // The recorded residual matches a fresh evaluation.
  const auto fx = rotate_map(2)(res.point);
  CHECK(std::abs(inf_dist(fx, res.point) - res.residual) <= 1e-12);
}

TEST_CASE("the constant map converges to its target") {
  const auto res =
      approx_fixed_point(constant_map({0.2, 0.3, 0.5}), 1e-2, 1, 4096);
  CHECK(res.converged);
  CHECK(res.residual <= 1e-2);
  CHECK(inf_dist(res.point, {0.2, 0.3, 0.5}) <= 2e-2);
}

TEST_CASE("the best residual never worsens as the grid refines") {
  // No power-of-two grid puts a cell barycenter exactly on the target, so
  // the ladder runs to the cap.
  const auto res = approx_fixed_point(constant_map({0.2, 0.3, 0.5}), 1e-9, 1, 256);
  CHECK_FALSE(res.converged);
  CHECK(res.stages.size() == 9);
  double best = res.stages.front().residual;
  for (const auto& s : res.stages) {
    best = std::min(best, s.residual);
    CHECK(best <= res.stages.front().residual);
  }
  CHECK(res.residual == best);
  CHECK(res.subdivision <= 256);
}

TEST_CASE("bad search bounds are rejected") {
  CHECK_THROWS_AS(approx_fixed_point(identity_map(2), 0.0, 1, 16), InputError);
  CHECK_THROWS_AS(approx_fixed_point(identity_map(2), 1e-3, 0, 16), InputError);
  CHECK_THROWS_AS(approx_fixed_point(identity_map(2), 1e-3, 32, 16), InputError);
  CHECK_THROWS_AS(approx_fixed_point(identity_map(2), 1e-3, 1, 5000), InputError);
}
