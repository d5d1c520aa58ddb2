// Acceptance suite: eight self-contained checks, one verdict line each.
// A check fails on a wrong result, an exception, or a blown time budget.
// Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "implab/decisive.hpp"
#include "implab/fixed_point.hpp"
#include "implab/games.hpp"
#include "implab/json_io.hpp"
#include "implab/scf.hpp"
#include "implab/sperner.hpp"

using namespace implab;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(IMPLAB_FIXTURE_DIR) + "/" + name;
}

double inf_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

// Each check returns an empty string on success, a reason otherwise.

std::string check_figure_fixture() {
  const auto data =
      triangulation_from_json(read_json_file(fixture_path("paper_fig_2d.json")));
  const Triangulation& t = data.triangulation;
  if (t.vertex_count() != 9 || t.cell_count() != 8) {
    return "expected 9 vertices and 8 cells, got " +
           std::to_string(t.vertex_count()) + " and " +
           std::to_string(t.cell_count());
  }
  validate_triangulation(t);
  if (!data.labels) return "fixture has no labels";
  validate_labeling(t, *data.labels);
  const auto pan = find_panchromatic_all(t, *data.labels);
  if (pan.size() != 3) {
    return "expected 3 panchromatic cells, got " + std::to_string(pan.size());
  }
  const auto path = find_panchromatic_path(t, *data.labels);
  if (!std::binary_search(pan.begin(), pan.end(), path.cell)) {
    return "path cell " + std::to_string(path.cell) + " not among the 3";
  }
  return "";
}

std::string check_parity_and_oracle() {
  constexpr int kSeedsPerGrid = 30;  // 7 grids x 30 = 210 labelings
  const std::vector<std::pair<int, int>> grids = {
      {2, 2}, {2, 4}, {2, 6}, {2, 8}, {3, 2}, {3, 3}, {3, 4}};
  long long runs = 0;
  for (const auto& [dim, k] : grids) {
    const Triangulation t = Triangulation::kuhn(dim, k);
    for (int seed = 0; seed < kSeedsPerGrid; ++seed) {
      const Labeling labels =
          random_sperner_labeling(t, static_cast<std::uint64_t>(seed));
      const auto pan = find_panchromatic_all(t, labels);
      if (pan.size() % 2 == 0) {
        return "even count " + std::to_string(pan.size()) + " on kuhn(" +
               std::to_string(dim) + "," + std::to_string(k) + ") seed " +
               std::to_string(seed);
      }
      const auto path = find_panchromatic_path(t, labels);
      if (!std::binary_search(pan.begin(), pan.end(), path.cell)) {
        return "path disagrees with brute force on kuhn(" +
               std::to_string(dim) + "," + std::to_string(k) + ") seed " +
               std::to_string(seed);
      }
      ++runs;
    }
  }
  if (runs < 200) return "only " + std::to_string(runs) + " labelings tried";
  return "";
}

std::string check_constructive_dictators() {
  for (int n : {2, 3}) {
    for (int i = 0; i < n; ++i) {
      const ScfRule rule = ScfRule::dictator(i, n, 3);
      if (!check_pareto(rule).holds) {
        return rule.describe() + " failed the unanimity scan";
      }
      if (!check_iia_pairwise(rule).holds) {
        return rule.describe() + " failed the independence scan";
      }
      const DictatorResult res = find_dictator(rule);
      if (res.dictator != i) {
        return rule.describe() + " found voter " + std::to_string(res.dictator);
      }
      if (static_cast<int>(res.certificate.chain.size()) > n - 1) {
        return rule.describe() + " chain has " +
               std::to_string(res.certificate.chain.size()) + " steps";
      }
      std::vector<std::string> problems;
      if (!verify_certificate(rule, res.certificate, &problems)) {
        return rule.describe() + " certificate does not replay: " +
               (problems.empty() ? "?" : problems.front());
      }
    }
  }
  return "";
}

std::string check_scoring_rules_fall() {
  using Factory = ScfRule (*)(int, int);
  const Factory factories[] = {&ScfRule::borda_lex, &ScfRule::plurality_lex,
                               &ScfRule::copeland_lex};
  for (Factory make : factories) {
    for (int n : {2, 3}) {
      const ScfRule rule = make(n, 3);
      const AxiomReport pareto = check_pareto(rule);
      const AxiomReport iia = check_iia_pairwise(rule);
      if (pareto.holds && iia.holds) {
        return rule.describe() + " (n=" + std::to_string(n) +
               ") passed both scans";
      }
      const AxiomReport& broken = pareto.holds ? iia : pareto;
      if (broken.witnesses.empty()) {
        return rule.describe() + " violated without a witness";
      }
      for (const AxiomWitness& w : broken.witnesses) {
        if (!replay_witness(rule, broken.axiom, w)) {
          return rule.describe() + " witness does not replay";
        }
      }
    }
  }
  return "";
}

std::string check_no_draws() {
  const Triangulation t = Triangulation::kuhn(2, 4);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GameResult res = play_sperner_game(t, Strategy::UniformRandom,
                                             Strategy::UniformRandom, seed);
    if (!res.loser) return "draw at seed " + std::to_string(seed);
    const auto& labels = res.final_state.labels;
    for (long long v = 0; v < t.vertex_count(); ++v) {
      const int l = labels[static_cast<std::size_t>(v)];
      if (l < 0) continue;
      const auto carrier = t.carrier(v);
      if (std::find(carrier.begin(), carrier.end(), l) == carrier.end()) {
        return "inadmissible color at vertex " + std::to_string(v) +
               ", seed " + std::to_string(seed);
      }
    }
    const auto cell = t.cell_vertices(res.completing_cell);
    int mask = 0;
    for (long long v : cell) mask |= 1 << labels[static_cast<std::size_t>(v)];
    if (mask != (1 << (t.dim() + 1)) - 1) {
      return "losing cell not fully multicolored at seed " +
             std::to_string(seed);
    }
  }
  return "";
}

std::string check_transcript_detection() {
  const Triangulation t = Triangulation::kuhn(2, 2);
  std::vector<Profile> profiles;
  for (const Profile& p : enumerate_profiles(3, 3)) profiles.push_back(p);
  if (profiles.size() != 216) return "expected 216 profiles";
  for (int i = 0; i < 3; ++i) {
    const ScfRule family = ScfRule::dictator(i, 3, 3);
    for (int j = 0; j < 3; ++j) {
      const auto verdict =
          dictator_from_transcript(play_social_choice_game(family, j, profiles, t));
      if (j == i && verdict != i) {
        return "voter " + std::to_string(j) + " vs dictator(" +
               std::to_string(i) + "): dictator missed";
      }
      if (j != i && verdict.has_value()) {
        return "voter " + std::to_string(j) + " vs dictator(" +
               std::to_string(i) + "): false positive";
      }
    }
  }
  return "";
}

std::string check_dictator_coloring() {
  const Triangulation t = Triangulation::kuhn(2, 4);
  const ScfRule rule = ScfRule::dictator(0, 2, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DictatorColoring res =
        panchromatic_from_dictator(rule, t, Strategy::UniformRandom, seed);
    if (res.dictator != 0) return "wrong dictator at seed " + std::to_string(seed);
    validate_labeling(t, res.labels);
    const auto pan = find_panchromatic_all(t, res.labels);
    if (!std::binary_search(pan.begin(), pan.end(), res.cell)) {
      return "cell " + std::to_string(res.cell) +
             " not confirmed by brute force at seed " + std::to_string(seed);
    }
  }
  return "";
}

std::string check_rotation_fixed_point() {
  constexpr double kEps = 1e-3;
  constexpr double kPointTol = 2e-3;
  const FixedPointResult res = approx_fixed_point(rotate_map(2), kEps, 1, 4096);
  if (!res.converged) return "did not converge";
  if (res.residual > kEps) return "residual " + std::to_string(res.residual);
  const double d = inf_dist(res.point, {1.0 / 3, 1.0 / 3, 1.0 / 3});
  if (d > kPointTol) return "point misses the center by " + std::to_string(d);
  return "";
}

std::string check_constant_fixed_point() {
  constexpr double kEps = 1e-2;
  constexpr double kPointTol = 2e-2;
  const FixedPointResult res =
      approx_fixed_point(constant_map({0.2, 0.3, 0.5}), kEps, 1, 4096);
  if (!res.converged) return "did not converge";
  if (res.residual > kEps) return "residual " + std::to_string(res.residual);
  const double d = inf_dist(res.point, {0.2, 0.3, 0.5});
  if (d > kPointTol) return "point misses the target by " + std::to_string(d);
  return "";
}

struct Criterion {
  const char* name;
  double budget_s;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1. figure fixture, 3 rainbow cells", 0.1, check_figure_fixture},
      {"2. odd counts and path oracle, 210 boards", 10.0, check_parity_and_oracle},
      {"3. constructive dictator search", 5.0, check_constructive_dictators},
      {"4. scoring rules falsified with replays", 30.0, check_scoring_rules_fall},
      {"5. no draws in 100 random games", 5.0, check_no_draws},
      {"6. transcripts expose the dictator", 5.0, check_transcript_detection},
      {"7. dictator coloring reaches a rainbow cell", 2.0, check_dictator_coloring},
      {"8a. rotation map fixed point", 5.0, check_rotation_fixed_point},
      {"8b. constant map fixed point", 5.0, check_constant_fixed_point},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.run();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (why.empty() && dt > c.budget_s) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "took %.2f s, budget %.1f s", dt, c.budget_s);
      why = buf;
    }
    if (why.empty()) {
      std::printf("PASS  %-45s (%.3f s)\n", c.name, dt);
    } else {
      std::printf("FAIL  %-45s (%.3f s)  %s\n", c.name, dt, why.c_str());
      ++failures;
    }
  }
  if (failures == 0) {
    std::printf("all %zu checks passed\n", criteria.size());
  } else {
    std::printf("%d of %zu checks failed\n", failures, criteria.size());
  }
  return failures;
}
