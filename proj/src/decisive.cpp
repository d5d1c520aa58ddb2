#include "implab/decisive.hpp"

#include <algorithm>

#include "implab/errors.hpp"

namespace implab {

namespace {

void require_input(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

std::string profile_text(const Profile& p) {
  std::string out = "(";
  for (int v = 0; v < p.voter_count(); ++v) {
    if (v) out += ",";
    out += "(";
    for (int i = 0; i < p.alternative_count(); ++i) {
      if (i) out += ",";
      out += std::to_string(p.ranking_of(v).at(i));
    }
    out += ")";
  }
  out += ")";
  return out;
}

std::vector<Ranking> rankings_satisfying(
    int m, const std::vector<std::pair<int, int>>& above) {
  std::vector<Ranking> out;
  for (const Ranking& r : enumerate_rankings(m)) {
    bool ok = true;
    for (auto [x, y] : above) {
      if (!r.prefers(x, y)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(r);
  }
  return out;
}

struct FamilyScan {
  long long scanned = 0;
  std::optional<Profile> failure;
  std::optional<Ranking> failure_social;
};

// Walks the cartesian product of per-voter ranking lists in lexicographic
// order and checks that the social ranking puts a above b throughout.
FamilyScan scan_family(const ScfRule& rule,
                       const std::vector<std::vector<Ranking>>& allowed, int a,
                       int b) {
  FamilyScan result;
  const int n = rule.n();
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  std::vector<Ranking> current;
  current.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) current.push_back(allowed[static_cast<std::size_t>(v)].front());
  for (;;) {
    Profile p(current);
    ++result.scanned;
    Ranking social = rule.evaluate(p);
    if (!social.prefers(a, b)) {
      result.failure = p;
      result.failure_social = social;
      return result;
    }
    // Odometer, voter 0 most significant.
    int v = n - 1;
    for (; v >= 0; --v) {
      auto& idx = pick[static_cast<std::size_t>(v)];
      if (++idx < allowed[static_cast<std::size_t>(v)].size()) {
        current[static_cast<std::size_t>(v)] = allowed[static_cast<std::size_t>(v)][idx];
        break;
      }
      idx = 0;
      current[static_cast<std::size_t>(v)] = allowed[static_cast<std::size_t>(v)].front();
    }
    if (v < 0) return result;
  }
}

std::vector<std::vector<Ranking>> allowed_for_pair(const ScfRule& rule,
                                                   const Coalition& d, int a,
                                                   int b) {
  const auto constrained = rankings_satisfying(rule.m(), {{a, b}});
  const auto all = enumerate_rankings(rule.m());
  std::vector<std::vector<Ranking>> allowed(static_cast<std::size_t>(rule.n()), all);
  for (int v : d.members) allowed[static_cast<std::size_t>(v)] = constrained;
  return allowed;
}

bool coalition_all_pairs_decisive(const ScfRule& rule, const Coalition& d) {
  for (int a = 0; a < rule.m(); ++a) {
    for (int b = 0; b < rule.m(); ++b) {
      if (a == b) continue;
      if (!is_pair_decisive(rule, d, a, b).decisive) return false;
    }
  }
  return true;
}

}  // namespace

Coalition Coalition::of(std::vector<int> members, int n) {
  require_input(!members.empty(), "coalition must be non-empty");
  std::sort(members.begin(), members.end());
  require_input(std::adjacent_find(members.begin(), members.end()) == members.end(),
                "coalition repeats a voter");
  require_input(members.front() >= 0 && members.back() < n,
                "coalition member out of range");
  return Coalition{std::move(members)};
}

Coalition Coalition::everyone(int n) {
  require_input(n >= 1, "society size must be positive");
  std::vector<int> members(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) members[static_cast<std::size_t>(i)] = i;
  return Coalition{std::move(members)};
}

int Coalition::min_member() const {
  if (members.empty()) throw InternalInvariantBroken("empty coalition");
  return members.front();
}

std::string Coalition::describe() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  out += "}";
  return out;
}

PairDecisiveResult is_pair_decisive(const ScfRule& rule, const Coalition& d, int a,
                                    int b) {
  require_input(rule.n() <= 4 && rule.m() <= 4,
                "decisiveness scans support n <= 4 and m <= 4");
  require_input(a != b && a >= 0 && b >= 0 && a < rule.m() && b < rule.m(),
                "need two distinct alternatives in range");
  require_input(!d.members.empty() && d.members.back() < rule.n(),
                "coalition member out of range");
  FamilyScan scan = scan_family(rule, allowed_for_pair(rule, d, a, b), a, b);
  PairDecisiveResult result;
  result.decisive = !scan.failure.has_value();
  result.profiles_checked = scan.scanned;
  result.counterexample = std::move(scan.failure);
  result.social = std::move(scan.failure_social);
  return result;
}

DecisiveCertificate expand_decisive(const ScfRule& rule, const Coalition& d,
                                    std::pair<int, int> seed) {
  auto seeded = is_pair_decisive(rule, d, seed.first, seed.second);
  if (!seeded.decisive) {
    throw PreconditionFailedError("seed pair (" + std::to_string(seed.first) + "," +
                                  std::to_string(seed.second) +
                                  ") is not decisive for " + d.describe() +
                                  "; counterexample " +
                                  profile_text(*seeded.counterexample));
  }
  DecisiveCertificate cert;
  cert.coalition = d;
  for (int a = 0; a < rule.m(); ++a) {
    for (int b = 0; b < rule.m(); ++b) {
      if (a == b) continue;
      auto res = is_pair_decisive(rule, d, a, b);
      if (!res.decisive) {
        throw AxiomViolationError(
            "coalition " + d.describe() + " decides (" + std::to_string(seed.first) +
                "," + std::to_string(seed.second) + ") but not (" + std::to_string(a) +
                "," + std::to_string(b) + "); counterexample " +
                profile_text(*res.counterexample),
            a, b);
      }
      cert.verified_pairs.push_back(PairCheck{a, b, res.profiles_checked});
    }
  }
  return cert;
}

ContractionResult contract_decisive(const ScfRule& rule, const Coalition& d) {
  require_input(rule.m() >= 3, "contraction needs at least three alternatives");
  require_input(d.size() >= 2, "contraction needs at least two members");
  if (!coalition_all_pairs_decisive(rule, d)) {
    throw PreconditionFailedError("coalition " + d.describe() + " is not decisive");
  }

  ContractionStep step;
  step.parent = d;
  step.split_off = Coalition{{d.min_member()}};
  step.rest = Coalition{{std::vector<int>(d.members.begin() + 1, d.members.end())}};

  // Constrained family over pivotal alternatives (0, 1, 2): the split-off
  // voter puts 0 above both 1 and 2; the rest put 0 and 2 above 1; everyone
  // else is free. All completions are scanned.
  const auto all = enumerate_rankings(rule.m());
  std::vector<std::vector<Ranking>> allowed(static_cast<std::size_t>(rule.n()), all);
  for (int v : step.split_off.members) {
    allowed[static_cast<std::size_t>(v)] = rankings_satisfying(rule.m(), {{0, 1}, {0, 2}});
  }
  for (int v : step.rest.members) {
    allowed[static_cast<std::size_t>(v)] = rankings_satisfying(rule.m(), {{0, 1}, {2, 1}});
  }

  FamilyScan first = scan_family(rule, allowed, 0, 2);
  step.family_size = first.scanned;
  if (!first.failure.has_value()) {
    step.survivor = step.split_off;
    step.pivot_a = 0;
    step.pivot_b = 2;
    return ContractionResult{step.survivor, step};
  }
  FamilyScan second = scan_family(rule, allowed, 2, 1);
  step.family_size += second.scanned;
  if (!second.failure.has_value()) {
    step.survivor = step.rest;
    step.pivot_a = 2;
    step.pivot_b = 1;
    return ContractionResult{step.survivor, step};
  }
  throw AxiomViolationError("neither part of " + d.describe() +
                                " decides its pivotal pair; counterexample " +
                                profile_text(*second.failure),
                            2, 1);
}

DictatorResult find_dictator(const ScfRule& rule) {
  require_input(rule.n() <= 4, "dictator search supports n <= 4");
  require_input(rule.m() >= 3 && rule.m() <= 4, "dictator search needs 3 <= m <= 4");

  auto pareto = check_pareto(rule);
  if (!pareto.holds) {
    const auto& w = pareto.witnesses.front();
    throw PreconditionFailedError(
        "rule violates unanimity: all voters rank " + std::to_string(w.a) + " above " +
        std::to_string(w.b) + " in " + profile_text(w.profiles.front()) +
        " yet the social order reverses it");
  }
  auto iia = check_iia_pairwise(rule);
  if (!iia.holds) {
    const auto& w = iia.witnesses.front();
    throw PreconditionFailedError(
        "rule violates pairwise independence on (" + std::to_string(w.a) + "," +
        std::to_string(w.b) + "): profiles " + profile_text(w.profiles[0]) + " and " +
        profile_text(w.profiles[1]) + " agree voter-wise yet flip the social order");
  }

  Coalition d = Coalition::everyone(rule.n());
  // The whole society decides every pair by unanimity alone.
  DecisiveCertificate cert = expand_decisive(rule, d, {0, 1});
  while (d.size() > 1) {
    ContractionResult res = contract_decisive(rule, d);
    DecisiveCertificate next =
        expand_decisive(rule, res.survivor, {res.step.pivot_a, res.step.pivot_b});
    next.chain = std::move(cert.chain);
    next.chain.push_back(res.step);
    cert = std::move(next);
    d = res.survivor;
  }

  const int candidate = d.min_member();
  auto confirmed = find_dictatorship(rule);
  if (!confirmed.has_value() || *confirmed != candidate) {
    throw InternalInvariantBroken(
        "contraction chain reached voter " + std::to_string(candidate) +
        " but the full-profile check does not confirm a dictatorship");
  }
  return DictatorResult{candidate, std::move(cert)};
}

bool verify_certificate(const ScfRule& rule, const DecisiveCertificate& cert,
                        std::vector<std::string>* problems) {
  auto note = [&](const std::string& msg) {
    if (problems != nullptr) problems->push_back(msg);
  };
  bool ok = true;

  Coalition expected_parent = Coalition::everyone(rule.n());
  for (std::size_t i = 0; i < cert.chain.size(); ++i) {
    const ContractionStep& step = cert.chain[i];
    if (!(step.parent == expected_parent)) {
      ok = false;
      note("step " + std::to_string(i) + " does not continue the chain");
    }
    if (step.split_off.members != std::vector<int>{step.parent.min_member()}) {
      ok = false;
      note("step " + std::to_string(i) + " does not split off the minimum member");
    }
    std::vector<int> rest(step.parent.members.begin() + 1, step.parent.members.end());
    if (step.rest.members != rest) {
      ok = false;
      note("step " + std::to_string(i) + " partition is wrong");
    }
    try {
      ContractionResult replay = contract_decisive(rule, step.parent);
      if (!(replay.survivor == step.survivor) || replay.step.pivot_a != step.pivot_a ||
          replay.step.pivot_b != step.pivot_b ||
          replay.step.family_size != step.family_size) {
        ok = false;
        note("step " + std::to_string(i) + " does not replay");
      }
    } catch (const Error& e) {
      ok = false;
      note("step " + std::to_string(i) + " does not replay: " + e.what());
    }
    expected_parent = step.survivor;
  }
  if (!cert.chain.empty() && !(cert.chain.back().survivor == cert.coalition)) {
    ok = false;
    note("chain does not end at the certified coalition");
  }

  const int m = rule.m();
  if (static_cast<int>(cert.verified_pairs.size()) != m * (m - 1)) {
    ok = false;
    note("pair list does not cover every ordered pair");
  }
  for (const PairCheck& pc : cert.verified_pairs) {
    try {
      auto res = is_pair_decisive(rule, cert.coalition, pc.a, pc.b);
      if (!res.decisive || res.profiles_checked != pc.profiles_checked) {
        ok = false;
        note("pair (" + std::to_string(pc.a) + "," + std::to_string(pc.b) +
             ") does not replay");
      }
    } catch (const Error& e) {
      ok = false;
      note("pair (" + std::to_string(pc.a) + "," + std::to_string(pc.b) +
           ") does not replay: " + e.what());
    }
  }
  return ok;
}

}  // namespace implab
