#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "implab/scf.hpp"

namespace implab {

// A set of voters, kept sorted and duplicate-free.
struct Coalition {
  std::vector<int> members;

  static Coalition of(std::vector<int> members, int n);
  static Coalition everyone(int n);
  int size() const { return static_cast<int>(members.size()); }
  int min_member() const;
  bool operator==(const Coalition& other) const = default;
  std::string describe() const;  // "{0,2}"
};

// Outcome of one exhaustive pair-decisiveness scan.
struct PairDecisiveResult {
  bool decisive = false;
  long long profiles_checked = 0;
  std::optional<Profile> counterexample;
  std::optional<Ranking> social;
};

// Every profile where all of D rank a above b must come out socially a above
// b. Others are unconstrained.
PairDecisiveResult is_pair_decisive(const ScfRule& rule, const Coalition& d, int a, int b);

struct PairCheck {
  int a = 0;
  int b = 0;
  long long profiles_checked = 0;
};

// One application of the coalition-splitting argument. The parent splits into
// its minimum member and the rest; exactly one side survives, witnessed by
// the pivotal pair it turned out to decide.
struct ContractionStep {
  Coalition parent;
  Coalition split_off;  // {min(parent)}
  Coalition rest;
  Coalition survivor;
  int pivot_a = 0;
  int pivot_b = 0;
  long long family_size = 0;  // constrained profiles scanned
};

struct DecisiveCertificate {
  Coalition coalition;
  std::vector<PairCheck> verified_pairs;   // all ordered pairs, exhaustive
  std::vector<ContractionStep> chain;      // from the full society downward
};

// From one decisive pair to all of them. Throws PreconditionFailed if the
// seed pair is not decisive, AxiomViolation if some other pair fails.
DecisiveCertificate expand_decisive(const ScfRule& rule, const Coalition& d,
                                    std::pair<int, int> seed);

struct ContractionResult {
  Coalition survivor;
  ContractionStep step;
};

// Splits a decisive coalition (|D| >= 2) and returns the decisive part.
// Pivotal alternatives are fixed at (0, 1, 2); m >= 3 required.
ContractionResult contract_decisive(const ScfRule& rule, const Coalition& d);

struct DictatorResult {
  int dictator = -1;
  DecisiveCertificate certificate;
};

// Full constructive run: check the axioms, start from the whole society,
// contract to a singleton, verify the singleton against every profile.
DictatorResult find_dictator(const ScfRule& rule);

// Replays every recorded step and pair scan of a certificate.
bool verify_certificate(const ScfRule& rule, const DecisiveCertificate& cert,
                        std::vector<std::string>* problems = nullptr);

}  // namespace implab
