#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "implab/prefs.hpp"

namespace implab {

enum class RuleKind { Dictator, Constant, BordaLex, PluralityLex, CopelandLex, Table };

std::string rule_kind_name(RuleKind kind);

// A social choice function: n rankings over m alternatives in, one ranking
// out. The named kinds are families, defined at every society size >= 1 and
// every alternative count >= 2; a table is a single fixed arity.
class ScfRule {
 public:
  static ScfRule dictator(int i, int n, int m);
  static ScfRule constant(Ranking r, int n);
  static ScfRule borda_lex(int n, int m);
  static ScfRule plurality_lex(int n, int m);
  static ScfRule copeland_lex(int n, int m);
  // Entries must cover each of the (m!)^n profiles exactly once.
  static ScfRule table(int n, int m, const std::vector<std::pair<Profile, Ranking>>& entries);

  RuleKind kind() const { return kind_; }
  int n() const { return n_; }
  int m() const { return m_; }
  bool is_family() const { return kind_ != RuleKind::Table; }
  int dictator_index() const;
  const Ranking& constant_ranking() const;
  const std::vector<Ranking>& table_entries() const;

  Ranking evaluate(const Profile& p) const;

  // Same family at a different society size. The dictator family clamps its
  // index to the last voter when the society shrinks past it.
  ScfRule with_society_size(int n) const;
  // Same family over the surviving alternatives (dense reindexing).
  ScfRule restricted_to_alternatives(const std::vector<int>& kept) const;

  // Short printable form, e.g. "dictator:2" or "borda-lex".
  std::string describe() const;

 private:
  ScfRule(RuleKind kind, int n, int m);

  RuleKind kind_;
  int n_;
  int m_;
  int dictator_ = -1;
  std::optional<Ranking> constant_;
  std::vector<Ranking> table_;  // dense, indexed by profile rank
};

enum class Axiom { Pareto, IiaPairwise, IiaRestriction, Dictatorship };

std::string axiom_name(Axiom axiom);

// One counterexample. Which fields are meaningful depends on the axiom:
//   pareto:          profiles[0], pair, socials[0]
//   iia-pairwise:    profiles[0..1], pair, socials[0..1]
//   iia-restriction: profiles[0], removed, socials[0] = restricted social,
//                    socials[1] = social of restricted profile
struct AxiomWitness {
  int a = -1;
  int b = -1;
  std::vector<Profile> profiles;
  std::vector<Ranking> socials;
  std::vector<int> removed;
};

struct AxiomReport {
  Axiom axiom = Axiom::Pareto;
  bool holds = true;
  std::vector<AxiomWitness> witnesses;  // lexicographic scan order, capped
  long long profiles_scanned = 0;
};

inline constexpr int kMaxWitnesses = 16;

// Exhaustive scans at desk scale. Pareto and dictatorship accept n<=4, m<=4;
// the IIA checks accept n<=4, m<=4 as well.
AxiomReport check_pareto(const ScfRule& rule);
AxiomReport check_iia_pairwise(const ScfRule& rule);
AxiomReport check_iia_restriction(const ScfRule& rule);  // families only

// The voter whose ranking the rule copies on every profile, if one exists.
std::optional<int> find_dictatorship(const ScfRule& rule);

// Re-runs the rule on the witness and confirms the violation is real.
bool replay_witness(const ScfRule& rule, Axiom axiom, const AxiomWitness& w);

}  // namespace implab
