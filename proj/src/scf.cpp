#include "implab/scf.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "implab/errors.hpp"

namespace implab {

namespace {

void require_input(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

Ranking order_by_scores(const std::vector<long long>& score) {
  // Highest score first; equal scores fall back to the lower index.
  std::vector<int> alts(score.size());
  std::iota(alts.begin(), alts.end(), 0);
  std::stable_sort(alts.begin(), alts.end(), [&](int x, int y) {
    return score[static_cast<std::size_t>(x)] > score[static_cast<std::size_t>(y)];
  });
  return Ranking(std::move(alts));
}

std::vector<long long> borda_scores(const Profile& p) {
  const int m = p.alternative_count();
  std::vector<long long> score(static_cast<std::size_t>(m), 0);
  for (const Ranking& r : p.rankings()) {
    for (int pos = 0; pos < m; ++pos) {
      score[static_cast<std::size_t>(r.at(pos))] += m - 1 - pos;
    }
  }
  return score;
}

std::vector<long long> plurality_scores(const Profile& p) {
  std::vector<long long> score(static_cast<std::size_t>(p.alternative_count()), 0);
  for (const Ranking& r : p.rankings()) score[static_cast<std::size_t>(r.at(0))] += 1;
  return score;
}

std::vector<long long> copeland_scores(const Profile& p) {
  const int m = p.alternative_count();
  const int n = p.voter_count();
  std::vector<long long> score(static_cast<std::size_t>(m), 0);
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      int for_x = 0;
      for (const Ranking& r : p.rankings()) {
        if (r.prefers(x, y)) ++for_x;
      }
      if (2 * for_x > n) {
        score[static_cast<std::size_t>(x)] += 1;
        score[static_cast<std::size_t>(y)] -= 1;
      } else if (2 * for_x < n) {
        score[static_cast<std::size_t>(x)] -= 1;
        score[static_cast<std::size_t>(y)] += 1;
      }
    }
  }
  return score;
}

Profile restrict_profile(const Profile& p, const std::vector<int>& removed) {
  std::vector<Ranking> rankings;
  rankings.reserve(static_cast<std::size_t>(p.voter_count()));
  for (const Ranking& r : p.rankings()) {
    rankings.push_back(restrict_ranking(r, removed).ranking);
  }
  return Profile(std::move(rankings));
}

std::vector<int> complement_of(const std::vector<int>& kept, int m) {
  std::vector<char> in(static_cast<std::size_t>(m), 0);
  for (int a : kept) in[static_cast<std::size_t>(a)] = 1;
  std::vector<int> removed;
  for (int a = 0; a < m; ++a) {
    if (!in[static_cast<std::size_t>(a)]) removed.push_back(a);
  }
  return removed;
}

void require_desk_scale(const ScfRule& rule) {
  require_input(rule.n() <= 4 && rule.m() <= 4,
                "exhaustive checks support n <= 4 and m <= 4");
}

}  // namespace

std::string rule_kind_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::Dictator: return "dictator";
    case RuleKind::Constant: return "constant";
    case RuleKind::BordaLex: return "borda-lex";
    case RuleKind::PluralityLex: return "plurality-lex";
    case RuleKind::CopelandLex: return "copeland-lex";
    case RuleKind::Table: return "table";
  }
  throw InternalInvariantBroken("unknown rule kind");
}

ScfRule::ScfRule(RuleKind kind, int n, int m) : kind_(kind), n_(n), m_(m) {
  require_input(n >= 1, "society size must be positive");
  require_input(m >= 2, "need at least two alternatives");
}

ScfRule ScfRule::dictator(int i, int n, int m) {
  ScfRule rule(RuleKind::Dictator, n, m);
  require_input(i >= 0 && i < n, "dictator index out of range");
  rule.dictator_ = i;
  return rule;
}

ScfRule ScfRule::constant(Ranking r, int n) {
  ScfRule rule(RuleKind::Constant, n, r.alternative_count());
  rule.constant_ = std::move(r);
  return rule;
}

ScfRule ScfRule::borda_lex(int n, int m) { return ScfRule(RuleKind::BordaLex, n, m); }

ScfRule ScfRule::plurality_lex(int n, int m) {
  return ScfRule(RuleKind::PluralityLex, n, m);
}

ScfRule ScfRule::copeland_lex(int n, int m) {
  return ScfRule(RuleKind::CopelandLex, n, m);
}

ScfRule ScfRule::table(int n, int m,
                       const std::vector<std::pair<Profile, Ranking>>& entries) {
  ScfRule rule(RuleKind::Table, n, m);
  require_input(n <= 4 && m <= 4, "table rules support n <= 4 and m <= 4");
  const long long total = profile_count(n, m);
  rule.table_.assign(static_cast<std::size_t>(total), Ranking::identity(m));
  std::vector<char> filled(static_cast<std::size_t>(total), 0);
  for (const auto& [profile, ranking] : entries) {
    if (profile.voter_count() != n || profile.alternative_count() != m ||
        ranking.alternative_count() != m) {
      throw InvalidTableError("table entry arity mismatch");
    }
    const auto rank = static_cast<std::size_t>(profile_rank(profile));
    if (filled[rank]) throw InvalidTableError("table lists a profile twice");
    filled[rank] = 1;
    rule.table_[rank] = ranking;
  }
  for (char f : filled) {
    if (!f) throw InvalidTableError("table is not total");
  }
  return rule;
}

int ScfRule::dictator_index() const {
  if (kind_ != RuleKind::Dictator) throw UnsupportedRuleError("not a dictator rule");
  return dictator_;
}

const Ranking& ScfRule::constant_ranking() const {
  if (kind_ != RuleKind::Constant) throw UnsupportedRuleError("not a constant rule");
  return *constant_;
}

const std::vector<Ranking>& ScfRule::table_entries() const {
  if (kind_ != RuleKind::Table) throw UnsupportedRuleError("not a table rule");
  return table_;
}

Ranking ScfRule::evaluate(const Profile& p) const {
  require_input(p.voter_count() == n_ && p.alternative_count() == m_,
                "profile arity does not match the rule");
  switch (kind_) {
    case RuleKind::Dictator:
      return p.ranking_of(dictator_);
    case RuleKind::Constant:
      return *constant_;
    case RuleKind::BordaLex:
      return order_by_scores(borda_scores(p));
    case RuleKind::PluralityLex:
      return order_by_scores(plurality_scores(p));
    case RuleKind::CopelandLex:
      return order_by_scores(copeland_scores(p));
    case RuleKind::Table:
      return table_[static_cast<std::size_t>(profile_rank(p))];
  }
  throw InternalInvariantBroken("unknown rule kind");
}

ScfRule ScfRule::with_society_size(int n) const {
  if (!is_family()) throw UnsupportedRuleError("table rules fix their society size");
  require_input(n >= 1, "society size must be positive");
  switch (kind_) {
    case RuleKind::Dictator:
      return dictator(std::min(dictator_, n - 1), n, m_);
    case RuleKind::Constant:
      return constant(*constant_, n);
    case RuleKind::BordaLex:
      return borda_lex(n, m_);
    case RuleKind::PluralityLex:
      return plurality_lex(n, m_);
    case RuleKind::CopelandLex:
      return copeland_lex(n, m_);
    default:
      throw InternalInvariantBroken("unreachable");
  }
}

ScfRule ScfRule::restricted_to_alternatives(const std::vector<int>& kept) const {
  if (!is_family()) {
    throw UnsupportedRuleError("table rules do not restrict to alternative subsets");
  }
  require_input(kept.size() >= 2, "need at least two surviving alternatives");
  require_input(std::is_sorted(kept.begin(), kept.end()) &&
                    std::adjacent_find(kept.begin(), kept.end()) == kept.end(),
                "survivor list must be strictly increasing");
  require_input(kept.front() >= 0 && kept.back() < m_, "survivor out of range");
  const int m2 = static_cast<int>(kept.size());
  switch (kind_) {
    case RuleKind::Dictator:
      return dictator(dictator_, n_, m2);
    case RuleKind::Constant:
      return constant(restrict_ranking(*constant_, complement_of(kept, m_)).ranking, n_);
    case RuleKind::BordaLex:
      return borda_lex(n_, m2);
    case RuleKind::PluralityLex:
      return plurality_lex(n_, m2);
    case RuleKind::CopelandLex:
      return copeland_lex(n_, m2);
    default:
      throw InternalInvariantBroken("unreachable");
  }
}

std::string ScfRule::describe() const {
  switch (kind_) {
    case RuleKind::Dictator:
      return "dictator:" + std::to_string(dictator_);
    case RuleKind::Constant: {
      std::string out = "constant:";
      for (int i = 0; i < m_; ++i) {
        if (i) out += ",";
        out += std::to_string(constant_->at(i));
      }
      return out;
    }
    default:
      return rule_kind_name(kind_);
  }
}

std::string axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Pareto: return "pareto";
    case Axiom::IiaPairwise: return "iia-pairwise";
    case Axiom::IiaRestriction: return "iia-restriction";
    case Axiom::Dictatorship: return "dictatorship";
  }
  throw InternalInvariantBroken("unknown axiom");
}

AxiomReport check_pareto(const ScfRule& rule) {
  require_desk_scale(rule);
  AxiomReport report;
  report.axiom = Axiom::Pareto;
  const int n = rule.n();
  const int m = rule.m();
  for (const Profile& p : enumerate_profiles(n, m)) {
    ++report.profiles_scanned;
    const Ranking social = rule.evaluate(p);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a == b) continue;
        bool unanimous = true;
        for (const Ranking& r : p.rankings()) {
          if (!r.prefers(a, b)) {
            unanimous = false;
            break;
          }
        }
        if (unanimous && social.prefers(b, a)) {
          report.holds = false;
          if (static_cast<int>(report.witnesses.size()) < kMaxWitnesses) {
            report.witnesses.push_back(AxiomWitness{a, b, {p}, {social}, {}});
          }
        }
      }
    }
  }
  return report;
}

AxiomReport check_iia_pairwise(const ScfRule& rule) {
  require_desk_scale(rule);
  AxiomReport report;
  report.axiom = Axiom::IiaPairwise;
  const int n = rule.n();
  const int m = rule.m();
  const long long total = profile_count(n, m);

  // Cache social rankings once; the per-pair pass is then linear.
  std::vector<Ranking> social;
  social.reserve(static_cast<std::size_t>(total));
  for (const Profile& p : enumerate_profiles(n, m)) social.push_back(rule.evaluate(p));
  report.profiles_scanned = total;

  for (int a = 0; a < m && static_cast<int>(report.witnesses.size()) < kMaxWitnesses;
       ++a) {
    for (int b = a + 1; b < m; ++b) {
      // Profiles with the same voter-wise a-vs-b comparison vector must agree
      // socially on a vs b. Track the first profile seen per (pattern, side).
      std::map<std::pair<unsigned, bool>, long long> first_seen;
      std::vector<char> reported(1u << n, 0);
      long long rank = 0;
      for (const Profile& p : enumerate_profiles(n, m)) {
        unsigned pattern = 0;
        for (int v = 0; v < n; ++v) {
          if (p.ranking_of(v).prefers(a, b)) pattern |= (1u << v);
        }
        const bool side = social[static_cast<std::size_t>(rank)].prefers(a, b);
        auto key = std::make_pair(pattern, !side);
        auto other = first_seen.find(key);
        if (other != first_seen.end() && !reported[pattern]) {
          report.holds = false;
          reported[pattern] = 1;
          if (static_cast<int>(report.witnesses.size()) < kMaxWitnesses) {
            const Profile p1 = nth_profile(n, m, other->second);
            report.witnesses.push_back(AxiomWitness{
                a, b, {p1, p},
                {social[static_cast<std::size_t>(other->second)],
                 social[static_cast<std::size_t>(rank)]},
                {}});
          }
        }
        first_seen.try_emplace(std::make_pair(pattern, side), rank);
        ++rank;
      }
    }
  }
  return report;
}

AxiomReport check_iia_restriction(const ScfRule& rule) {
  if (!rule.is_family()) {
    throw UnsupportedRuleError("restriction consistency is defined for rule families");
  }
  require_desk_scale(rule);
  AxiomReport report;
  report.axiom = Axiom::IiaRestriction;
  const int n = rule.n();
  const int m = rule.m();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> removed;
    for (int a = 0; a < m; ++a) {
      if (mask & (1u << a)) removed.push_back(a);
    }
    if (m - static_cast<int>(removed.size()) < 2) continue;
    std::vector<int> kept = complement_of(removed, m);
    if (static_cast<int>(kept.size()) == m) {
      // Removing nothing is trivially consistent.
      continue;
    }
    const ScfRule sub = rule.restricted_to_alternatives(kept);
    for (const Profile& p : enumerate_profiles(n, m)) {
      ++report.profiles_scanned;
      const Ranking lhs = restrict_ranking(rule.evaluate(p), removed).ranking;
      const Ranking rhs = sub.evaluate(restrict_profile(p, removed));
      if (!(lhs == rhs)) {
        report.holds = false;
        if (static_cast<int>(report.witnesses.size()) < kMaxWitnesses) {
          report.witnesses.push_back(AxiomWitness{-1, -1, {p}, {lhs, rhs}, removed});
        }
      }
    }
  }
  return report;
}

std::optional<int> find_dictatorship(const ScfRule& rule) {
  require_desk_scale(rule);
  std::vector<char> alive(static_cast<std::size_t>(rule.n()), 1);
  int remaining = rule.n();
  for (const Profile& p : enumerate_profiles(rule.n(), rule.m())) {
    const Ranking social = rule.evaluate(p);
    for (int v = 0; v < rule.n(); ++v) {
      if (alive[static_cast<std::size_t>(v)] && !(p.ranking_of(v) == social)) {
        alive[static_cast<std::size_t>(v)] = 0;
        --remaining;
      }
    }
    if (remaining == 0) return std::nullopt;
  }
  for (int v = 0; v < rule.n(); ++v) {
    if (alive[static_cast<std::size_t>(v)]) return v;
  }
  return std::nullopt;
}

bool replay_witness(const ScfRule& rule, Axiom axiom, const AxiomWitness& w) {
  switch (axiom) {
    case Axiom::Pareto: {
      if (w.profiles.size() != 1 || w.socials.size() != 1) return false;
      const Profile& p = w.profiles.front();
      for (const Ranking& r : p.rankings()) {
        if (!r.prefers(w.a, w.b)) return false;
      }
      const Ranking social = rule.evaluate(p);
      return social == w.socials.front() && social.prefers(w.b, w.a);
    }
    case Axiom::IiaPairwise: {
      if (w.profiles.size() != 2 || w.socials.size() != 2) return false;
      const Profile& p1 = w.profiles[0];
      const Profile& p2 = w.profiles[1];
      for (int v = 0; v < p1.voter_count(); ++v) {
        if (p1.ranking_of(v).prefers(w.a, w.b) != p2.ranking_of(v).prefers(w.a, w.b)) {
          return false;
        }
      }
      const Ranking s1 = rule.evaluate(p1);
      const Ranking s2 = rule.evaluate(p2);
      return s1 == w.socials[0] && s2 == w.socials[1] &&
             s1.prefers(w.a, w.b) != s2.prefers(w.a, w.b);
    }
    case Axiom::IiaRestriction: {
      if (w.profiles.size() != 1 || w.socials.size() != 2) return false;
      const Profile& p = w.profiles.front();
      std::vector<int> kept = complement_of(w.removed, rule.m());
      const Ranking lhs = restrict_ranking(rule.evaluate(p), w.removed).ranking;
      const Ranking rhs = rule.restricted_to_alternatives(kept).evaluate(
          restrict_profile(p, w.removed));
      return lhs == w.socials[0] && rhs == w.socials[1] && !(lhs == rhs);
    }
    case Axiom::Dictatorship:
      return false;
  }
  return false;
}

}  // namespace implab
