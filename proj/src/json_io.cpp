#include "implab/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "implab/errors.hpp"

namespace implab {

namespace {

// Translates nlohmann's exceptions (missing key, wrong type, parse error)
// into the library's own input error.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

int index_of_name(const std::vector<std::string>& names, const std::string& name) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    throw InputError("unknown alternative '" + name + "'");
  }
  return static_cast<int>(it - names.begin());
}

std::vector<std::string> names_from(const Json& j) {
  std::vector<std::string> names = j.at("alternatives").get<std::vector<std::string>>();
  if (names.size() < 2) throw InputError("need at least two alternatives");
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t k = i + 1; k < names.size(); ++k) {
      if (names[i] == names[k]) {
        throw InputError("duplicate alternative name '" + names[i] + "'");
      }
    }
  }
  return names;
}

std::vector<std::string> names_or_default(const std::vector<std::string>& names, int m) {
  if (names.empty()) return default_alternative_names(m);
  if (static_cast<int>(names.size()) != m) {
    throw InputError("expected " + std::to_string(m) + " alternative names, got " +
                     std::to_string(names.size()));
  }
  return names;
}

Json name_or_null(int index, const std::vector<std::string>& names) {
  if (index < 0) return nullptr;
  return names.at(static_cast<std::size_t>(index));
}

int index_or_missing(const Json& j, const std::vector<std::string>& names) {
  if (j.is_null()) return -1;
  return index_of_name(names, j.get<std::string>());
}

Axiom axiom_from_name(const std::string& name) {
  for (Axiom a : {Axiom::Pareto, Axiom::IiaPairwise, Axiom::IiaRestriction,
                  Axiom::Dictatorship}) {
    if (axiom_name(a) == name) return a;
  }
  throw InputError("unknown axiom '" + name + "'");
}

Coalition coalition_from_json(const Json& j, int n) {
  return Coalition::of(j.get<std::vector<int>>(), n);
}

Player player_from_name(const std::string& name) {
  if (name == "A") return Player::A;
  if (name == "B") return Player::B;
  throw InputError("unknown player '" + name + "'");
}

RoundAction round_action_from_name(const std::string& name) {
  for (RoundAction a : {RoundAction::AColors, RoundAction::BColors, RoundAction::Skip}) {
    if (round_action_name(a) == name) return a;
  }
  throw InputError("unknown round action '" + name + "'");
}

}  // namespace

Json ranking_to_json(const Ranking& r, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (int a : r.order()) out.push_back(names.at(static_cast<std::size_t>(a)));
  return out;
}

Ranking ranking_from_json(const Json& j, const std::vector<std::string>& names) {
  return guarded([&] {
    std::vector<int> order;
    for (const auto& name : j) {
      order.push_back(index_of_name(names, name.get<std::string>()));
    }
    if (order.size() != names.size()) {
      throw InputError("ranking names " + std::to_string(order.size()) +
                       " of " + std::to_string(names.size()) + " alternatives");
    }
    return Ranking(std::move(order));
  });
}

Json profile_to_json(const Profile& p, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const Ranking& r : p.rankings()) out.push_back(ranking_to_json(r, names));
  return out;
}

Profile profile_from_json(const Json& j, const std::vector<std::string>& names) {
  return guarded([&] {
    std::vector<Ranking> rankings;
    for (const auto& rj : j) rankings.push_back(ranking_from_json(rj, names));
    return Profile(std::move(rankings));
  });
}

Json rule_to_json(const ScfRule& rule, const std::vector<std::string>& names) {
  const auto labels = names_or_default(names, rule.m());
  Json out;
  out["n"] = rule.n();
  out["alternatives"] = labels;
  switch (rule.kind()) {
    case RuleKind::Dictator:
      out["kind"] = "dictator";
      out["i"] = rule.dictator_index();
      break;
    case RuleKind::Constant:
      out["kind"] = "constant";
      out["ranking"] = ranking_to_json(rule.constant_ranking(), labels);
      break;
    case RuleKind::BordaLex:
      out["kind"] = "borda-lex";
      break;
    case RuleKind::PluralityLex:
      out["kind"] = "plurality-lex";
      break;
    case RuleKind::CopelandLex:
      out["kind"] = "copeland-lex";
      break;
    case RuleKind::Table: {
      Json entries = Json::array();
      long long rank = 0;
      for (const Ranking& r : rule.table_entries()) {
        Json e;
        e["profile"] = profile_to_json(nth_profile(rule.n(), rule.m(), rank), labels);
        e["ranking"] = ranking_to_json(r, labels);
        entries.push_back(std::move(e));
        ++rank;
      }
      out["kind"] = "table";
      out["entries"] = std::move(entries);
      break;
    }
  }
  return out;
}

ScfRule rule_from_json(const Json& j) {
  return guarded([&]() -> ScfRule {
    const auto names = names_from(j);
    const int n = j.at("n").get<int>();
    const int m = static_cast<int>(names.size());
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "dictator") return ScfRule::dictator(j.at("i").get<int>(), n, m);
    if (kind == "constant") {
      return ScfRule::constant(ranking_from_json(j.at("ranking"), names), n);
    }
    if (kind == "borda-lex") return ScfRule::borda_lex(n, m);
    if (kind == "plurality-lex") return ScfRule::plurality_lex(n, m);
    if (kind == "copeland-lex") return ScfRule::copeland_lex(n, m);
    if (kind == "table") {
      std::vector<std::pair<Profile, Ranking>> entries;
      for (const auto& e : j.at("entries")) {
        entries.emplace_back(profile_from_json(e.at("profile"), names),
                             ranking_from_json(e.at("ranking"), names));
      }
      return ScfRule::table(n, m, entries);
    }
    throw InputError("unknown rule kind '" + kind + "'");
  });
}

Json axiom_report_to_json(const AxiomReport& report,
                          const std::vector<std::string>& names) {
  int m = static_cast<int>(names.size());
  for (const auto& w : report.witnesses) {
    if (!w.profiles.empty()) m = w.profiles.front().alternative_count();
  }
  const auto labels = m == 0 ? std::vector<std::string>{} : names_or_default(names, m);
  Json out;
  out["axiom"] = axiom_name(report.axiom);
  out["holds"] = report.holds;
  out["profiles_scanned"] = report.profiles_scanned;
  if (!labels.empty()) out["alternatives"] = labels;
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    Json wj;
    wj["a"] = name_or_null(w.a, labels);
    wj["b"] = name_or_null(w.b, labels);
    Json profiles = Json::array();
    for (const auto& p : w.profiles) profiles.push_back(profile_to_json(p, labels));
    wj["profiles"] = std::move(profiles);
    // Restriction witnesses carry socials over the surviving alternatives
    // only, so their name list shrinks accordingly.
    std::vector<std::string> social_names = labels;
    if (report.axiom == Axiom::IiaRestriction) {
      social_names.clear();
      for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        if (std::find(w.removed.begin(), w.removed.end(), i) == w.removed.end()) {
          social_names.push_back(labels[static_cast<std::size_t>(i)]);
        }
      }
    }
    Json socials = Json::array();
    for (const auto& r : w.socials) {
      socials.push_back(ranking_to_json(r, social_names));
    }
    wj["socials"] = std::move(socials);
    Json removed = Json::array();
    for (int r : w.removed) removed.push_back(labels.at(static_cast<std::size_t>(r)));
    wj["removed"] = std::move(removed);
    witnesses.push_back(std::move(wj));
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

AxiomReport axiom_report_from_json(const Json& j) {
  return guarded([&] {
    AxiomReport report;
    report.axiom = axiom_from_name(j.at("axiom").get<std::string>());
    report.holds = j.at("holds").get<bool>();
    report.profiles_scanned = j.at("profiles_scanned").get<long long>();
    const auto witnesses = j.at("witnesses");
    if (!witnesses.empty()) {
      const auto names = names_from(j);
      for (const auto& wj : witnesses) {
        AxiomWitness w;
        w.a = index_or_missing(wj.at("a"), names);
        w.b = index_or_missing(wj.at("b"), names);
        for (const auto& pj : wj.at("profiles")) {
          w.profiles.push_back(profile_from_json(pj, names));
        }
        for (const auto& nj : wj.at("removed")) {
          w.removed.push_back(index_of_name(names, nj.get<std::string>()));
        }
        std::vector<std::string> social_names;
        if (report.axiom == Axiom::IiaRestriction) {
          for (int i = 0; i < static_cast<int>(names.size()); ++i) {
            if (std::find(w.removed.begin(), w.removed.end(), i) == w.removed.end()) {
              social_names.push_back(names[static_cast<std::size_t>(i)]);
            }
          }
        } else {
          social_names = names;
        }
        for (const auto& rj : wj.at("socials")) {
          w.socials.push_back(ranking_from_json(rj, social_names));
        }
        report.witnesses.push_back(std::move(w));
      }
    }
    return report;
  });
}

Json certificate_to_json(const DecisiveCertificate& cert,
                         const std::vector<std::string>& names) {
  int m = 2;
  for (const auto& p : cert.verified_pairs) m = std::max({m, p.a + 1, p.b + 1});
  for (const auto& s : cert.chain) m = std::max({m, s.pivot_a + 1, s.pivot_b + 1});
  const auto labels = names_or_default(names, m);
  Json out;
  out["alternatives"] = labels;
  out["coalition"] = cert.coalition.members;
  Json pairs = Json::array();
  for (const auto& p : cert.verified_pairs) {
    Json pj;
    pj["a"] = labels.at(static_cast<std::size_t>(p.a));
    pj["b"] = labels.at(static_cast<std::size_t>(p.b));
    pj["profiles_checked"] = p.profiles_checked;
    pairs.push_back(std::move(pj));
  }
  out["pairs"] = std::move(pairs);
  Json chain = Json::array();
  for (const auto& s : cert.chain) {
    Json sj;
    sj["parent"] = s.parent.members;
    sj["split_off"] = s.split_off.members;
    sj["rest"] = s.rest.members;
    sj["survivor"] = s.survivor.members;
    sj["pivot"] = Json::array({labels.at(static_cast<std::size_t>(s.pivot_a)),
                               labels.at(static_cast<std::size_t>(s.pivot_b))});
    sj["family_size"] = s.family_size;
    chain.push_back(std::move(sj));
  }
  out["chain"] = std::move(chain);
  return out;
}

DecisiveCertificate certificate_from_json(const Json& j) {
  return guarded([&] {
    const auto names = names_from(j);
    int n = 0;
    for (int v : j.at("coalition").get<std::vector<int>>()) n = std::max(n, v + 1);
    for (const auto& sj : j.at("chain")) {
      for (int v : sj.at("parent").get<std::vector<int>>()) n = std::max(n, v + 1);
    }
    DecisiveCertificate cert;
    cert.coalition = coalition_from_json(j.at("coalition"), n);
    for (const auto& pj : j.at("pairs")) {
      PairCheck p;
      p.a = index_of_name(names, pj.at("a").get<std::string>());
      p.b = index_of_name(names, pj.at("b").get<std::string>());
      p.profiles_checked = pj.at("profiles_checked").get<long long>();
      cert.verified_pairs.push_back(p);
    }
    for (const auto& sj : j.at("chain")) {
      ContractionStep s;
      s.parent = coalition_from_json(sj.at("parent"), n);
      s.split_off = coalition_from_json(sj.at("split_off"), n);
      s.rest = coalition_from_json(sj.at("rest"), n);
      s.survivor = coalition_from_json(sj.at("survivor"), n);
      const auto pivot = sj.at("pivot");
      if (pivot.size() != 2) throw InputError("pivot must name two alternatives");
      s.pivot_a = index_of_name(names, pivot.at(0).get<std::string>());
      s.pivot_b = index_of_name(names, pivot.at(1).get<std::string>());
      s.family_size = sj.at("family_size").get<long long>();
      cert.chain.push_back(std::move(s));
    }
    return cert;
  });
}

Json triangulation_to_json(const Triangulation& t, const Labeling* labels) {
  Json out;
  out["dim"] = t.dim();
  out["denom"] = t.denom();
  Json vertices = Json::array();
  for (long long v = 0; v < t.vertex_count(); ++v) {
    vertices.push_back(t.vertex_coords(v));
  }
  out["vertices"] = std::move(vertices);
  Json cells = Json::array();
  for (long long c = 0; c < t.cell_count(); ++c) {
    cells.push_back(t.cell_vertices(c));
  }
  out["cells"] = std::move(cells);
  if (labels != nullptr) out["labels"] = *labels;
  return out;
}

TriangulationData triangulation_from_json(const Json& j) {
  return guarded([&] {
    const int dim = j.at("dim").get<int>();
    const long long denom = j.at("denom").get<long long>();
    auto vertices = j.at("vertices").get<std::vector<std::vector<long long>>>();
    std::vector<std::vector<int>> cells =
        j.at("cells").get<std::vector<std::vector<int>>>();
    TriangulationData data{
        Triangulation::from_data(dim, denom, std::move(vertices), std::move(cells)),
        std::nullopt};
    if (j.contains("labels")) {
      Labeling labels = j.at("labels").get<Labeling>();
      int base = 0;
      if (j.contains("labels_base")) base = j.at("labels_base").get<int>();
      if (base != 0 && base != 1) {
        throw InputError("labels_base must be 0 or 1");
      }
      for (int& l : labels) l -= base;
      data.labels = std::move(labels);
    }
    return data;
  });
}

Json game_result_to_json(const GameResult& res) {
  Json out;
  out["loser"] = res.loser ? Json(player_name(*res.loser)) : Json(nullptr);
  out["completing_cell"] = res.completing_cell;
  out["labels"] = res.final_state.labels;
  out["colorer"] = res.final_state.colorer;
  Json history = Json::array();
  for (const auto& h : res.final_state.history) {
    Json hj;
    hj["vertex"] = h.vertex;
    hj["label"] = h.label;
    hj["mover"] = player_name(h.mover);
    history.push_back(std::move(hj));
  }
  out["history"] = std::move(history);
  return out;
}

GameResult game_result_from_json(const Json& j, const Triangulation& t) {
  return guarded([&] {
    GameResult res;
    res.final_state = GameState::fresh(t);
    const auto& loser = j.at("loser");
    if (!loser.is_null()) res.loser = player_from_name(loser.get<std::string>());
    res.completing_cell = j.at("completing_cell").get<long long>();
    for (const auto& hj : j.at("history")) {
      GameState& s = res.final_state;
      if (s.mover != player_from_name(hj.at("mover").get<std::string>())) {
        throw InputError("history departs from alternating turn order");
      }
      apply_move(s, Move{hj.at("vertex").get<long long>(), hj.at("label").get<int>()});
    }
    if (res.final_state.labels != j.at("labels").get<std::vector<int>>() ||
        res.final_state.colorer != j.at("colorer").get<std::vector<int>>()) {
      throw InputError("recorded board does not match the replayed history");
    }
    return res;
  });
}

Json transcript_to_json(const GameTranscript& tr,
                        const std::vector<std::string>& names) {
  int m = 2;
  if (!tr.rounds.empty()) m = tr.rounds.front().profile.alternative_count();
  const auto labels = names_or_default(names, m);
  Json out;
  out["alternatives"] = labels;
  out["voter_a"] = tr.voter_a;
  out["complete"] = tr.complete;
  out["tally_a"] = tr.tally_a;
  out["tally_b"] = tr.tally_b;
  out["labels"] = tr.labels;
  out["colorer"] = tr.colorer;
  Json rounds = Json::array();
  for (const auto& r : tr.rounds) {
    Json rj;
    rj["profile"] = profile_to_json(r.profile, labels);
    rj["a_ranking"] = ranking_to_json(r.a_ranking, labels);
    rj["b_ranking"] = ranking_to_json(r.b_ranking, labels);
    rj["social"] = ranking_to_json(r.social, labels);
    rj["action"] = round_action_name(r.action);
    rj["vertex"] = r.vertex;
    rj["label"] = r.label;
    rounds.push_back(std::move(rj));
  }
  out["rounds"] = std::move(rounds);
  return out;
}

GameTranscript transcript_from_json(const Json& j) {
  return guarded([&] {
    const auto names = names_from(j);
    GameTranscript tr;
    tr.voter_a = j.at("voter_a").get<int>();
    tr.complete = j.at("complete").get<bool>();
    tr.tally_a = j.at("tally_a").get<long long>();
    tr.tally_b = j.at("tally_b").get<long long>();
    tr.labels = j.at("labels").get<Labeling>();
    tr.colorer = j.at("colorer").get<std::vector<int>>();
    for (const auto& rj : j.at("rounds")) {
      GameRound r{profile_from_json(rj.at("profile"), names),
                  ranking_from_json(rj.at("a_ranking"), names),
                  ranking_from_json(rj.at("b_ranking"), names),
                  ranking_from_json(rj.at("social"), names),
                  round_action_from_name(rj.at("action").get<std::string>()),
                  rj.at("vertex").get<long long>(),
                  rj.at("label").get<int>()};
      tr.rounds.push_back(std::move(r));
    }
    return tr;
  });
}

Json fixed_point_to_json(const FixedPointResult& res) {
  Json out;
  out["point"] = res.point;
  out["residual"] = res.residual;
  out["subdivision"] = res.subdivision;
  out["cell"] = res.cell;
  out["converged"] = res.converged;
  Json stages = Json::array();
  for (const auto& s : res.stages) {
    Json sj;
    sj["subdivision"] = s.subdivision;
    sj["residual"] = s.residual;
    stages.push_back(std::move(sj));
  }
  out["stages"] = std::move(stages);
  return out;
}

FixedPointResult fixed_point_from_json(const Json& j) {
  return guarded([&] {
    FixedPointResult res;
    res.point = j.at("point").get<std::vector<double>>();
    res.residual = j.at("residual").get<double>();
    res.subdivision = j.at("subdivision").get<int>();
    res.cell = j.at("cell").get<long long>();
    res.converged = j.at("converged").get<bool>();
    for (const auto& sj : j.at("stages")) {
      res.stages.push_back(
          {sj.at("subdivision").get<int>(), sj.at("residual").get<double>()});
    }
    return res;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("cannot parse '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw InputError("cannot write '" + path + "'");
}

}  // namespace implab
