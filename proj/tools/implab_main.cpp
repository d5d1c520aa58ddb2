#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "implab/errors.hpp"
#include "implab/json_io.hpp"
#include "implab/render.hpp"

using namespace implab;

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string ranking_text(const Ranking& r, const std::vector<std::string>& names) {
  std::string out;
  for (int a : r.order()) {
    if (!out.empty()) out += '>';
    out += names.at(static_cast<std::size_t>(a));
  }
  return out;
}

std::string profile_text(const Profile& p, const std::vector<std::string>& names) {
  std::string out = "[";
  for (int v = 0; v < p.voter_count(); ++v) {
    if (v) out += " | ";
    out += ranking_text(p.ranking_of(v), names);
  }
  return out + "]";
}

std::string cells_text(const std::vector<long long>& cells) {
  std::string out = "[";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(cells[i]);
  }
  return out + "]";
}

std::string coalition_chain_text(const DecisiveCertificate& cert) {
  if (cert.chain.empty()) return cert.coalition.describe();
  std::string out = cert.chain.front().parent.describe();
  for (const auto& s : cert.chain) out += " -> " + s.survivor.describe();
  return out;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw InputError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw InputError("not an integer: '" + text + "'");
  return value;
}

struct RuleArgs {
  std::string spec;
  int n = 0;
  int m = 0;
};

ScfRule load_rule(const RuleArgs& args) {
  const std::string& spec = args.spec;
  if (!spec.empty() && spec[0] == '@') {
    ScfRule rule = rule_from_json(read_json_file(spec.substr(1)));
    if (args.n > 0 && args.n != rule.n()) {
      throw InputError("--n disagrees with the rule file");
    }
    if (args.m > 0 && args.m != rule.m()) {
      throw InputError("--m disagrees with the rule file");
    }
    return rule;
  }
  if (args.n <= 0) throw InputError("--n is required with --rule " + spec);
  const int n = args.n;
  auto need_m = [&] {
    if (args.m <= 0) throw InputError("--m is required with --rule " + spec);
    return args.m;
  };
  if (spec.rfind("dictator:", 0) == 0) {
    return ScfRule::dictator(parse_int(spec.substr(9)), n, need_m());
  }
  if (spec.rfind("constant:", 0) == 0) {
    std::vector<int> order;
    std::stringstream ss(spec.substr(9));
    std::string item;
    while (std::getline(ss, item, ',')) order.push_back(parse_int(item));
    if (args.m > 0 && args.m != static_cast<int>(order.size())) {
      throw InputError("--m disagrees with the constant ranking length");
    }
    return ScfRule::constant(Ranking(std::move(order)), n);
  }
  if (spec == "borda-lex") return ScfRule::borda_lex(n, need_m());
  if (spec == "plurality-lex") return ScfRule::plurality_lex(n, need_m());
  if (spec == "copeland-lex") return ScfRule::copeland_lex(n, need_m());
  throw InputError("unknown rule '" + spec +
                   "' (try dictator:K, constant:r0,r1,..., borda-lex, "
                   "plurality-lex, copeland-lex, or @file.json)");
}

void append_witness_text(std::string& out, Axiom axiom, const AxiomWitness& w,
                         const std::vector<std::string>& names) {
  std::vector<std::string> social_names;
  if (axiom == Axiom::IiaRestriction) {
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
      if (std::find(w.removed.begin(), w.removed.end(), i) == w.removed.end()) {
        social_names.push_back(names[static_cast<std::size_t>(i)]);
      }
    }
  } else {
    social_names = names;
  }
  if (axiom == Axiom::IiaRestriction) {
    std::string removed;
    for (int r : w.removed) {
      if (!removed.empty()) removed += ',';
      removed += names.at(static_cast<std::size_t>(r));
    }
    out += "  witness, removing {" + removed + "}:\n";
    out += "    profile: " + profile_text(w.profiles.at(0), names) + "\n";
    out += "    social, then restricted: " +
           ranking_text(w.socials.at(0), social_names) + "\n";
    out += "    restricted profile's social: " +
           ranking_text(w.socials.at(1), social_names) + "\n";
    return;
  }
  out += "  witness pair (" + names.at(static_cast<std::size_t>(w.a)) + ", " +
         names.at(static_cast<std::size_t>(w.b)) + "):\n";
  for (std::size_t i = 0; i < w.profiles.size(); ++i) {
    out += "    profile: " + profile_text(w.profiles[i], names) +
           " -> social " + ranking_text(w.socials.at(i), social_names) + "\n";
  }
}

// ---- verify-scf ----------------------------------------------------------

struct VerifyArgs {
  RuleArgs rule;
  std::string check = "all";
  std::string format = "text";
};

int run_verify(const VerifyArgs& args, std::string& body) {
  const ScfRule rule = load_rule(args.rule);
  const auto names = default_alternative_names(rule.m());

  std::vector<std::string> wanted;
  if (args.check == "all") {
    wanted = {"pareto", "iia", "dictatorship"};
    if (rule.is_family()) wanted.insert(wanted.begin() + 2, "iia-restriction");
  } else {
    wanted = {args.check};
  }

  bool all_hold = true;
  Json jreports = Json::array();
  std::string text = "rule: " + rule.describe() + " (n=" +
                     std::to_string(rule.n()) + ", m=" +
                     std::to_string(rule.m()) + ")\n";

  for (const std::string& what : wanted) {
    if (what == "dictatorship") {
      const auto who = find_dictatorship(rule);
      all_hold = all_hold && who.has_value();
      Json jr;
      jr["axiom"] = "dictatorship";
      jr["holds"] = who.has_value();
      jr["dictator"] = who ? Json(*who) : Json(nullptr);
      jreports.push_back(std::move(jr));
      text += who ? "dictatorship: holds (voter " + std::to_string(*who) + ")\n"
                  : "dictatorship: violated (no voter is copied on every "
                    "profile)\n";
      continue;
    }
    AxiomReport report;
    if (what == "pareto") {
      report = check_pareto(rule);
    } else if (what == "iia") {
      report = check_iia_pairwise(rule);
    } else {
      report = check_iia_restriction(rule);
    }
    all_hold = all_hold && report.holds;
    jreports.push_back(axiom_report_to_json(report, names));
    text += axiom_name(report.axiom);
    if (report.holds) {
      text += ": holds (scanned " + std::to_string(report.profiles_scanned) + ")\n";
    } else {
      text += ": violated (scanned " + std::to_string(report.profiles_scanned) +
              ", " + std::to_string(report.witnesses.size()) +
              " witnesses kept)\n";
      append_witness_text(text, report.axiom, report.witnesses.front(), names);
    }
  }

  if (args.format == "json") {
    Json out;
    out["rule"] = rule_to_json(rule, names);
    out["reports"] = std::move(jreports);
    out["holds"] = all_hold;
    body = out.dump(2) + "\n";
  } else {
    body = text;
  }
  return all_hold ? 0 : 1;
}

// ---- find-dictator -------------------------------------------------------

struct DictatorArgs {
  RuleArgs rule;
  std::string format = "text";
  std::string certificate_out;
  std::string verify_in;
};

int run_find_dictator(const DictatorArgs& args, std::string& body) {
  const ScfRule rule = load_rule(args.rule);

  if (!args.verify_in.empty()) {
    const DecisiveCertificate cert =
        certificate_from_json(read_json_file(args.verify_in));
    std::vector<std::string> problems;
    const bool ok = verify_certificate(rule, cert, &problems);
    if (args.format == "json") {
      Json out;
      out["valid"] = ok;
      out["problems"] = problems;
      body = out.dump(2) + "\n";
    } else {
      body = ok ? "certificate: replays cleanly\n" : "certificate: INVALID\n";
      for (const auto& p : problems) body += "  " + p + "\n";
    }
    return ok ? 0 : 1;
  }

  const DictatorResult res = find_dictator(rule);
  const Json cert_json = certificate_to_json(res.certificate);
  if (!args.certificate_out.empty()) {
    write_json_file(args.certificate_out, cert_json);
  }

  if (args.format == "json") {
    Json out;
    out["dictator"] = res.dictator;
    out["certificate"] = cert_json;
    body = out.dump(2) + "\n";
  } else {
    long long scanned = 0;
    for (const auto& p : res.certificate.verified_pairs) {
      scanned += p.profiles_checked;
    }
    for (const auto& s : res.certificate.chain) scanned += s.family_size;
    body = "rule: " + rule.describe() + " (n=" + std::to_string(rule.n()) +
           ", m=" + std::to_string(rule.m()) + ")\n";
    body += "dictator: voter " + std::to_string(res.dictator) + "\n";
    body += "chain: " + coalition_chain_text(res.certificate) + "\n";
    body += "pairs verified: " +
            std::to_string(res.certificate.verified_pairs.size()) +
            ", profiles scanned: " + std::to_string(scanned) + "\n";
  }
  return 0;
}

// ---- sperner -------------------------------------------------------------

struct SpernerGenArgs {
  int dim = 2;
  int k = 2;
  std::string labels = "random";
  std::uint64_t seed = 0;
};

int run_sperner_gen(const SpernerGenArgs& args, std::string& body) {
  const Triangulation t = Triangulation::kuhn(args.dim, args.k);
  if (args.labels == "none") {
    body = triangulation_to_json(t).dump(2) + "\n";
    return 0;
  }
  Labeling labels;
  if (args.labels == "random") {
    labels = random_sperner_labeling(t, args.seed);
  } else if (args.labels.rfind("map:", 0) == 0) {
    labels = label_from_map(parse_named_map(args.labels.substr(4), args.dim), t);
  } else {
    throw InputError("unknown labeling '" + args.labels +
                     "' (try random, none, or map:NAME)");
  }
  body = triangulation_to_json(t, &labels).dump(2) + "\n";
  return 0;
}

struct SpernerFileArgs {
  std::string input;
  std::string format = "text";
  std::string method = "both";
};

int run_sperner_validate(const SpernerFileArgs& args, std::string& body) {
  const TriangulationData data = triangulation_from_json(read_json_file(args.input));
  std::string problem;
  try {
    validate_triangulation(data.triangulation);
    if (data.labels) validate_labeling(data.triangulation, *data.labels);
  } catch (const Error& e) {
    problem = e.what();
  }
  const bool ok = problem.empty();
  if (args.format == "json") {
    Json out;
    out["valid"] = ok;
    out["vertices"] = data.triangulation.vertex_count();
    out["cells"] = data.triangulation.cell_count();
    out["labeled"] = data.labels.has_value();
    if (!ok) out["problem"] = problem;
    body = out.dump(2) + "\n";
  } else if (ok) {
    body = "valid: " + std::to_string(data.triangulation.vertex_count()) +
           " vertices, " + std::to_string(data.triangulation.cell_count()) +
           " cells" + (data.labels ? ", labeling admissible" : ", no labels") +
           "\n";
  } else {
    body = "invalid: " + problem + "\n";
  }
  return ok ? 0 : 1;
}

int run_sperner_find(const SpernerFileArgs& args, std::string& body) {
  const TriangulationData data = triangulation_from_json(read_json_file(args.input));
  if (!data.labels) throw InputError("document has no labels to search");
  const Triangulation& t = data.triangulation;
  validate_labeling(t, *data.labels);

  const bool brute = args.method == "brute" || args.method == "both";
  const bool path = args.method == "path" || args.method == "both";
  if (!brute && !path) {
    throw InputError("unknown method '" + args.method +
                     "' (try brute, path, or both)");
  }

  Json out;
  std::string text;
  int code = 0;
  std::vector<long long> all;
  if (brute) {
    all = find_panchromatic_all(t, *data.labels);
    out["panchromatic"] = all;
    text += "panchromatic cells: " + std::to_string(all.size()) + " " +
            cells_text(all) + "\n";
    if (all.empty()) code = 1;
  }
  if (path) {
    const PathResult res = find_panchromatic_path(t, *data.labels);
    Json jp;
    jp["cell"] = res.cell;
    jp["trace"] = res.trace;
    jp["cells_visited"] = res.cells_visited;
    jp["doors_tried"] = res.doors_tried;
    out["path"] = std::move(jp);
    text += "path-following: cell " + std::to_string(res.cell) + " (walk of " +
            std::to_string(res.trace.size()) + ", visited " +
            std::to_string(res.cells_visited) + ", doors tried " +
            std::to_string(res.doors_tried) + ")\n";
    if (brute) {
      const bool agree = std::binary_search(all.begin(), all.end(), res.cell);
      out["agree"] = agree;
      text += agree ? "agreement: path cell is in the brute-force set\n"
                    : "agreement: MISMATCH\n";
      if (!agree) code = 1;
    }
  }
  body = args.format == "json" ? out.dump(2) + "\n" : text;
  return code;
}

// ---- game ----------------------------------------------------------------

struct GameSpernerArgs {
  int dim = 2;
  int k = 2;
  std::string strategy_a = "first-legal";
  std::string strategy_b = "first-legal";
  std::uint64_t seed = 0;
  std::string format = "text";
};

int run_game_sperner(const GameSpernerArgs& args, std::string& body) {
  const Triangulation t = Triangulation::kuhn(args.dim, args.k);
  const GameResult res =
      play_sperner_game(t, strategy_from_name(args.strategy_a),
                        strategy_from_name(args.strategy_b), args.seed);
  if (args.format == "json") {
    body = game_result_to_json(res).dump(2) + "\n";
  } else {
    body = "loser: " + (res.loser ? player_name(*res.loser) : "none") + "\n";
    body += "completing cell: " + std::to_string(res.completing_cell) + "\n";
    body += "moves played: " + std::to_string(res.final_state.history.size()) +
            "\n";
  }
  return 0;
}

struct GameSocialArgs {
  RuleArgs rule;
  int voter = 0;
  int dim = 2;
  int k = 2;
  std::string format = "text";
};

int run_game_social(const GameSocialArgs& args, std::string& body) {
  const ScfRule rule = load_rule(args.rule);
  std::vector<Profile> profiles;
  for (const Profile& p : enumerate_profiles(rule.n(), rule.m())) {
    profiles.push_back(p);
  }
  const Triangulation t = Triangulation::kuhn(args.dim, args.k);
  const GameTranscript tr =
      play_social_choice_game(rule, args.voter, profiles, t);
  const auto verdict = dictator_from_transcript(tr);

  if (args.format == "json") {
    Json out;
    out["transcript"] = transcript_to_json(tr);
    out["dictator"] = verdict ? Json(*verdict) : Json(nullptr);
    body = out.dump(2) + "\n";
  } else {
    body = "rule: " + rule.describe() + " (n=" + std::to_string(rule.n()) +
           ", m=" + std::to_string(rule.m()) + "), voter " +
           std::to_string(args.voter) + " plays A\n";
    body += "rounds: " + std::to_string(tr.rounds.size()) +
            ", board complete: " + (tr.complete ? "yes" : "no") + "\n";
    body += "vertices colored by A: " + std::to_string(tr.tally_a) +
            ", by B: " + std::to_string(tr.tally_b) + "\n";
    body += verdict ? "dictator from transcript: voter " +
                          std::to_string(*verdict) + "\n"
                    : "dictator from transcript: none\n";
  }
  return 0;
}

// ---- fixpoint ------------------------------------------------------------

struct FixpointArgs {
  std::string map = "rotate";
  int dim = 2;
  double eps = 1e-3;
  int k0 = 1;
  int max_k = 1024;
  std::string format = "text";
};

int run_fixpoint(const FixpointArgs& args, std::string& body) {
  const SimplexMap f = parse_named_map(args.map, args.dim);
  const FixedPointResult res = approx_fixed_point(f, args.eps, args.k0, args.max_k);
  if (args.format == "json") {
    Json out = fixed_point_to_json(res);
    out["map"] = f.description;
    body = out.dump(2) + "\n";
  } else {
    std::string point = "(";
    for (std::size_t i = 0; i < res.point.size(); ++i) {
      if (i) point += ", ";
      point += num(res.point[i]);
    }
    point += ")";
    body = "map: " + f.description + " (dim " + std::to_string(f.dim) + ")\n";
    body += "point: " + point + "\n";
    body += "residual: " + num(res.residual) + "\n";
    body += "grid: " + std::to_string(res.subdivision) + " (cell " +
            std::to_string(res.cell) + ", " +
            std::to_string(res.stages.size()) + " stages)\n";
    body += std::string("converged: ") + (res.converged ? "yes" : "no") + "\n";
  }
  return res.converged ? 0 : 1;
}

// ---- render --------------------------------------------------------------

struct RenderArgs {
  std::string input;
  std::string format = "svg";
};

int run_render(const RenderArgs& args, std::string& body) {
  const TriangulationData data = triangulation_from_json(read_json_file(args.input));
  const Labeling* labels = data.labels ? &*data.labels : nullptr;
  body = args.format == "dot" ? render_dot(data.triangulation, labels)
                              : render_svg(data.triangulation, labels);
  return 0;
}

void add_rule_options(CLI::App* cmd, RuleArgs& args) {
  cmd->add_option("--rule", args.spec,
                  "dictator:K | constant:r0,r1,... | borda-lex | plurality-lex "
                  "| copeland-lex | @file.json")
      ->required();
  cmd->add_option("--n", args.n, "number of voters");
  cmd->add_option("--m", args.m, "number of alternatives");
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"axiom checks, labeled boards, and the bridges between them"};
  app.require_subcommand(1);

  int jobs = 1;
  app.add_option("--jobs", jobs,
                 "worker budget for exhaustive scans (reserved; scans "
                 "currently run on one thread)")
      ->envname("IMPOSSIBILITY_LAB_JOBS")
      ->check(CLI::PositiveNumber);

  std::string out_path;

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify-scf", "exhaustively check axioms");
  add_rule_options(verify, verify_args.rule);
  verify->add_option("--check", verify_args.check, "which axiom to check")
      ->check(CLI::IsMember({"pareto", "iia", "iia-restriction", "dictatorship",
                             "all"}));
  add_format_option(verify, verify_args.format);

  DictatorArgs dict_args;
  auto* dict = app.add_subcommand(
      "find-dictator", "contract decisive coalitions down to one voter");
  add_rule_options(dict, dict_args.rule);
  add_format_option(dict, dict_args.format);
  dict->add_option("--certificate", dict_args.certificate_out,
                   "also write the certificate to this file");
  dict->add_option("--verify", dict_args.verify_in,
                   "replay a certificate file instead of searching");

  auto* sperner = app.add_subcommand("sperner", "triangulations and labelings");
  sperner->require_subcommand(1);
  SpernerGenArgs gen_args;
  auto* gen = sperner->add_subcommand("gen", "generate a labeled grid");
  gen->add_option("--dim", gen_args.dim, "simplex dimension (1-4)");
  gen->add_option("--k", gen_args.k, "subdivisions per edge");
  gen->add_option("--labels", gen_args.labels, "random | none | map:NAME");
  gen->add_option("--seed", gen_args.seed, "labeling seed");

  SpernerFileArgs validate_args;
  auto* validate = sperner->add_subcommand("validate", "check a board file");
  validate->add_option("--input", validate_args.input, "board file")->required();
  add_format_option(validate, validate_args.format);

  SpernerFileArgs find_args;
  auto* find = sperner->add_subcommand("find", "find panchromatic cells");
  find->add_option("--input", find_args.input, "board file")->required();
  find->add_option("--method", find_args.method, "brute | path | both")
      ->check(CLI::IsMember({"brute", "path", "both"}));
  add_format_option(find, find_args.format);

  auto* game = app.add_subcommand("game", "play the board games");
  game->require_subcommand(1);
  GameSpernerArgs gsp_args;
  auto* gsp = game->add_subcommand("sperner", "two players color a grid");
  gsp->add_option("--dim", gsp_args.dim, "simplex dimension (1-4)");
  gsp->add_option("--k", gsp_args.k, "subdivisions per edge");
  gsp->add_option("--strategy-a", gsp_args.strategy_a,
                  "first-legal | uniform-random | avoid-losing");
  gsp->add_option("--strategy-b", gsp_args.strategy_b,
                  "first-legal | uniform-random | avoid-losing");
  gsp->add_option("--seed", gsp_args.seed, "shared move seed");
  add_format_option(gsp, gsp_args.format);

  GameSocialArgs gso_args;
  auto* gso = game->add_subcommand(
      "social", "a voter against the rest of a rule family");
  add_rule_options(gso, gso_args.rule);
  gso->add_option("--voter", gso_args.voter, "which voter plays A");
  gso->add_option("--dim", gso_args.dim, "board dimension");
  gso->add_option("--k", gso_args.k, "board subdivisions");
  add_format_option(gso, gso_args.format);

  FixpointArgs fix_args;
  auto* fix = app.add_subcommand("fixpoint",
                                 "approximate a fixed point of a simplex map");
  fix->add_option("--map", fix_args.map,
                  "identity | rotate | const:c0,c1,... | squash:t");
  fix->add_option("--dim", fix_args.dim, "simplex dimension (1-4)");
  fix->add_option("--eps", fix_args.eps, "residual target");
  fix->add_option("--k0", fix_args.k0, "first grid size");
  fix->add_option("--max-k", fix_args.max_k, "grid size cap");
  add_format_option(fix, fix_args.format);

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "draw a 2-dimensional board");
  render->add_option("--input", render_args.input, "board file")->required();
  render->add_option("--format", render_args.format, "picture format")
      ->check(CLI::IsMember({"svg", "dot"}));

  for (CLI::App* sub :
       {verify, dict, gen, validate, find, gsp, gso, fix, render}) {
    sub->add_option("--output", out_path, "write the report here instead of stdout");
    sub->fallthrough();
  }
  sperner->fallthrough();
  game->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string body;
  int code = 0;
  try {
    if (verify->parsed()) {
      code = run_verify(verify_args, body);
    } else if (dict->parsed()) {
      code = run_find_dictator(dict_args, body);
    } else if (gen->parsed()) {
      code = run_sperner_gen(gen_args, body);
    } else if (validate->parsed()) {
      code = run_sperner_validate(validate_args, body);
    } else if (find->parsed()) {
      code = run_sperner_find(find_args, body);
    } else if (gsp->parsed()) {
      code = run_game_sperner(gsp_args, body);
    } else if (gso->parsed()) {
      code = run_game_social(gso_args, body);
    } else if (fix->parsed()) {
      code = run_fixpoint(fix_args, body);
    } else if (render->parsed()) {
      code = run_render(render_args, body);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidTableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedRuleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cout << e.what() << "\n";
    return 1;
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << body;
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
  } else {
    std::cout << body;
  }
  return code;
}
