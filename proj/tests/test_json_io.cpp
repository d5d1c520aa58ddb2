#include "implab/json_io.hpp"

#include <doctest.h>

#include <cstdio>

#include "implab/errors.hpp"

using namespace implab;

namespace {

const std::vector<std::string> kAbc = {"a", "b", "c"};

std::string fixture_path(const std::string& name) {
  return std::string(IMPLAB_FIXTURE_DIR) + "/" + name;
}

bool same_witness(const AxiomWitness& x, const AxiomWitness& y) {
  return x.a == y.a && x.b == y.b && x.profiles == y.profiles &&
         x.socials == y.socials && x.removed == y.removed;
}

}  // namespace

TEST_CASE("rankings and profiles serialize as name lists") {
  const Ranking r({2, 0, 1});
  const Json j = ranking_to_json(r, kAbc);
  CHECK(j.dump() == R"(["c","a","b"])");
  CHECK(ranking_from_json(j, kAbc) == r);

  const Profile p({Ranking({0, 1, 2}), Ranking({1, 2, 0})});
  CHECK(profile_from_json(profile_to_json(p, kAbc), kAbc) == p);

  CHECK_THROWS_AS(ranking_from_json(Json::parse(R"(["a","b","z"])"), kAbc),
                  InputError);
  CHECK_THROWS_AS(ranking_from_json(Json::parse(R"(["a","b"])"), kAbc), InputError);
  CHECK_THROWS_AS(ranking_from_json(Json::parse(R"(["a","b","b"])"), kAbc),
                  InputError);
}

TEST_CASE("every rule kind survives a round trip") {
  std::vector<std::pair<Profile, Ranking>> entries;
  for (const Profile& p : enumerate_profiles(2, 3)) {
    entries.emplace_back(p, p.ranking_of(1));
  }
  const ScfRule rules[] = {ScfRule::dictator(1, 3, 3),
                           ScfRule::constant(Ranking({2, 0, 1}), 2),
                           ScfRule::borda_lex(2, 3),
                           ScfRule::plurality_lex(3, 3),
                           ScfRule::copeland_lex(2, 4),
                           ScfRule::table(2, 3, entries)};
  for (const ScfRule& rule : rules) {
    const ScfRule back = rule_from_json(rule_to_json(rule));
    CHECK(back.kind() == rule.kind());
    CHECK(back.n() == rule.n());
    CHECK(back.m() == rule.m());
    for (const Profile& p : enumerate_profiles(rule.n(), rule.m())) {
      REQUIRE(back.evaluate(p) == rule.evaluate(p));
    }
  }
}

TEST_CASE("rule documents are validated on load") {
  CHECK_THROWS_AS(rule_from_json(Json::parse(
                      R"({"kind":"veto","n":2,"alternatives":["a","b","c"]})")),
                  InputError);
  CHECK_THROWS_AS(rule_from_json(Json::parse(
                      R"({"kind":"dictator","i":5,"n":2,"alternatives":["a","b","c"]})")),
                  InputError);
  CHECK_THROWS_AS(rule_from_json(Json::parse(
                      R"({"kind":"borda-lex","n":2,"alternatives":["a","a","c"]})")),
                  InputError);
  CHECK_THROWS_AS(rule_from_json(Json::parse(R"({"kind":"borda-lex","n":2})")),
                  InputError);
  CHECK_THROWS_AS(
      rule_from_json(Json::parse(
          R"({"kind":"table","n":1,"alternatives":["a","b"],"entries":[]})")),
      InvalidTableError);
}

TEST_CASE("axiom reports round-trip and their witnesses replay") {
  const auto rule = ScfRule::borda_lex(2, 3);
  const AxiomReport report = check_iia_pairwise(rule);
  REQUIRE_FALSE(report.holds);
  REQUIRE_FALSE(report.witnesses.empty());

  const AxiomReport back = axiom_report_from_json(axiom_report_to_json(report));
  CHECK(back.axiom == report.axiom);
  CHECK(back.holds == report.holds);
  CHECK(back.profiles_scanned == report.profiles_scanned);
  REQUIRE(back.witnesses.size() == report.witnesses.size());
  for (std::size_t i = 0; i < back.witnesses.size(); ++i) {
    CHECK(same_witness(back.witnesses[i], report.witnesses[i]));
    CHECK(replay_witness(rule, back.axiom, back.witnesses[i]));
  }

  const AxiomReport clean = check_pareto(rule);
  const AxiomReport clean_back = axiom_report_from_json(axiom_report_to_json(clean));
  CHECK(clean_back.holds);
  CHECK(clean_back.witnesses.empty());
  CHECK(clean_back.profiles_scanned == clean.profiles_scanned);
}

TEST_CASE("restriction witnesses keep their shrunken rankings straight") {
  const auto rule = ScfRule::borda_lex(2, 3);
  const AxiomReport report = check_iia_restriction(rule);
  REQUIRE_FALSE(report.holds);
  REQUIRE_FALSE(report.witnesses.empty());
  const AxiomReport back = axiom_report_from_json(axiom_report_to_json(report));
  REQUIRE(back.witnesses.size() == report.witnesses.size());
  for (std::size_t i = 0; i < back.witnesses.size(); ++i) {
    CHECK(same_witness(back.witnesses[i], report.witnesses[i]));
    CHECK(replay_witness(rule, back.axiom, back.witnesses[i]));
  }
}

TEST_CASE("dictator certificates replay after a round trip") {
  const auto rule = ScfRule::dictator(1, 3, 3);
  const DictatorResult found = find_dictator(rule);
  const DecisiveCertificate back =
      certificate_from_json(certificate_to_json(found.certificate));
  CHECK(back.coalition == found.certificate.coalition);
  CHECK(back.chain.size() == found.certificate.chain.size());
  CHECK(verify_certificate(rule, back));

  Json doctored = certificate_to_json(found.certificate);
  doctored["chain"][0]["family_size"] = 7;
  std::vector<std::string> problems;
  CHECK_FALSE(verify_certificate(rule, certificate_from_json(doctored), &problems));
  CHECK_FALSE(problems.empty());
}

TEST_CASE("grids with labels round-trip through their document form") {
  auto t = Triangulation::kuhn(2, 3);
  const Labeling labels = random_sperner_labeling(t, 5);
  const Json j = triangulation_to_json(t, &labels);
  const TriangulationData data = triangulation_from_json(j);
  CHECK(data.triangulation.dim() == 2);
  CHECK(data.triangulation.denom() == 3);
  CHECK(data.triangulation.vertex_count() == t.vertex_count());
  CHECK(data.triangulation.cell_count() == t.cell_count());
  REQUIRE(data.labels.has_value());
  CHECK(*data.labels == labels);
  for (long long v = 0; v < t.vertex_count(); ++v) {
    CHECK(data.triangulation.vertex_coords(v) == t.vertex_coords(v));
  }
  CHECK(find_panchromatic_all(data.triangulation, *data.labels) ==
        find_panchromatic_all(t, labels));
}

TEST_CASE("the bundled figure loads, validates, and has three rainbow cells") {
  const Json j = read_json_file(fixture_path("paper_fig_2d.json"));
  const TriangulationData data = triangulation_from_json(j);
  const Triangulation& t = data.triangulation;
  CHECK(t.vertex_count() == 9);
  CHECK(t.cell_count() == 8);
  CHECK_FALSE(t.is_kuhn());
  validate_triangulation(t);
  REQUIRE(data.labels.has_value());
  validate_labeling(t, *data.labels);
  CHECK(data.labels->front() == 0);  // the 1-based file converts on load

  const auto pan = find_panchromatic_all(t, *data.labels);
  CHECK(pan == std::vector<long long>{0, 5, 6});
  const auto path = find_panchromatic_path(t, *data.labels);
  CHECK(std::binary_search(pan.begin(), pan.end(), path.cell));
}

TEST_CASE("label bases other than 0 and 1 are rejected") {
  Json j = triangulation_to_json(Triangulation::kuhn(2, 1));
  j["labels"] = {3, 2, 1};
  j["labels_base"] = 2;
  CHECK_THROWS_AS(triangulation_from_json(j), InputError);
}

TEST_CASE("game results rebuild from their recorded history") {
  auto t = Triangulation::kuhn(2, 2);
  const GameResult res =
      play_sperner_game(t, Strategy::UniformRandom, Strategy::UniformRandom, 7);
  const Json j = game_result_to_json(res);
  const GameResult back = game_result_from_json(j, t);
  CHECK(back.loser == res.loser);
  CHECK(back.completing_cell == res.completing_cell);
  CHECK(back.final_state.labels == res.final_state.labels);
  CHECK(back.final_state.colorer == res.final_state.colorer);

  Json doctored = j;
  doctored["labels"][0] = (j["labels"][0].get<int>() + 1) % 3;
  CHECK_THROWS_AS(game_result_from_json(doctored, t), InputError);
}

TEST_CASE("transcripts round-trip with full round records") {
  auto t = Triangulation::kuhn(2, 2);
  std::vector<Profile> profiles;
  for (const Profile& p : enumerate_profiles(2, 3)) profiles.push_back(p);
  const GameTranscript tr =
      play_social_choice_game(ScfRule::dictator(0, 2, 3), 0, profiles, t);
  const GameTranscript back = transcript_from_json(transcript_to_json(tr));
  CHECK(back.voter_a == tr.voter_a);
  CHECK(back.complete == tr.complete);
  CHECK(back.tally_a == tr.tally_a);
  CHECK(back.tally_b == tr.tally_b);
  CHECK(back.labels == tr.labels);
  CHECK(back.colorer == tr.colorer);
  REQUIRE(back.rounds.size() == tr.rounds.size());
  for (std::size_t i = 0; i < back.rounds.size(); ++i) {
    CHECK(back.rounds[i].profile == tr.rounds[i].profile);
    CHECK(back.rounds[i].social == tr.rounds[i].social);
    CHECK(back.rounds[i].action == tr.rounds[i].action);
    CHECK(back.rounds[i].vertex == tr.rounds[i].vertex);
  }
  CHECK(dictator_from_transcript(back) == dictator_from_transcript(tr));
}

TEST_CASE("fixed point results round-trip exactly") {
  const FixedPointResult res = approx_fixed_point(rotate_map(2), 1e-3, 1, 64);
  const FixedPointResult back = fixed_point_from_json(fixed_point_to_json(res));
  CHECK(back.point == res.point);
  CHECK(back.residual == res.residual);
  CHECK(back.subdivision == res.subdivision);
  CHECK(back.cell == res.cell);
  CHECK(back.converged == res.converged);
  CHECK(back.stages.size() == res.stages.size());
}

TEST_CASE("file helpers report unreadable paths") {
  CHECK_THROWS_AS(read_json_file("/no/such/file.json"), InputError);

  const std::string path = "tmp_json_io_test.json";
  const Json j = rule_to_json(ScfRule::borda_lex(2, 3));
  write_json_file(path, j);
  CHECK(read_json_file(path) == j);
  std::remove(path.c_str());
}
