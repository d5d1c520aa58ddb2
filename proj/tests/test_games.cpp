#include "implab/games.hpp"

#include <doctest.h>

#include <algorithm>

#include "implab/errors.hpp"

using namespace implab;

namespace {

std::vector<Profile> all_profiles(int n, int m) {
  std::vector<Profile> out;
  for (const Profile& p : enumerate_profiles(n, m)) out.push_back(p);
  return out;
}

// Replays a finished game and checks the loss was called at the exact move
// that completed the cell.
void check_loss_attribution(const Triangulation& t, const GameResult& res) {
  REQUIRE(res.loser.has_value());
  REQUIRE(res.completing_cell >= 0);
  const auto cell = t.cell_vertices(res.completing_cell);
  std::vector<int> labels(static_cast<std::size_t>(t.vertex_count()), -1);
  const auto& hist = res.final_state.history;
  for (std::size_t i = 0; i < hist.size(); ++i) {
    labels[static_cast<std::size_t>(hist[i].vertex)] = hist[i].label;
    int mask = 0;
    bool full = true;
    for (long long v : cell) {
      const int l = labels[static_cast<std::size_t>(v)];
      if (l < 0) {
        full = false;
        break;
      }
      mask |= 1 << l;
    }
    const bool pan = full && mask == (1 << (t.dim() + 1)) - 1;
    if (i + 1 < hist.size()) {
      CHECK_FALSE(pan);
    } else {
      CHECK(pan);
      CHECK(hist[i].mover == *res.loser);
      CHECK(std::find(cell.begin(), cell.end(), hist[i].vertex) != cell.end());
    }
  }
}

}  // namespace

TEST_CASE("legal moves enumerate free vertices with their carriers") {
  auto t1 = Triangulation::kuhn(2, 1);
  auto s = GameState::fresh(t1);
  const auto moves = legal_moves(s);
  REQUIRE(moves.size() == 3);
  CHECK(moves[0] == Move{0, 2});
  CHECK(moves[1] == Move{1, 1});
  CHECK(moves[2] == Move{2, 0});

  auto t2 = Triangulation::kuhn(2, 2);
  CHECK(legal_moves(GameState::fresh(t2)).size() == 9);

  for (const Move& m : moves) apply_move(s, m);
  CHECK(legal_moves(s).empty());
}

TEST_CASE("moves are validated and recorded") {
  auto t = Triangulation::kuhn(2, 2);
  auto s = GameState::fresh(t);
  CHECK(s.mover == Player::A);
  apply_move(s, Move{1, 2});
  CHECK(s.mover == Player::B);
  CHECK(s.labels[1] == 2);
  CHECK(s.colorer[1] == 0);
  REQUIRE(s.history.size() == 1);
  CHECK(s.history[0].vertex == 1);
  CHECK(s.history[0].mover == Player::A);

  CHECK_THROWS_AS(apply_move(s, Move{1, 1}), IllegalMoveError);   // taken
  CHECK_THROWS_AS(apply_move(s, Move{9, 0}), IllegalMoveError);   // off board
  CHECK_THROWS_AS(apply_move(s, Move{0, 0}), IllegalMoveError);   // not in carrier
  CHECK(s.mover == Player::B);
  CHECK(s.history.size() == 1);
}

TEST_CASE("on the one-cell board the first player always loses on move 3") {
  auto t = Triangulation::kuhn(2, 1);
  const Strategy all[] = {Strategy::FirstLegal, Strategy::UniformRandom,
                          Strategy::AvoidLosing};
  for (Strategy a : all) {
    for (Strategy b : all) {
      const auto res = play_sperner_game(t, a, b, 3);
      CHECK(res.loser == Player::A);
      CHECK(res.completing_cell == 0);
      CHECK(res.final_state.history.size() == 3);
      check_loss_attribution(t, res);
    }
  }
}

TEST_CASE("random play never draws and losses replay exactly") {
  auto t = Triangulation::kuhn(2, 4);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto res =
        play_sperner_game(t, Strategy::UniformRandom, Strategy::UniformRandom, seed);
    REQUIRE(res.loser.has_value());
    check_loss_attribution(t, res);
    // Colored vertices respect the carrier rule throughout.
    for (long long v = 0; v < t.vertex_count(); ++v) {
      const int l = res.final_state.labels[static_cast<std::size_t>(v)];
      if (l < 0) continue;
      const auto carrier = t.carrier(v);
      CHECK(std::find(carrier.begin(), carrier.end(), l) != carrier.end());
    }
  }
}

TEST_CASE("cautious players still lose eventually") {
  auto t = Triangulation::kuhn(2, 2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto res =
        play_sperner_game(t, Strategy::AvoidLosing, Strategy::AvoidLosing, seed);
    CHECK(res.loser.has_value());
    check_loss_attribution(t, res);
  }
  const auto mixed =
      play_sperner_game(t, Strategy::AvoidLosing, Strategy::UniformRandom, 1);
  CHECK(mixed.loser.has_value());
}

TEST_CASE("seeded play is reproducible") {
  auto t = Triangulation::kuhn(2, 4);
  const auto a =
      play_sperner_game(t, Strategy::UniformRandom, Strategy::UniformRandom, 11);
  const auto b =
      play_sperner_game(t, Strategy::UniformRandom, Strategy::UniformRandom, 11);
  CHECK(a.loser == b.loser);
  CHECK(a.completing_cell == b.completing_cell);
  REQUIRE(a.final_state.history.size() == b.final_state.history.size());
  for (std::size_t i = 0; i < a.final_state.history.size(); ++i) {
    CHECK(a.final_state.history[i].vertex == b.final_state.history[i].vertex);
    CHECK(a.final_state.history[i].label == b.final_state.history[i].label);
  }
}

TEST_CASE("a dictator playing as A colors the whole board alone") {
  auto t = Triangulation::kuhn(2, 2);
  const auto tr = play_social_choice_game(ScfRule::dictator(0, 3, 3), 0,
                                          all_profiles(3, 3), t);
  CHECK(tr.rounds.size() == 216);
  CHECK(tr.complete);
  CHECK(tr.tally_a == 6);
  CHECK(tr.tally_b == 0);
  for (const auto& r : tr.rounds) CHECK(r.action == RoundAction::AColors);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(tr.rounds[i].vertex == static_cast<long long>(i));
    CHECK(tr.rounds[i].label >= 0);
  }
  for (std::size_t i = 6; i < tr.rounds.size(); ++i) {
    CHECK(tr.rounds[i].vertex == -1);
  }
  CHECK(dictator_from_transcript(tr) == 0);
}

TEST_CASE("a non-dictator playing as A shares the board") {
  auto t = Triangulation::kuhn(2, 2);
  const auto tr = play_social_choice_game(ScfRule::dictator(0, 2, 3), 1,
                                          all_profiles(2, 3), t);
  CHECK(tr.rounds.size() == 36);
  CHECK(tr.complete);
  CHECK(tr.tally_a == 1);
  CHECK(tr.tally_b == 5);
  CHECK(tr.rounds[0].action == RoundAction::AColors);
  CHECK(tr.rounds[1].action == RoundAction::BColors);
  CHECK_FALSE(dictator_from_transcript(tr).has_value());
}

TEST_CASE("the transcript flags the dictator exactly when A is that voter") {
  auto t = Triangulation::kuhn(2, 2);
  const auto profiles = all_profiles(3, 3);
  for (int d = 0; d < 3; ++d) {
    const auto family = ScfRule::dictator(d, 3, 3);
    for (int j = 0; j < 3; ++j) {
      const auto verdict =
          dictator_from_transcript(play_social_choice_game(family, j, profiles, t));
      if (j == d) {
        CHECK(verdict == d);
      } else {
        CHECK_FALSE(verdict.has_value());
      }
    }
  }
}

TEST_CASE("rule families without a dictator still produce transcripts") {
  auto t = Triangulation::kuhn(2, 1);
  const auto tr = play_social_choice_game(ScfRule::borda_lex(2, 3), 0,
                                          all_profiles(2, 3), t);
  CHECK(tr.rounds.size() == 36);
  CHECK(tr.voter_a == 0);
  long long colored = 0;
  for (int l : tr.labels) colored += l >= 0 ? 1 : 0;
  CHECK(colored == tr.tally_a + tr.tally_b);
}

TEST_CASE("a cut-short profile list leaves the board incomplete") {
  auto t = Triangulation::kuhn(2, 2);
  auto profiles = all_profiles(2, 3);
  profiles.erase(profiles.begin() + 3, profiles.end());
  const auto tr =
      play_social_choice_game(ScfRule::dictator(0, 2, 3), 0, profiles, t);
  CHECK_FALSE(tr.complete);
  CHECK(tr.tally_b == 0);
  CHECK_FALSE(dictator_from_transcript(tr).has_value());
}

TEST_CASE("the social game rejects unusable rules") {
  auto t = Triangulation::kuhn(2, 1);
  std::vector<std::pair<Profile, Ranking>> entries;
  for (const Profile& p : enumerate_profiles(2, 3)) {
    entries.emplace_back(p, p.ranking_of(0));
  }
  const auto table = ScfRule::table(2, 3, entries);
  CHECK_THROWS_AS(play_social_choice_game(table, 0, all_profiles(2, 3), t),
                  UnsupportedRuleError);
  CHECK_THROWS_AS(play_social_choice_game(ScfRule::dictator(0, 1, 3), 0,
                                          all_profiles(1, 3), t),
                  InputError);
  CHECK_THROWS_AS(play_social_choice_game(ScfRule::dictator(0, 2, 3), 2,
                                          all_profiles(2, 3), t),
                  InputError);
}

TEST_CASE("a certified dictator colors a board straight to a multicolored cell") {
  auto t1 = Triangulation::kuhn(2, 1);
  const auto simple = panchromatic_from_dictator(ScfRule::dictator(1, 2, 3), t1,
                                                 Strategy::FirstLegal, 0);
  CHECK(simple.dictator == 1);
  CHECK(simple.cell == 0);
  for (long long v = 0; v < t1.vertex_count(); ++v) {
    CHECK(simple.labels[static_cast<std::size_t>(v)] == t1.carrier(v).front());
  }

  auto t = Triangulation::kuhn(2, 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto res = panchromatic_from_dictator(ScfRule::dictator(0, 2, 3), t,
                                                Strategy::UniformRandom, seed);
    CHECK(res.dictator == 0);
    validate_labeling(t, res.labels);
    const auto all = find_panchromatic_all(t, res.labels);
    CHECK(std::binary_search(all.begin(), all.end(), res.cell));
  }
}

TEST_CASE("the coloring bridge refuses rules that fail the axioms") {
  auto t = Triangulation::kuhn(2, 2);
  CHECK_THROWS_AS(panchromatic_from_dictator(ScfRule::borda_lex(2, 3), t,
                                             Strategy::FirstLegal, 0),
                  PreconditionFailedError);
  CHECK_THROWS_AS(panchromatic_from_dictator(ScfRule::dictator(0, 2, 3), t,
                                             Strategy::AvoidLosing, 0),
                  InputError);
}

TEST_CASE("strategy names round-trip") {
  for (Strategy s : {Strategy::FirstLegal, Strategy::UniformRandom,
                     Strategy::AvoidLosing}) {
    CHECK(strategy_from_name(strategy_name(s)) == s);
  }
  CHECK_THROWS_AS(strategy_from_name("bold"), InputError);
  CHECK(player_name(Player::A) == "A");
  CHECK(round_action_name(RoundAction::Skip) == "skip");
}
