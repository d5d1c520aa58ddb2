#include "implab/games.hpp"

#include <algorithm>

#include "implab/decisive.hpp"
#include "implab/errors.hpp"
#include "implab/rng.hpp"

namespace implab {

namespace {

void require_input(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

// Lowest-index cell that is fully colored with all dim+1 colors, or -1.
long long first_completed_panchromatic(const Triangulation& t,
                                       const std::vector<int>& labels) {
  const int full = (1 << (t.dim() + 1)) - 1;
  for (long long c = 0; c < t.cell_count(); ++c) {
    int mask = 0;
    for (long long v : t.cell_vertices(c)) {
      const int l = labels[static_cast<std::size_t>(v)];
      if (l < 0) {
        mask = -1;
        break;
      }
      mask |= 1 << l;
    }
    if (mask == full) return c;
  }
  return -1;
}

bool move_completes_cell(const Triangulation& t, std::vector<int>& labels, Move m) {
  labels[static_cast<std::size_t>(m.vertex)] = m.label;
  const bool completes = first_completed_panchromatic(t, labels) >= 0;
  labels[static_cast<std::size_t>(m.vertex)] = -1;
  return completes;
}

Move choose_move(const GameState& s, const std::vector<Move>& moves, Strategy st,
                 std::mt19937_64& gen) {
  switch (st) {
    case Strategy::FirstLegal:
      return moves.front();
    case Strategy::UniformRandom:
      return moves[static_cast<std::size_t>(
          rand_below(gen, static_cast<std::uint64_t>(moves.size())))];
    case Strategy::AvoidLosing: {
      auto labels = s.labels;
      for (const Move& m : moves) {
        if (!move_completes_cell(*s.board, labels, m)) return m;
      }
      return moves.front();
    }
  }
  throw InternalInvariantBroken("unknown strategy");
}

}  // namespace

std::string player_name(Player p) { return p == Player::A ? "A" : "B"; }

Strategy strategy_from_name(const std::string& name) {
  if (name == "first-legal") return Strategy::FirstLegal;
  if (name == "uniform-random") return Strategy::UniformRandom;
  if (name == "avoid-losing") return Strategy::AvoidLosing;
  throw InputError("unknown strategy '" + name + "'");
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::FirstLegal:
      return "first-legal";
    case Strategy::UniformRandom:
      return "uniform-random";
    case Strategy::AvoidLosing:
      return "avoid-losing";
  }
  throw InternalInvariantBroken("unknown strategy");
}

std::string round_action_name(RoundAction a) {
  switch (a) {
    case RoundAction::AColors:
      return "A-colors";
    case RoundAction::BColors:
      return "B-colors";
    case RoundAction::Skip:
      return "skip";
  }
  throw InternalInvariantBroken("unknown action");
}

GameState GameState::fresh(const Triangulation& t) {
  GameState s;
  s.board = &t;
  s.labels.assign(static_cast<std::size_t>(t.vertex_count()), -1);
  s.colorer.assign(static_cast<std::size_t>(t.vertex_count()), -1);
  return s;
}

std::vector<Move> legal_moves(const GameState& s) {
  std::vector<Move> out;
  for (long long v = 0; v < s.board->vertex_count(); ++v) {
    if (s.labels[static_cast<std::size_t>(v)] >= 0) continue;
    for (int l : s.board->carrier(v)) out.push_back(Move{v, l});
  }
  return out;
}

void apply_move(GameState& s, Move m) {
  if (m.vertex < 0 || m.vertex >= s.board->vertex_count()) {
    throw IllegalMoveError("vertex " + std::to_string(m.vertex) + " is off the board");
  }
  if (s.labels[static_cast<std::size_t>(m.vertex)] >= 0) {
    throw IllegalMoveError("vertex " + std::to_string(m.vertex) + " is already colored");
  }
  const auto carrier = s.board->carrier(m.vertex);
  if (std::find(carrier.begin(), carrier.end(), m.label) == carrier.end()) {
    throw IllegalMoveError("label " + std::to_string(m.label) +
                           " is outside the carrier of vertex " +
                           std::to_string(m.vertex));
  }
  s.labels[static_cast<std::size_t>(m.vertex)] = m.label;
  s.colorer[static_cast<std::size_t>(m.vertex)] = s.mover == Player::A ? 0 : 1;
  s.history.push_back(GameState::HistoryEntry{m.vertex, m.label, s.mover});
  s.mover = s.mover == Player::A ? Player::B : Player::A;
}

GameResult play_sperner_game(const Triangulation& t, Strategy strategy_a,
                             Strategy strategy_b, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  GameResult res;
  res.final_state = GameState::fresh(t);
  GameState& s = res.final_state;
  for (;;) {
    const auto moves = legal_moves(s);
    if (moves.empty()) break;
    const Player mover = s.mover;
    const Move m =
        choose_move(s, moves, mover == Player::A ? strategy_a : strategy_b, gen);
    apply_move(s, m);
    const long long cell = first_completed_panchromatic(t, s.labels);
    if (cell >= 0) {
      res.loser = mover;
      res.completing_cell = cell;
      return res;
    }
  }
  throw InternalInvariantBroken("the board filled up without a loser");
}

GameTranscript play_social_choice_game(const ScfRule& family, int voter,
                                       const std::vector<Profile>& profiles,
                                       const Triangulation& t) {
  if (!family.is_family()) {
    throw UnsupportedRuleError(
        "this game needs a rule family defined at every society size");
  }
  const int n = family.n();
  require_input(n >= 2, "the game needs at least two voters");
  require_input(voter >= 0 && voter < n, "player A's voter index is out of range");

  const ScfRule sub = family.with_society_size(n - 1);
  GameTranscript tr;
  tr.voter_a = voter;
  tr.labels.assign(static_cast<std::size_t>(t.vertex_count()), -1);
  tr.colorer.assign(static_cast<std::size_t>(t.vertex_count()), -1);
  long long cursor = 0;

  for (const Profile& p : profiles) {
    const Ranking a_ranking = p.ranking_of(voter);
    std::vector<Ranking> others;
    others.reserve(static_cast<std::size_t>(n - 1));
    for (int v = 0; v < n; ++v) {
      if (v != voter) others.push_back(p.ranking_of(v));
    }
    const Ranking b_ranking = sub.evaluate(Profile(others));
    const Ranking social = family.evaluate(p);

    RoundAction action = RoundAction::Skip;
    if (a_ranking == social) {
      action = RoundAction::AColors;  // ties go to A
    } else if (b_ranking == social) {
      action = RoundAction::BColors;
    }

    long long vertex = -1;
    int label = -1;
    if (action != RoundAction::Skip && cursor < t.vertex_count()) {
      vertex = cursor++;
      label = t.carrier(vertex).front();
      tr.labels[static_cast<std::size_t>(vertex)] = label;
      const int who = action == RoundAction::AColors ? 0 : 1;
      tr.colorer[static_cast<std::size_t>(vertex)] = who;
      (who == 0 ? tr.tally_a : tr.tally_b) += 1;
    }
    tr.rounds.push_back(
        GameRound{p, a_ranking, b_ranking, social, action, vertex, label});
  }
  tr.complete = cursor == t.vertex_count();
  return tr;
}

std::optional<int> dictator_from_transcript(const GameTranscript& tr) {
  if (!tr.complete || tr.tally_b != 0) return std::nullopt;
  for (const GameRound& r : tr.rounds) {
    if (r.action == RoundAction::BColors) return std::nullopt;
  }
  for (int who : tr.colorer) {
    if (who != 0) return std::nullopt;
  }
  return tr.voter_a;
}

DictatorColoring panchromatic_from_dictator(const ScfRule& family,
                                            const Triangulation& t,
                                            Strategy labeler, std::uint64_t seed) {
  require_input(labeler == Strategy::FirstLegal || labeler == Strategy::UniformRandom,
                "labeling policy must be first-legal or uniform-random");
  DictatorColoring out;
  out.dictator = find_dictator(family).dictator;

  std::mt19937_64 gen(seed);
  out.labels.assign(static_cast<std::size_t>(t.vertex_count()), -1);
  for (long long v = 0; v < t.vertex_count(); ++v) {
    const auto carrier = t.carrier(v);
    const std::size_t pick =
        labeler == Strategy::FirstLegal
            ? 0
            : static_cast<std::size_t>(
                  rand_below(gen, static_cast<std::uint64_t>(carrier.size())));
    out.labels[static_cast<std::size_t>(v)] = carrier[pick];
  }
  out.cell = find_panchromatic_path(t, out.labels).cell;
  return out;
}

}  // namespace implab
