#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "implab/scf.hpp"
#include "implab/sperner.hpp"

namespace implab {

enum class Player { A, B };

std::string player_name(Player p);

enum class Strategy { FirstLegal, UniformRandom, AvoidLosing };

Strategy strategy_from_name(const std::string& name);
std::string strategy_name(Strategy s);

struct Move {
  long long vertex = -1;
  int label = -1;
  bool operator==(const Move&) const = default;
};

// Alternating coloring on a triangulation. The board pointer refers to the
// triangulation the state was created from and must outlive the state.
struct GameState {
  const Triangulation* board = nullptr;
  std::vector<int> labels;   // -1 while uncolored
  std::vector<int> colorer;  // -1, or 0 for A, 1 for B
  Player mover = Player::A;
  struct HistoryEntry {
    long long vertex;
    int label;
    Player mover;
  };
  std::vector<HistoryEntry> history;

  static GameState fresh(const Triangulation& t);
};

// All (free vertex, admissible label) pairs, ascending.
std::vector<Move> legal_moves(const GameState& s);

// Validates against the coloring rule, records history, flips the mover.
void apply_move(GameState& s, Move m);

struct GameResult {
  std::optional<Player> loser;
  long long completing_cell = -1;
  GameState final_state;
};

// Players alternate starting with A; whoever completes the first fully
// multicolored cell loses. A finished board without a loser cannot happen.
GameResult play_sperner_game(const Triangulation& t, Strategy strategy_a,
                             Strategy strategy_b, std::uint64_t seed);

enum class RoundAction { AColors, BColors, Skip };

std::string round_action_name(RoundAction a);

struct GameRound {
  Profile profile;
  Ranking a_ranking;
  Ranking b_ranking;
  Ranking social;
  RoundAction action = RoundAction::Skip;
  long long vertex = -1;  // -1: nothing colored this round
  int label = -1;
};

struct GameTranscript {
  int voter_a = -1;  // which voter plays as A
  std::vector<GameRound> rounds;
  Labeling labels;           // -1 where never colored
  std::vector<int> colorer;  // -1, or 0 for A, 1 for B
  long long tally_a = 0;     // vertices colored, not rounds acted
  long long tally_b = 0;
  bool complete = false;
};

// One round per profile: A plays voter i's ranking, B plays the family's
// output on the society without voter i. Whoever alone matches the full
// social ranking colors the lowest free vertex with its lowest admissible
// label; a double match goes to A; no match skips. Rounds keep being
// recorded after the board fills, with nothing colored, so the transcript
// shows whether the matching pattern persists.
GameTranscript play_social_choice_game(const ScfRule& family, int voter,
                                       const std::vector<Profile>& profiles,
                                       const Triangulation& t);

// A's voter index iff the board is fully colored by A alone and B never
// acted in any round; otherwise empty.
std::optional<int> dictator_from_transcript(const GameTranscript& tr);

struct DictatorColoring {
  int dictator = -1;
  long long cell = -1;
  Labeling labels;
};

// The other direction of the bridge: certify the dictator, let them color
// every vertex (first-legal or seeded-random within carriers), then walk the
// finished labeling to a fully multicolored cell.
DictatorColoring panchromatic_from_dictator(const ScfRule& family,
                                            const Triangulation& t,
                                            Strategy labeler, std::uint64_t seed);

}  // namespace implab
