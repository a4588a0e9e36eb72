#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace caclab {

using Action = int;
using Player = int;

inline constexpr Player kChancePlayer = -1;
inline constexpr Player kTerminalPlayer = -2;

struct RewardBounds {
  double lo;
  double hi;
};

// One node of play. Games are pure rule engines over this value type:
// transitions never mutate and all bookkeeping (pots, rounds, pending
// claims) is recomputed from the recorded sequences.
struct HistoryState {
  std::array<int, 2> private_outcome{-1, -1};  // per-player private chance
  std::vector<int> public_chance;              // revealed chance, in order
  std::vector<Action> actions;                 // player actions, in order
  Player to_move = kChancePlayer;
};

// Information-set key. The text encoding "P{player}|{private}|{public}"
// appears verbatim in serialized tables and policy dumps; the public part
// uses per-game single-character action codes.
struct InfoKey {
  Player player;
  std::string observation;  // "{private}|{public}"

  std::string str() const { return "P" + std::to_string(player) + "|" + observation; }
};

// Splits a full key string into (player-and-public) "decision point" id,
// i.e. drops the private field. "P0|K|pb" -> "P0|pb".
std::string decision_point_of(const std::string& info_key);

class Game {
 public:
  virtual ~Game() = default;

  virtual const std::string& name() const = 0;
  int num_players() const { return 2; }
  virtual const std::vector<std::string>& action_labels() const = 0;
  virtual RewardBounds reward_bounds() const = 0;
  virtual bool zero_sum() const = 0;
  virtual std::optional<double> nash_reference_value() const { return std::nullopt; }
  // Reported per-episode reward = terminal utility * report_scale().
  virtual double report_scale() const { return 1.0; }
  // False for games too large for full-tree enumeration (Liar's Dice 2d).
  virtual bool tree_tractable() const { return true; }

  // Root chance: every initial assignment (deal/roll) with its probability.
  virtual std::vector<std::pair<HistoryState, double>> initial_states() const = 0;
  virtual std::vector<Action> legal_actions(const HistoryState& s) const = 0;
  virtual HistoryState apply(const HistoryState& s, Action a) const = 0;
  // In-tree chance nodes (to_move == kChancePlayer after the root deal).
  virtual std::vector<std::pair<int, double>> chance_outcomes(const HistoryState& s) const;
  virtual HistoryState apply_chance(const HistoryState& s, int outcome) const;
  virtual std::array<double, 2> utilities(const HistoryState& s) const = 0;
  virtual std::string info_key(const HistoryState& s) const = 0;

  bool is_terminal(const HistoryState& s) const { return s.to_move == kTerminalPlayer; }
  bool is_chance(const HistoryState& s) const { return s.to_move == kChancePlayer; }

  // Fixed-width observation pieces for function approximation. The token
  // sequence mirrors the public part of the info key from `player`'s view.
  virtual int private_cardinality() const = 0;
  virtual int private_index(const HistoryState& s, Player p) const = 0;  // -1 if none
  virtual int token_cardinality() const = 0;
  virtual int max_public_tokens() const = 0;
  virtual std::vector<int> public_tokens(const HistoryState& s, Player p) const = 0;

  Action action_id(const std::string& label) const;
};

// Registry. Known names: kuhn, leduc, leduc4, liars_dice_1d, liars_dice_2d,
// matching_pennies, coordination, ipd, negotiation.
std::unique_ptr<Game> make_game(const std::string& name);
const std::vector<std::string>& registered_games();

}  // namespace caclab
