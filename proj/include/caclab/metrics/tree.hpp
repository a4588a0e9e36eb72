#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "caclab/core/policy.hpp"
#include "caclab/games/game.hpp"
#include "caclab/perturb/mask.hpp"

namespace caclab::metrics {

// Explicit arena of the full (optionally masked) game tree. Built once and
// walked many times by CFR, best response and the capacity metrics. Node 0
// is a synthetic chance root whose edges are the initial deals.
class GameTree {
 public:
  enum class Kind : std::uint8_t { kChance, kPlayer, kTerminal };

  struct Node {
    Kind kind;
    Player player = -1;       // kPlayer only
    int info_index = -1;      // kPlayer only
    std::array<double, 2> utility{0.0, 0.0};  // kTerminal only
    int edge_begin = 0;
    int edge_end = 0;
  };

  struct Edge {
    int label;          // action id, or chance outcome id
    double prob = 0.0;  // chance edges only
    int child;
  };

  struct InfoSet {
    std::string key;
    Player player;
    std::vector<Action> actions;  // effective (masked) legal set
    std::vector<int> nodes;
    int depth;                    // public sequence length
    HistoryState sample;          // one member state, for encoders
  };

  GameTree(const Game& game, const perturb::MaskRuleSet& rules);
  explicit GameTree(const Game& game) : GameTree(game, {}) {}

  const Game& game() const { return *game_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<InfoSet>& info_sets() const { return infos_; }
  int root() const { return 0; }

  int info_index(const std::string& key) const;

  // Probability of each node under `profile` (chance included, both
  // players). With strict=true the profile must cover every reachable
  // multi-action info set.
  std::vector<double> node_reach(const PolicyProfile& profile, bool strict) const;

  // Expected utility of `profile` for both players.
  std::array<double, 2> expected_value(const PolicyProfile& profile, bool strict) const;

 private:
  int build(const HistoryState& state);

  const Game* game_;
  const perturb::MaskRuleSet* rules_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<InfoSet> infos_;
  std::unordered_map<std::string, int> info_index_;
};

// Reachable info keys of one player in the unperturbed game.
std::vector<std::string> enumerate_info_sets(const Game& game, Player player);

// Info-set reach probabilities (chance included) under a complete profile.
std::unordered_map<std::string, double> reach_profile(const Game& game,
                                                      const PolicyProfile& profile);

}  // namespace caclab::metrics
