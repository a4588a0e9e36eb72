#include "caclab/metrics/tree.hpp"

#include "caclab/core/check.hpp"

namespace caclab::metrics {

GameTree::GameTree(const Game& game, const perturb::MaskRuleSet& rules)
    : game_(&game), rules_(&rules) {
  CACLAB_CHECK_ARG(game.tree_tractable(),
                   game.name() << " is too large for full-tree enumeration");
  perturb::validate_rules(game, rules);

  // Synthetic chance root over the initial deals.
  nodes_.push_back(Node{Kind::kChance, -1, -1, {0, 0}, 0, 0});
  auto initial = game.initial_states();
  std::vector<Edge> root_edges;
  int outcome = 0;
  for (const auto& [state, prob] : initial) {
    int child = build(state);
    root_edges.push_back(Edge{outcome++, prob, child});
  }
  nodes_[0].edge_begin = static_cast<int>(edges_.size());
  for (const auto& e : root_edges) edges_.push_back(e);
  nodes_[0].edge_end = static_cast<int>(edges_.size());
  rules_ = nullptr;  // only needed during construction
}

int GameTree::build(const HistoryState& state) {
  int index = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{});
  if (game_->is_terminal(state)) {
    Node n;
    n.kind = Kind::kTerminal;
    n.utility = game_->utilities(state);
    nodes_[index] = n;
    return index;
  }

  std::vector<Edge> local;
  Node n;
  if (game_->is_chance(state)) {
    n.kind = Kind::kChance;
    for (const auto& [outcome, prob] : game_->chance_outcomes(state)) {
      int child = build(game_->apply_chance(state, outcome));
      local.push_back(Edge{outcome, prob, child});
    }
  } else {
    n.kind = Kind::kPlayer;
    n.player = state.to_move;
    std::string key = game_->info_key(state);
    std::vector<Action> legal = game_->legal_actions(state);
    if (!rules_->empty()) legal = perturb::effective_actions(key, legal, *rules_);

    auto it = info_index_.find(key);
    if (it == info_index_.end()) {
      int info = static_cast<int>(infos_.size());
      InfoSet is;
      is.key = key;
      is.player = state.to_move;
      is.actions = legal;
      is.depth = static_cast<int>(state.actions.size() + state.public_chance.size());
      is.sample = state;
      infos_.push_back(std::move(is));
      it = info_index_.emplace(key, info).first;
    } else {
      CACLAB_CHECK(infos_[it->second].actions == legal,
                   "legal sets differ within info set " << key);
    }
    n.info_index = it->second;
    infos_[it->second].nodes.push_back(index);
    for (Action a : legal) {
      int child = build(game_->apply(state, a));
      local.push_back(Edge{a, 0.0, child});
    }
  }
  n.edge_begin = static_cast<int>(edges_.size());
  for (const auto& e : local) edges_.push_back(e);
  n.edge_end = static_cast<int>(edges_.size());
  nodes_[index] = n;
  return index;
}

int GameTree::info_index(const std::string& key) const {
  auto it = info_index_.find(key);
  return it == info_index_.end() ? -1 : it->second;
}

std::vector<double> GameTree::node_reach(const PolicyProfile& profile, bool strict) const {
  std::vector<double> reach(nodes_.size(), 0.0);
  reach[0] = 1.0;
  // Nodes are stored so that children follow parents? Not guaranteed by the
  // builder (children are built before the edge list is flushed), so walk
  // explicitly.
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int idx = stack.back();
    stack.pop_back();
    const Node& n = nodes_[idx];
    if (n.kind == Kind::kTerminal) continue;
    if (n.kind == Kind::kChance) {
      for (int e = n.edge_begin; e < n.edge_end; ++e) {
        reach[edges_[e].child] += reach[idx] * edges_[e].prob;
        stack.push_back(edges_[e].child);
      }
      continue;
    }
    const InfoSet& is = infos_[n.info_index];
    std::vector<double> probs = profile.probs(is.key, is.actions, strict);
    for (int e = n.edge_begin; e < n.edge_end; ++e) {
      reach[edges_[e].child] += reach[idx] * probs[e - n.edge_begin];
      stack.push_back(edges_[e].child);
    }
  }
  return reach;
}

std::array<double, 2> GameTree::expected_value(const PolicyProfile& profile,
                                               bool strict) const {
  std::vector<double> reach = node_reach(profile, strict);
  std::array<double, 2> value = {0.0, 0.0};
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].kind == Kind::kTerminal) {
      value[0] += reach[i] * nodes_[i].utility[0];
      value[1] += reach[i] * nodes_[i].utility[1];
    }
  }
  return value;
}

std::vector<std::string> enumerate_info_sets(const Game& game, Player player) {
  GameTree tree(game);
  std::vector<std::string> keys;
  for (const auto& is : tree.info_sets()) {
    if (is.player == player) keys.push_back(is.key);
  }
  return keys;
}

std::unordered_map<std::string, double> reach_profile(const Game& game,
                                                      const PolicyProfile& profile) {
  GameTree tree(game);
  std::vector<double> node_reach = tree.node_reach(profile, /*strict=*/true);
  std::unordered_map<std::string, double> out;
  for (const auto& is : tree.info_sets()) {
    double r = 0.0;
    for (int n : is.nodes) r += node_reach[n];
    out[is.key] = r;
  }
  return out;
}

}  // namespace caclab::metrics
