#include "caclab/agents/cfr.hpp"

#include <vector>

namespace caclab::agents {
namespace {

using metrics::GameTree;

class CfrSolver {
 public:
  explicit CfrSolver(const GameTree& tree) : tree_(tree) {
    const auto& infos = tree.info_sets();
    regret_.resize(infos.size());
    cum_strategy_.resize(infos.size());
    for (std::size_t i = 0; i < infos.size(); ++i) {
      regret_[i].assign(infos[i].actions.size(), 0.0);
      cum_strategy_[i].assign(infos[i].actions.size(), 0.0);
    }
  }

  void iterate(int t) {
    for (Player p = 0; p < 2; ++p) walk(tree_.root(), p, 1.0, 1.0, t);
  }

  PolicyProfile average() const {
    PolicyProfile profile;
    const auto& infos = tree_.info_sets();
    for (std::size_t i = 0; i < infos.size(); ++i) {
      const auto& actions = infos[i].actions;
      double total = 0.0;
      for (double w : cum_strategy_[i]) total += w;
      PolicyProfile::Dist dist;
      for (std::size_t a = 0; a < actions.size(); ++a) {
        double p = total > 0 ? cum_strategy_[i][a] / total : 1.0 / actions.size();
        dist.emplace_back(actions[a], p);
      }
      profile.set(infos[i].key, std::move(dist));
    }
    return profile;
  }

 private:
  void matched_strategy(int info, std::vector<double>& out) const {
    const auto& regrets = regret_[info];
    out.resize(regrets.size());
    double positive = 0.0;
    for (double r : regrets) positive += r > 0 ? r : 0.0;
    if (positive <= 0) {
      double u = 1.0 / regrets.size();
      for (double& p : out) p = u;
      return;
    }
    for (std::size_t a = 0; a < regrets.size(); ++a) {
      out[a] = regrets[a] > 0 ? regrets[a] / positive : 0.0;
    }
  }

  // Returns the counterfactual value for `p`; pi_me / pi_opp are the
  // products of p's and everyone-else's probabilities along the path.
  double walk(int idx, Player p, double pi_me, double pi_opp, int t) {
    const auto& nodes = tree_.nodes();
    const auto& edges = tree_.edges();
    const auto& n = nodes[idx];
    if (n.kind == GameTree::Kind::kTerminal) return n.utility[p];
    if (n.kind == GameTree::Kind::kChance) {
      double v = 0.0;
      for (int e = n.edge_begin; e < n.edge_end; ++e) {
        v += edges[e].prob * walk(edges[e].child, p, pi_me, pi_opp * edges[e].prob, t);
      }
      return v;
    }
    int info = n.info_index;
    std::vector<double> sigma;
    matched_strategy(info, sigma);
    int k = static_cast<int>(sigma.size());

    if (n.player != p) {
      double v = 0.0;
      for (int e = n.edge_begin; e < n.edge_end; ++e) {
        int a = e - n.edge_begin;
        if (sigma[a] <= 0.0) continue;
        v += sigma[a] * walk(edges[e].child, p, pi_me, pi_opp * sigma[a], t);
      }
      return v;
    }

    std::vector<double> child_values(k);
    double v = 0.0;
    for (int e = n.edge_begin; e < n.edge_end; ++e) {
      int a = e - n.edge_begin;
      child_values[a] = walk(edges[e].child, p, pi_me * sigma[a], pi_opp, t);
      v += sigma[a] * child_values[a];
    }
    auto& regrets = regret_[info];
    auto& cum = cum_strategy_[info];
    for (int a = 0; a < k; ++a) {
      regrets[a] += pi_opp * (child_values[a] - v);
      cum[a] += static_cast<double>(t) * pi_me * sigma[a];  // linear averaging
    }
    return v;
  }

  const GameTree& tree_;
  std::vector<std::vector<double>> regret_;
  std::vector<std::vector<double>> cum_strategy_;
};

}  // namespace

PolicyProfile cfr_solve(
    const metrics::GameTree& tree, int iterations,
    const std::function<void(int, const PolicyProfile&)>& checkpoint, int checkpoint_every) {
  CfrSolver solver(tree);
  for (int t = 1; t <= iterations; ++t) {
    solver.iterate(t);
    if (checkpoint && checkpoint_every > 0 && t % checkpoint_every == 0) {
      checkpoint(t, solver.average());
    }
  }
  return solver.average();
}

PolicyProfile cfr_solve(const Game& game, int iterations,
                        const std::function<void(int, const PolicyProfile&)>& checkpoint,
                        int checkpoint_every) {
  metrics::GameTree tree(game);
  return cfr_solve(tree, iterations, checkpoint, checkpoint_every);
}

}  // namespace caclab::agents
