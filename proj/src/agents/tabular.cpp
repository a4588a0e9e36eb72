#include "caclab/agents/tabular.hpp"

#include "caclab/core/check.hpp"

namespace caclab::agents {

Action select_action_egreedy(const ValueTable& table, const std::string& key,
                             const std::vector<Action>& legal, double epsilon, Rng& rng) {
  CACLAB_CHECK_ARG(!legal.empty(), "empty legal set at " << key);
  if (legal.size() == 1) return legal[0];
  if (rng.bernoulli(epsilon)) return legal[rng.uniform_int(static_cast<int>(legal.size()))];
  return table.greedy(key, legal);
}

void mc_terminal_update(ValueTable& table, const std::vector<Decision>& trajectory, double g,
                        double alpha) {
  for (const Decision& d : trajectory) {
    double& q = table.slot(d.key, d.action);
    q += alpha * (g - q);
  }
}

void sarsa_update(ValueTable& table, const std::vector<Decision>& trajectory, double g,
                  double alpha) {
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const Decision& d = trajectory[i];
    double target;
    if (i + 1 < trajectory.size()) {
      const Decision& next = trajectory[i + 1];
      target = table.get(next.key, next.action);  // zero intermediate reward
    } else {
      target = g;
    }
    double& q = table.slot(d.key, d.action);
    q += alpha * (target - q);
  }
}

std::vector<double> egreedy_probs(const ValueTable& table, const std::string& key,
                                  const std::vector<Action>& legal, double epsilon) {
  std::vector<double> probs(legal.size(), 0.0);
  if (legal.size() == 1) {
    probs[0] = 1.0;
    return probs;
  }
  Action best = table.greedy(key, legal);
  for (std::size_t i = 0; i < legal.size(); ++i) {
    probs[i] = epsilon / legal.size() + (legal[i] == best ? 1.0 - epsilon : 0.0);
  }
  return probs;
}

void entropy_ql_update(ValueTable& table, const std::vector<Decision>& trajectory, double g,
                       double alpha, double tau, double epsilon) {
  CACLAB_CHECK_ARG(tau >= 0.0, "negative entropy temperature");
  for (const Decision& d : trajectory) {
    double h = entropy_nats(egreedy_probs(table, d.key, d.legal, epsilon));
    double& q = table.slot(d.key, d.action);
    q += alpha * (g + tau * h - q);
  }
}

void TabularAgent::begin_episode(long episode, Rng&) {
  trajectory_[0].clear();
  trajectory_[1].clear();
  if (frozen_) return;  // epsilon also frozen
  epsilon_ = config_.epsilon;
  if (config_.epsilon_final >= 0.0 && config_.epsilon_decay_steps > 0) {
    double frac = std::min(1.0, static_cast<double>(episode) / config_.epsilon_decay_steps);
    epsilon_ = config_.epsilon + frac * (config_.epsilon_final - config_.epsilon);
  }
}

Action TabularAgent::act(const Game&, const HistoryState&, Player seat, const std::string& key,
                         const std::vector<Action>& legal, Rng& rng) {
  Action a = select_action_egreedy(table_, key, legal, epsilon_, rng);
  trajectory_[seat].push_back(Decision{key, a, legal});
  return a;
}

void TabularAgent::end_episode(Player seat, double value, Rng&) {
  if (frozen_) return;
  switch (update_) {
    case Update::kMonteCarlo:
      mc_terminal_update(table_, trajectory_[seat], value, config_.alpha);
      break;
    case Update::kSarsa:
      sarsa_update(table_, trajectory_[seat], value, config_.alpha);
      break;
    case Update::kEntropy:
      entropy_ql_update(table_, trajectory_[seat], value, config_.alpha, config_.tau,
                        epsilon_);
      break;
  }
}

std::vector<double> TabularAgent::policy_probs(const Game&, const HistoryState&, Player,
                                               const std::string& key,
                                               const std::vector<Action>& legal,
                                               PolicyKind kind) const {
  if (kind == PolicyKind::kGreedy) {
    std::vector<double> probs(legal.size(), 0.0);
    Action best = legal.size() == 1 ? legal[0] : table_.greedy(key, legal);
    for (std::size_t i = 0; i < legal.size(); ++i) {
      if (legal[i] == best) probs[i] = 1.0;
    }
    return probs;
  }
  return egreedy_probs(table_, key, legal, epsilon_);
}

}  // namespace caclab::agents
