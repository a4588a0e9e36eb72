#include "caclab/agents/nfsp.hpp"

namespace caclab::agents {

void NfspAgent::begin_episode(long, Rng&) {
  trajectory_[0].clear();
  trajectory_[1].clear();
  br_mode_[0] = mode_rng_.bernoulli(config_.nfsp_eta);
  br_mode_[1] = mode_rng_.bernoulli(config_.nfsp_eta);
}

std::vector<double> NfspAgent::average_probs(const std::string& key,
                                             const std::vector<Action>& legal) const {
  if (config_.nfsp_exact_counts) {
    std::vector<double> probs(legal.size());
    double total = 0.0;
    for (std::size_t i = 0; i < legal.size(); ++i) {
      probs[i] = counts_.get(key, legal[i]) + 1.0;  // Laplace prior
      total += probs[i];
    }
    for (double& p : probs) p /= total;
    return probs;
  }
  return avg_prefs_.softmax(key, legal);
}

void NfspAgent::supervise(const std::string& key, Action a, const std::vector<Action>& legal) {
  if (frozen_ || legal.size() < 2) return;
  if (config_.nfsp_exact_counts) {
    counts_.slot(key, a) += 1.0;
    return;
  }
  // Cross-entropy step toward the one-hot best-response action.
  std::vector<double> probs = avg_prefs_.softmax(key, legal);
  for (std::size_t i = 0; i < legal.size(); ++i) {
    double target = legal[i] == a ? 1.0 : 0.0;
    avg_prefs_.slot(key, legal[i]) += config_.nfsp_sl_lr * (target - probs[i]);
  }
}

Action NfspAgent::act(const Game&, const HistoryState&, Player seat, const std::string& key,
                      const std::vector<Action>& legal, Rng& rng) {
  Action a;
  if (br_mode_[seat]) {
    a = select_action_egreedy(q_, key, legal, config_.epsilon, rng);
    supervise(key, a, legal);
  } else {
    a = legal[sample_index(average_probs(key, legal), rng)];
  }
  trajectory_[seat].push_back(Decision{key, a, legal});
  return a;
}

void NfspAgent::end_episode(Player seat, double value, Rng&) {
  if (frozen_) return;
  mc_terminal_update(q_, trajectory_[seat], value, config_.alpha);
}

std::vector<double> NfspAgent::policy_probs(const Game&, const HistoryState&, Player,
                                            const std::string& key,
                                            const std::vector<Action>& legal,
                                            PolicyKind kind) const {
  // The deployed NFSP policy is the eta-mixture of the two components.
  std::vector<double> avg = average_probs(key, legal);
  if (kind == PolicyKind::kGreedy) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < avg.size(); ++i) {
      if (avg[i] > avg[best]) best = i;
    }
    std::vector<double> greedy(avg.size(), 0.0);
    greedy[best] = 1.0;
    return greedy;
  }
  std::vector<double> br = egreedy_probs(q_, key, legal, config_.epsilon);
  for (std::size_t i = 0; i < avg.size(); ++i) {
    avg[i] = config_.nfsp_eta * br[i] + (1.0 - config_.nfsp_eta) * avg[i];
  }
  return avg;
}

}  // namespace caclab::agents
