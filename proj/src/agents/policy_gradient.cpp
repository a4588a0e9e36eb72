#include "caclab/agents/policy_gradient.hpp"

#include <cmath>

namespace caclab::agents {

std::vector<double> log_softmax_grad(const std::vector<double>& probs, std::size_t taken) {
  std::vector<double> grad(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    grad[i] = (i == taken ? 1.0 : 0.0) - probs[i];
  }
  return grad;
}

std::vector<double> entropy_grad(const std::vector<double>& probs) {
  double h = entropy_nats(probs);
  std::vector<double> grad(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    double p = probs[i];
    grad[i] = p > 0 ? -p * (std::log(p) + h) : 0.0;
  }
  return grad;
}

namespace {

std::size_t local_index(const PgDecision& d) {
  for (std::size_t i = 0; i < d.legal.size(); ++i) {
    if (d.legal[i] == d.action) return i;
  }
  return 0;
}

}  // namespace

void reinforce_update(PreferenceTable& prefs, const PgDecision& d, double g, double baseline,
                      double lr) {
  if (d.legal.size() < 2) return;  // forced node, no gradient
  double adv = g - baseline;
  std::vector<double> probs = prefs.softmax(d.key, d.legal);
  std::vector<double> grad = log_softmax_grad(probs, local_index(d));
  for (std::size_t i = 0; i < d.legal.size(); ++i) {
    prefs.slot(d.key, d.legal[i]) += lr * adv * grad[i];
  }
}

void ppo_tabular_update(PreferenceTable& prefs, const PgDecision& d, double g, double baseline,
                        double lr, double clip, double entropy_coef) {
  if (d.legal.size() < 2) return;
  double adv = g - baseline;
  std::vector<double> probs = prefs.softmax(d.key, d.legal);
  std::size_t taken = local_index(d);
  double ratio = probs[taken] / std::max(d.probs_old[taken], 1e-12);
  bool clipped = (adv > 0 && ratio > 1.0 + clip) || (adv < 0 && ratio < 1.0 - clip);
  std::vector<double> hgrad = entropy_coef > 0 ? entropy_grad(probs) : std::vector<double>();
  std::vector<double> grad = log_softmax_grad(probs, taken);
  for (std::size_t i = 0; i < d.legal.size(); ++i) {
    double step = 0.0;
    // Surrogate: d/dtheta [ratio * adv] = ratio * adv * grad log pi_new.
    if (!clipped) step += ratio * adv * grad[i];
    if (entropy_coef > 0) step += entropy_coef * hgrad[i];
    prefs.slot(d.key, d.legal[i]) += lr * step;
  }
}

void PolicyGradientAgent::begin_episode(long, Rng&) {
  trajectory_[0].clear();
  trajectory_[1].clear();
}

Action PolicyGradientAgent::act(const Game&, const HistoryState&, Player seat,
                                const std::string& key, const std::vector<Action>& legal,
                                Rng& rng) {
  std::vector<double> probs = prefs_.softmax(key, legal);
  Action a = legal[sample_index(probs, rng)];
  trajectory_[seat].push_back(PgDecision{key, a, legal, std::move(probs)});
  return a;
}

void PolicyGradientAgent::end_episode(Player seat, double value, Rng&) {
  if (frozen_) return;
  for (const PgDecision& d : trajectory_[seat]) {
    if (d.legal.size() < 2) continue;
    double& b = baseline_.slot(d.key, d.action);
    double baseline = b;
    b += config_.baseline_rate * (value - b);
    if (variant_ == Variant::kReinforce) {
      reinforce_update(prefs_, d, value, baseline, config_.lr);
    } else {
      ppo_tabular_update(prefs_, d, value, baseline, config_.lr, config_.ppo_clip,
                         config_.entropy_bonus);
    }
  }
}

std::vector<double> PolicyGradientAgent::policy_probs(const Game&, const HistoryState&, Player,
                                                      const std::string& key,
                                                      const std::vector<Action>& legal,
                                                      PolicyKind kind) const {
  std::vector<double> probs = prefs_.softmax(key, legal);
  if (kind == PolicyKind::kGreedy) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < probs.size(); ++i) {
      if (probs[i] > probs[best]) best = i;
    }
    std::vector<double> greedy(probs.size(), 0.0);
    greedy[best] = 1.0;
    return greedy;
  }
  return probs;
}

}  // namespace caclab::agents
