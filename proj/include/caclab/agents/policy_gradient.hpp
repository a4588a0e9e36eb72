#pragma once

#include "caclab/agents/agent.hpp"
#include "caclab/agents/tables.hpp"

namespace caclab::agents {

// Decision with the selection-time distribution, as policy-gradient updates
// need the old probabilities.
struct PgDecision {
  std::string key;
  Action action;
  std::vector<Action> legal;
  std::vector<double> probs_old;
};

// One REINFORCE step for one decision: theta += lr * (g - b) * grad log pi,
// evaluated at the current preferences.
void reinforce_update(PreferenceTable& prefs, const PgDecision& d, double g, double baseline,
                      double lr);

// One clipped-surrogate step with entropy bonus. The ratio is
// pi_new(a)/pi_old(a); when the clip binds on the advantage's side the
// surrogate gradient vanishes and only the entropy term applies.
void ppo_tabular_update(PreferenceTable& prefs, const PgDecision& d, double g, double baseline,
                        double lr, double clip, double entropy_coef);

// d log softmax / d theta for the taken action, over `legal`.
std::vector<double> log_softmax_grad(const std::vector<double>& probs, std::size_t taken);
// d H(pi) / d theta over `legal`.
std::vector<double> entropy_grad(const std::vector<double>& probs);

// Tabular softmax policy learners (REINFORCE and PPO). Advantages use
// per-(state, action) running baselines updated at `baseline_rate`.
class PolicyGradientAgent : public Agent {
 public:
  enum class Variant { kReinforce, kPpo };

  PolicyGradientAgent(const AgentConfig& config, Variant variant)
      : config_(config), variant_(variant) {}

  void begin_episode(long episode, Rng& rng) override;
  Action act(const Game& game, const HistoryState& state, Player seat, const std::string& key,
             const std::vector<Action>& legal, Rng& rng) override;
  void end_episode(Player seat, double value, Rng& rng) override;
  std::vector<double> policy_probs(const Game& game, const HistoryState& state, Player seat,
                                   const std::string& key, const std::vector<Action>& legal,
                                   PolicyKind kind) const override;

  const PreferenceTable& prefs() const { return prefs_; }

 private:
  AgentConfig config_;
  Variant variant_;
  PreferenceTable prefs_;
  ValueTable baseline_;
  std::array<std::vector<PgDecision>, 2> trajectory_;
};

}  // namespace caclab::agents
