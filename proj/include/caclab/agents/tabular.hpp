#pragma once

#include "caclab/agents/agent.hpp"
#include "caclab/agents/tables.hpp"

namespace caclab::agents {

// One recorded decision of one seat.
struct Decision {
  std::string key;
  Action action;
  std::vector<Action> legal;
};

// eps-greedy selection: with probability 1-eps the argmax over legal (ties
// to the lowest id), otherwise uniform over legal. Singletons short-circuit.
Action select_action_egreedy(const ValueTable& table, const std::string& key,
                             const std::vector<Action>& legal, double epsilon, Rng& rng);

// Monte-Carlo terminal update: Q += alpha * (G - Q) per visited pair, in
// visit order.
void mc_terminal_update(ValueTable& table, const std::vector<Decision>& trajectory, double g,
                        double alpha);

// Episodic SARSA backup along one seat's trajectory: intermediate steps
// bootstrap from the successor pair (zero reward), the terminal step uses
// the episode return. Matches mc_terminal_update at the terminal step.
void sarsa_update(ValueTable& table, const std::vector<Decision>& trajectory, double g,
                  double alpha);

// As mc_terminal_update with target G + tau * H(pi_s), where pi_s is the
// current eps-greedy policy at the decision's state.
void entropy_ql_update(ValueTable& table, const std::vector<Decision>& trajectory, double g,
                       double alpha, double tau, double epsilon);

// eps-greedy distribution over `legal` implied by `table`.
std::vector<double> egreedy_probs(const ValueTable& table, const std::string& key,
                                  const std::vector<Action>& legal, double epsilon);

// Q-Learning (MC terminal updates), SARSA and entropy-regularised QL share
// everything but the terminal backup.
class TabularAgent : public Agent {
 public:
  enum class Update { kMonteCarlo, kSarsa, kEntropy };

  TabularAgent(const AgentConfig& config, Update update) : config_(config), update_(update) {}

  void begin_episode(long episode, Rng& rng) override;
  Action act(const Game& game, const HistoryState& state, Player seat, const std::string& key,
             const std::vector<Action>& legal, Rng& rng) override;
  void end_episode(Player seat, double value, Rng& rng) override;
  std::vector<double> policy_probs(const Game& game, const HistoryState& state, Player seat,
                                   const std::string& key, const std::vector<Action>& legal,
                                   PolicyKind kind) const override;

  ValueTable& table() { return table_; }
  const ValueTable& table() const { return table_; }
  double current_epsilon() const { return epsilon_; }

 protected:
  AgentConfig config_;
  Update update_;
  ValueTable table_;
  double epsilon_ = 0.15;
  std::array<std::vector<Decision>, 2> trajectory_;
};

}  // namespace caclab::agents
