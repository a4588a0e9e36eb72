#pragma once

#include <deque>

#include "caclab/agents/agent.hpp"
#include "caclab/agents/mlp.hpp"

namespace caclab::agents {

struct Transition {
  std::vector<double> obs;
  Action action = 0;
  double reward = 0.0;
  bool terminal = false;
  std::vector<double> next_obs;
  std::vector<Action> next_legal;
};

// Uniform-sampling ring buffer.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(int capacity) : capacity_(capacity) {}

  void push(Transition t) {
    if (static_cast<int>(ring_.size()) == capacity_) {
      ring_[next_] = std::move(t);
      next_ = (next_ + 1) % capacity_;
    } else {
      ring_.push_back(std::move(t));
    }
  }

  int size() const { return static_cast<int>(ring_.size()); }
  const Transition& sample(Rng& rng) const { return ring_[rng.uniform_int(size())]; }

 private:
  int capacity_;
  int next_ = 0;
  std::vector<Transition> ring_;
};

// Fixed-length encoding of one seat's view: seat one-hot, private outcome
// one-hot, then per-slot one-hots of the public token sequence.
std::vector<double> encode_observation(const Game& game, const HistoryState& state,
                                       Player seat);
int observation_width(const Game& game);

// Mean squared TD error toward the target network over a sampled batch,
// with illegal successor actions excluded from the max; returns the loss
// and fills parameter gradients. Undiscounted episodic backup.
double dqn_loss_grads(const Mlp& net, const Mlp& target,
                      const std::vector<const Transition*>& batch, Mlp::Grads& grads);

struct DqnCore {
  Mlp net;
  Mlp target;
  Adam optimizer;
  ReplayBuffer buffer;
  AgentConfig config;
};

// One stochastic gradient step on `batch_size` uniformly sampled
// transitions; no-op while the buffer holds fewer than that.
void dqn_step(DqnCore& core, Rng& rng);

class DqnAgent : public Agent {
 public:
  DqnAgent(const AgentConfig& config, const Game& game, std::uint64_t seed);

  void begin_episode(long episode, Rng& rng) override;
  Action act(const Game& game, const HistoryState& state, Player seat, const std::string& key,
             const std::vector<Action>& legal, Rng& rng) override;
  void end_episode(Player seat, double value, Rng& rng) override;
  void episode_done(Rng& rng) override;
  std::vector<double> policy_probs(const Game& game, const HistoryState& state, Player seat,
                                   const std::string& key, const std::vector<Action>& legal,
                                   PolicyKind kind) const override;

  double current_epsilon() const { return epsilon_; }
  // Mean over legal actions of |Q(best) - Q(a)|, a certainty diagnostic.
  double q_gap(const Game& game, const HistoryState& state, Player seat) const;

 private:
  Action greedy_action(const std::vector<double>& q, const std::vector<Action>& legal) const;

  DqnCore core_;
  double epsilon_;
  long episodes_seen_ = 0;
  struct Pending {
    bool active = false;
    std::vector<double> obs;
    Action action = 0;
  };
  std::array<Pending, 2> pending_;
};

}  // namespace caclab::agents
