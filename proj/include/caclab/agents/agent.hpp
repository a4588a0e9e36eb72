#pragma once

#include <memory>
#include <string>
#include <vector>

#include "caclab/core/policy.hpp"
#include "caclab/core/rng.hpp"
#include "caclab/games/game.hpp"

namespace caclab::agents {

// Hyperparameters for the learner zoo. Fields not used by an algorithm are
// ignored by it.
struct AgentConfig {
  std::string algorithm = "ql";  // ql | sarsa | entropy_ql | reinforce | ppo | nfsp | dqn
  double alpha = 0.1;            // tabular learning rate
  double epsilon = 0.15;
  double epsilon_final = -1.0;   // >= 0: linear decay target
  long epsilon_decay_steps = 0;  // episodes over which to decay
  double tau = 0.0;              // entropy_ql temperature
  double lr = 0.01;              // policy-gradient step size
  double ppo_clip = 0.2;
  double entropy_bonus = 0.01;   // ppo objective bonus
  double baseline_rate = 0.2;    // running per-(state,action) baseline rate
  double nfsp_eta = 0.05;        // anticipatory parameter
  double nfsp_sl_lr = 1e-4;      // supervised averaging step size
  bool nfsp_exact_counts = false;
  int replay_capacity = 10000;
  int batch_size = 32;
  int target_sync_episodes = 500;
  double dqn_lr = 1e-3;
  int hidden_units = 64;

  void check() const;
};

enum class PolicyKind { kBehavior, kGreedy };

// A learner driving one or both seats of self-play. Implementations buffer
// their own per-seat trajectories between begin_episode and end_episode.
class Agent {
 public:
  virtual ~Agent() = default;

  virtual void begin_episode(long episode, Rng& rng) { (void)episode, (void)rng; }
  virtual Action act(const Game& game, const HistoryState& state, Player seat,
                     const std::string& key, const std::vector<Action>& legal, Rng& rng) = 0;
  // Called once per seat with that seat's terminal return.
  virtual void end_episode(Player seat, double value, Rng& rng) = 0;
  // Called once per episode after both seats have ended.
  virtual void episode_done(Rng& rng) { (void)rng; }

  // After freeze() every update is a no-op; action selection is unchanged.
  virtual void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  virtual std::vector<double> policy_probs(const Game& game, const HistoryState& state,
                                           Player seat, const std::string& key,
                                           const std::vector<Action>& legal,
                                           PolicyKind kind) const = 0;

 protected:
  bool frozen_ = false;
};

std::unique_ptr<Agent> make_agent(const AgentConfig& config, const Game& game,
                                  std::uint64_t seed);

// Agent that samples a fixed profile and never learns.
std::unique_ptr<Agent> make_profile_agent(PolicyProfile profile);

// Materializes the agent's policy at every reachable info set of the
// unperturbed game (uniform where the agent has never acted).
PolicyProfile extract_profile(const Agent& agent, const Game& game, PolicyKind kind);

}  // namespace caclab::agents
