#include "caclab/agents/dqn.hpp"

#include <algorithm>

#include "caclab/core/check.hpp"

namespace caclab::agents {

int observation_width(const Game& game) {
  return 2 + game.private_cardinality() +
         game.max_public_tokens() * (game.token_cardinality() + 1);
}

std::vector<double> encode_observation(const Game& game, const HistoryState& state,
                                       Player seat) {
  std::vector<double> obs(observation_width(game), 0.0);
  obs[seat] = 1.0;
  int off = 2;
  int priv = game.private_index(state, seat);
  if (priv >= 0) obs[off + priv] = 1.0;
  off += game.private_cardinality();
  int slot_width = game.token_cardinality() + 1;  // last channel = empty slot
  std::vector<int> tokens = game.public_tokens(state, seat);
  for (int s = 0; s < game.max_public_tokens(); ++s) {
    int channel = s < static_cast<int>(tokens.size()) ? tokens[s] : game.token_cardinality();
    obs[off + s * slot_width + channel] = 1.0;
  }
  return obs;
}

double dqn_loss_grads(const Mlp& net, const Mlp& target,
                      const std::vector<const Transition*>& batch, Mlp::Grads& grads) {
  double loss = 0.0;
  double inv = 1.0 / batch.size();
  for (const Transition* t : batch) {
    double y = t->reward;
    if (!t->terminal) {
      std::vector<double> qn = target.forward(t->next_obs);
      double best = -1e300;
      for (Action a : t->next_legal) best = std::max(best, qn[a]);
      y += best;  // undiscounted
    }
    std::vector<double> q = net.forward(t->obs);
    double err = q[t->action] - y;
    loss += err * err * inv;
    std::vector<double> dout(q.size(), 0.0);
    dout[t->action] = 2.0 * err * inv;
    net.backward(t->obs, dout, grads);
  }
  return loss;
}

void dqn_step(DqnCore& core, Rng& rng) {
  if (core.buffer.size() < core.config.batch_size) return;
  std::vector<const Transition*> batch;
  batch.reserve(core.config.batch_size);
  for (int i = 0; i < core.config.batch_size; ++i) batch.push_back(&core.buffer.sample(rng));
  Mlp::Grads grads = core.net.zero_grads();
  dqn_loss_grads(core.net, core.target, batch, grads);
  core.optimizer.step(core.net, grads);
}

DqnAgent::DqnAgent(const AgentConfig& config, const Game& game, std::uint64_t seed)
    : core_{Mlp(), Mlp(), Adam(), ReplayBuffer(config.replay_capacity), config},
      epsilon_(config.epsilon) {
  Rng init = Rng(seed).split("dqn_init");
  int width = observation_width(game);
  int actions = static_cast<int>(game.action_labels().size());
  core_.net = Mlp(width, config.hidden_units, actions, init);
  core_.target = core_.net;
  core_.optimizer = Adam(core_.net.num_params(), config.dqn_lr);
}

void DqnAgent::begin_episode(long episode, Rng&) {
  pending_[0].active = false;
  pending_[1].active = false;
  episodes_seen_ = episode;
  epsilon_ = core_.config.epsilon;
  if (core_.config.epsilon_final >= 0.0 && core_.config.epsilon_decay_steps > 0) {
    double frac =
        std::min(1.0, static_cast<double>(episode) / core_.config.epsilon_decay_steps);
    epsilon_ = core_.config.epsilon + frac * (core_.config.epsilon_final - core_.config.epsilon);
  }
}

Action DqnAgent::greedy_action(const std::vector<double>& q,
                               const std::vector<Action>& legal) const {
  Action best = legal[0];
  for (Action a : legal) {
    if (q[a] > q[best]) best = a;
  }
  return best;
}

Action DqnAgent::act(const Game& game, const HistoryState& state, Player seat,
                     const std::string&, const std::vector<Action>& legal, Rng& rng) {
  std::vector<double> obs = encode_observation(game, state, seat);
  if (pending_[seat].active && !frozen_) {
    core_.buffer.push(Transition{std::move(pending_[seat].obs), pending_[seat].action, 0.0,
                                 false, obs, legal});
  }
  Action a;
  if (legal.size() == 1) {
    a = legal[0];
  } else if (rng.bernoulli(epsilon_)) {
    a = legal[rng.uniform_int(static_cast<int>(legal.size()))];
  } else {
    a = greedy_action(core_.net.forward(obs), legal);
  }
  pending_[seat] = Pending{true, std::move(obs), a};
  return a;
}

void DqnAgent::end_episode(Player seat, double value, Rng&) {
  if (frozen_ || !pending_[seat].active) return;
  core_.buffer.push(Transition{std::move(pending_[seat].obs), pending_[seat].action, value,
                               true, {}, {}});
  pending_[seat].active = false;
}

void DqnAgent::episode_done(Rng& rng) {
  if (frozen_) return;
  Rng train = rng.split("dqn_train").split(static_cast<std::uint64_t>(episodes_seen_));
  dqn_step(core_, train);
  if (core_.config.target_sync_episodes > 0 &&
      (episodes_seen_ + 1) % core_.config.target_sync_episodes == 0) {
    core_.target = core_.net;
  }
}

std::vector<double> DqnAgent::policy_probs(const Game& game, const HistoryState& state,
                                           Player seat, const std::string&,
                                           const std::vector<Action>& legal,
                                           PolicyKind kind) const {
  std::vector<double> probs(legal.size(), 0.0);
  if (legal.size() == 1) {
    probs[0] = 1.0;
    return probs;
  }
  std::vector<double> q = core_.net.forward(encode_observation(game, state, seat));
  Action best = greedy_action(q, legal);
  for (std::size_t i = 0; i < legal.size(); ++i) {
    if (kind == PolicyKind::kGreedy) {
      probs[i] = legal[i] == best ? 1.0 : 0.0;
    } else {
      probs[i] = epsilon_ / legal.size() + (legal[i] == best ? 1.0 - epsilon_ : 0.0);
    }
  }
  return probs;
}

double DqnAgent::q_gap(const Game& game, const HistoryState& state, Player seat) const {
  std::vector<double> q = core_.net.forward(encode_observation(game, state, seat));
  auto legal = game.legal_actions(state);
  if (legal.size() < 2) return 0.0;
  double best = -1e300;
  for (Action a : legal) best = std::max(best, q[a]);
  double gap = 0.0;
  for (Action a : legal) gap += best - q[a];
  return gap / (static_cast<double>(legal.size()) - 1);
}

}  // namespace caclab::agents
