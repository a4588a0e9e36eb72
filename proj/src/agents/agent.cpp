#include "caclab/agents/agent.hpp"

#include "caclab/agents/dqn.hpp"
#include "caclab/agents/nfsp.hpp"
#include "caclab/agents/policy_gradient.hpp"
#include "caclab/agents/tabular.hpp"
#include "caclab/core/check.hpp"
#include "caclab/metrics/tree.hpp"

namespace caclab::agents {

void AgentConfig::check() const {
  CACLAB_CHECK_ARG(alpha >= 0.0, "alpha must be >= 0");
  CACLAB_CHECK_ARG(epsilon >= 0.0 && epsilon <= 1.0, "epsilon outside [0,1]");
  CACLAB_CHECK_ARG(tau >= 0.0, "tau must be >= 0");
  CACLAB_CHECK_ARG(nfsp_eta >= 0.0 && nfsp_eta <= 1.0, "eta outside [0,1]");
}

namespace {

// Plays a fixed profile; all updates are no-ops.
class ProfileAgent final : public Agent {
 public:
  explicit ProfileAgent(PolicyProfile profile) : profile_(std::move(profile)) {}

  Action act(const Game&, const HistoryState&, Player, const std::string& key,
             const std::vector<Action>& legal, Rng& rng) override {
    std::vector<double> probs = profile_.probs(key, legal, /*strict=*/false);
    return legal[sample_index(probs, rng)];
  }

  void end_episode(Player, double, Rng&) override {}

  std::vector<double> policy_probs(const Game&, const HistoryState&, Player,
                                   const std::string& key, const std::vector<Action>& legal,
                                   PolicyKind) const override {
    return profile_.probs(key, legal, /*strict=*/false);
  }

 private:
  PolicyProfile profile_;
};

}  // namespace

std::unique_ptr<Agent> make_agent(const AgentConfig& config, const Game& game,
                                  std::uint64_t seed) {
  config.check();
  const std::string& id = config.algorithm;
  if (id == "ql") return std::make_unique<TabularAgent>(config, TabularAgent::Update::kMonteCarlo);
  if (id == "sarsa") return std::make_unique<TabularAgent>(config, TabularAgent::Update::kSarsa);
  if (id == "entropy_ql")
    return std::make_unique<TabularAgent>(config, TabularAgent::Update::kEntropy);
  if (id == "reinforce")
    return std::make_unique<PolicyGradientAgent>(config, PolicyGradientAgent::Variant::kReinforce);
  if (id == "ppo")
    return std::make_unique<PolicyGradientAgent>(config, PolicyGradientAgent::Variant::kPpo);
  if (id == "nfsp") return std::make_unique<NfspAgent>(config, seed);
  if (id == "dqn") return std::make_unique<DqnAgent>(config, game, seed);
  fail_arg("unknown algorithm '" + id + "'");
}

std::unique_ptr<Agent> make_profile_agent(PolicyProfile profile) {
  return std::make_unique<ProfileAgent>(std::move(profile));
}

PolicyProfile extract_profile(const Agent& agent, const Game& game, PolicyKind kind) {
  metrics::GameTree tree(game);
  PolicyProfile profile;
  for (const auto& is : tree.info_sets()) {
    std::vector<double> probs =
        agent.policy_probs(game, is.sample, is.player, is.key, is.actions, kind);
    PolicyProfile::Dist dist;
    for (std::size_t i = 0; i < is.actions.size(); ++i) {
      dist.emplace_back(is.actions[i], probs[i]);
    }
    profile.set(is.key, std::move(dist));
  }
  return profile;
}

}  // namespace caclab::agents
