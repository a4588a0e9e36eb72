#pragma once

#include "caclab/agents/tabular.hpp"
#include "caclab/agents/tables.hpp"

namespace caclab::agents {

// Fictitious self-play with a tabular best-response learner and an explicit
// average strategy. Each seat draws its mode once per episode: with
// probability eta it acts from the eps-greedy best-response learner and its
// chosen actions train the average strategy; otherwise it acts from the
// average strategy. The Q-learner trains on all experience.
//
// The average strategy is a softmax classifier fitted by cross-entropy SGD
// (sl_lr); exact frequency counts are available behind a flag.
class NfspAgent : public Agent {
 public:
  NfspAgent(const AgentConfig& config, std::uint64_t seed)
      : config_(config), mode_rng_(Rng(seed).split("nfsp_mode")) {}

  void begin_episode(long episode, Rng& rng) override;
  Action act(const Game& game, const HistoryState& state, Player seat, const std::string& key,
             const std::vector<Action>& legal, Rng& rng) override;
  void end_episode(Player seat, double value, Rng& rng) override;
  std::vector<double> policy_probs(const Game& game, const HistoryState& state, Player seat,
                                   const std::string& key, const std::vector<Action>& legal,
                                   PolicyKind kind) const override;

  const ValueTable& q_table() const { return q_; }

 private:
  std::vector<double> average_probs(const std::string& key,
                                    const std::vector<Action>& legal) const;
  void supervise(const std::string& key, Action a, const std::vector<Action>& legal);

  AgentConfig config_;
  Rng mode_rng_;
  ValueTable q_;
  PreferenceTable avg_prefs_;
  ValueTable counts_;  // exact-count mode
  std::array<bool, 2> br_mode_ = {true, true};
  std::array<std::vector<Decision>, 2> trajectory_;
};

}  // namespace caclab::agents
