#include "caclab/perturb/mask.hpp"

#include <algorithm>

#include "caclab/core/check.hpp"

namespace caclab::perturb {
namespace {

bool rule_applies(const MaskRule& rule, const std::string& info_key) {
  switch (rule.scope) {
    case MaskScope::kAllNodes:
      return true;
    case MaskScope::kRootOnly: {
      // Root decision points have an empty public part: "P{i}|{priv}|".
      return info_key.back() == '|';
    }
    case MaskScope::kPredicate:
      return rule.predicate && rule.predicate(info_key);
  }
  return false;
}

}  // namespace

MaskRule MaskRule::remove_labels(const Game& game, Player player,
                                 const std::vector<std::string>& labels, MaskScope scope) {
  MaskRule rule;
  rule.target_player = player;
  rule.mode = MaskMode::kRemoveActions;
  rule.scope = scope;
  for (const auto& label : labels) rule.removed_actions.insert(game.action_id(label));
  return rule;
}

MaskRule MaskRule::force_lowest(Player player, MaskScope scope) {
  MaskRule rule;
  rule.target_player = player;
  rule.mode = MaskMode::kForcePolicy;
  rule.forcing = ForcingRule::kLowestLegal;
  rule.scope = scope;
  return rule;
}

void validate_rules(const Game& game, const MaskRuleSet& rules) {
  std::size_t num_actions = game.action_labels().size();
  for (const auto& rule : rules) {
    CACLAB_CHECK_ARG(rule.target_player == 0 || rule.target_player == 1,
                     "mask rule targets invalid player " << rule.target_player);
    if (rule.mode == MaskMode::kRemoveActions) {
      CACLAB_CHECK_ARG(!rule.removed_actions.empty(), "REMOVE rule with no actions");
      for (Action a : rule.removed_actions) {
        CACLAB_CHECK_ARG(a >= 0 && a < static_cast<Action>(num_actions),
                         "REMOVE rule names action id " << a << " outside the action table");
      }
      CACLAB_CHECK_ARG(rule.removed_actions.size() < num_actions,
                       "REMOVE rule deletes the entire action table of " << game.name());
    }
    if (rule.scope == MaskScope::kPredicate) {
      CACLAB_CHECK_ARG(static_cast<bool>(rule.predicate), "predicate scope without predicate");
    }
  }
}

std::vector<Action> effective_actions(const std::string& info_key,
                                      const std::vector<Action>& base,
                                      const MaskRuleSet& active_rules) {
  CACLAB_CHECK_ARG(!base.empty(), "effective_actions on empty base set");
  CACLAB_CHECK(info_key.size() >= 2 && info_key[0] == 'P', "malformed info key " << info_key);
  Player player = info_key[1] - '0';

  std::vector<Action> current = base;
  for (const auto& rule : active_rules) {
    if (rule.target_player != player || !rule_applies(rule, info_key)) continue;
    if (rule.mode == MaskMode::kForcePolicy) {
      current = {*std::min_element(current.begin(), current.end())};
      continue;
    }
    std::vector<Action> kept;
    for (Action a : current) {
      if (!rule.removed_actions.count(a)) kept.push_back(a);
    }
    // Inapplicable where it would leave nothing to play.
    if (!kept.empty()) current = std::move(kept);
  }
  return current;
}

void Schedule::validate() const {
  CACLAB_CHECK_ARG(per_episode_probability >= 0.0 && per_episode_probability <= 1.0,
                   "per-episode probability outside [0,1]");
  if (deactivate_at >= 0) {
    CACLAB_CHECK_ARG(activate_at < deactivate_at, "schedule activates after it deactivates");
  }
}

bool schedule_active(long episode, const Schedule& schedule, Rng& rng) {
  // The Bernoulli draw happens every episode so the stream stays aligned
  // regardless of the window.
  bool drawn = rng.bernoulli(schedule.per_episode_probability);
  if (episode < schedule.activate_at) return false;
  if (schedule.deactivate_at >= 0 && episode >= schedule.deactivate_at) return false;
  return drawn;
}

}  // namespace caclab::perturb
