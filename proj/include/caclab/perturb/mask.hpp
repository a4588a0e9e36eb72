#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "caclab/core/rng.hpp"
#include "caclab/games/game.hpp"

namespace caclab::perturb {

enum class MaskMode { kRemoveActions, kForcePolicy };
enum class MaskScope { kAllNodes, kRootOnly, kPredicate };
enum class ForcingRule { kLowestLegal };

// A named-action removal or deterministic forcing applied to one player at a
// scoped set of decision points. Removal that leaves exactly one action is
// the mechanism that produces a fully forced policy; kForcePolicy exists for
// deterministic-lowest play, where no single removable label achieves that.
struct MaskRule {
  Player target_player = 0;
  MaskMode mode = MaskMode::kRemoveActions;
  std::set<Action> removed_actions;              // kRemoveActions
  ForcingRule forcing = ForcingRule::kLowestLegal;  // kForcePolicy
  MaskScope scope = MaskScope::kAllNodes;
  std::function<bool(const std::string& info_key)> predicate;  // kPredicate

  static MaskRule remove_labels(const Game& game, Player player,
                                const std::vector<std::string>& labels,
                                MaskScope scope = MaskScope::kAllNodes);
  static MaskRule force_lowest(Player player, MaskScope scope = MaskScope::kAllNodes);
};

using MaskRuleSet = std::vector<MaskRule>;

// Validates a rule set against a game's global action table. A REMOVE rule
// that deletes every global action can never leave a legal move and is
// rejected here.
void validate_rules(const Game& game, const MaskRuleSet& rules);

// Applies the active rules to one node's legal set. Root-only scope matches
// keys with an empty public part. If a removal would empty a node's legal
// set entirely (the named actions are all that is legal there), the rule is
// inapplicable at that node and the base set is kept.
std::vector<Action> effective_actions(const std::string& info_key,
                                      const std::vector<Action>& base,
                                      const MaskRuleSet& active_rules);

// Episode window with optional recovery and per-episode activation draw.
struct Schedule {
  long activate_at = 0;
  long deactivate_at = -1;              // <0: never restored
  double per_episode_probability = 1.0;

  void validate() const;
};

// One Bernoulli draw per episode from the caller's schedule stream; always
// false outside the active window.
bool schedule_active(long episode, const Schedule& schedule, Rng& rng);

}  // namespace caclab::perturb
