#pragma once

#include <map>
#include <string>

#include "caclab/metrics/tree.hpp"

namespace caclab::metrics {

// Contingent-action capacity of one player after perturbation, both as a
// chance-aggregated decision-point count and as the literal per-info-set
// count, plus the reach-weighted total when a profile is supplied.
struct CapacityReport {
  int cac_decision_points = 0;
  int cac_raw_infosets = 0;
  double cac_weighted = 0.0;
  bool has_weighted = false;
  struct PointDetail {
    int retained_actions = 0;
    double reach = 0.0;  // aggregate over the point's info sets
  };
  std::map<std::string, PointDetail> per_point_detail;

  std::string to_json() const;
};

CapacityReport compute_cac(const Game& game, const perturb::MaskRuleSet& rules, Player player);

// Reach-weighted capacity under `profile`, evaluated in the masked game
// (forced nodes contribute their singleton choice with probability one).
CapacityReport compute_cac_report(const Game& game, const perturb::MaskRuleSet& rules,
                                  const PolicyProfile& profile, Player player);
double compute_cac_weighted(const Game& game, const perturb::MaskRuleSet& rules,
                            const PolicyProfile& profile, Player player);

struct BestResponseResult {
  PolicyProfile policy;  // pure responder policy
  double value = 0.0;    // responder's expected utility
};

// Exact best response by backward induction over the responder's info sets,
// deepest first; ties break toward the lowest action id.
BestResponseResult best_response(const GameTree& tree, const PolicyProfile& fixed_profile,
                                 Player responder);
BestResponseResult best_response(const Game& game, const perturb::MaskRuleSet& rules,
                                 const PolicyProfile& fixed_profile, Player responder);

// (BR_P0 + BR_P1) / 2 against `profile`; zero exactly at equilibrium.
double exploitability(const Game& game, const PolicyProfile& profile);
double exploitability(const GameTree& unmasked_tree, const PolicyProfile& profile);

struct ValueReport {
  double player_value = 0.0;      // v0
  double br_value = 0.0;          // responder's best-response value
  double improvement_bound = 0.0; // reach-weighted improvement of a retained point
  double epsilon_floor = 0.0;
  std::string to_json() const;
};

// Affine map onto [0,1]; rejects values outside the bounds.
double normalize(double r, const RewardBounds& bounds);

// Expected value for the forced player when the responder plays an eps-greedy
// mix around its exact best response. Requires zero contingency for player 0.
double dea_floor(double epsilon, const Game& game, const perturb::MaskRuleSet& rules);

}  // namespace caclab::metrics
