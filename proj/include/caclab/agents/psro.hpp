#pragma once

#include "caclab/perturb/mask.hpp"
#include "caclab/selfplay/match.hpp"

namespace caclab::agents {

struct PsroConfig {
  std::string game = "kuhn";
  AgentConfig oracle;                 // tabular QL oracle hyperparameters
  perturb::MaskRuleSet rules;
  int population_size = 5;            // also the number of oracle epochs
  long oracle_episodes = 4000;        // training budget per added policy
  int seeds = 3;
  std::uint64_t seed_base = 1;
  int eval_window = 2000;
};

struct PsroSeedResult {
  std::uint64_t seed;
  std::vector<double> rewards;  // P0's reward per episode of its oracle's training
  double pre_mean = 0.0;
  double post_mean = 0.0;
};

struct PsroResult {
  std::vector<PsroSeedResult> seeds;
  std::vector<double> post_means() const;
  std::vector<double> pre_means() const;
};

// Population-based training: each epoch trains one fresh best-response
// oracle per side against opponents drawn uniformly from the other side's
// population (earlier greedy snapshots plus the live oracle); the epoch's
// greedy policy then joins the population. The perturbation activates at
// the run midpoint. Returns P0's reward stream.
PsroResult psro_run(const PsroConfig& config);

}  // namespace caclab::agents
