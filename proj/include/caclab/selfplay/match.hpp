#pragma once

#include <optional>

#include "caclab/agents/agent.hpp"
#include "caclab/perturb/mask.hpp"

namespace caclab::selfplay {

enum class Phase { kPre, kPost, kRestored };

inline const char* phase_name(Phase p) {
  switch (p) {
    case Phase::kPre: return "PRE";
    case Phase::kPost: return "POST";
    case Phase::kRestored: return "RESTORED";
  }
  return "?";
}

struct EpisodeRecord {
  long episode;
  std::uint64_t seed;
  double reward_p0;
  double reward_p1;
  Phase phase;
  bool mask_active;
  int chance_id;  // index of the root chance outcome (deal/roll)
};

enum class Sharing { kShared, kSeparate, kFixedOpponent };

struct TraceSpec {
  std::string metric;  // reward | exploitability | entropy | qgap
  int window = 200;
};

struct MatchConfig {
  std::string game = "kuhn";
  agents::AgentConfig agent;
  Sharing sharing = Sharing::kShared;
  PolicyProfile fixed_opponent;               // seat 1, kFixedOpponent only
  std::optional<PolicyProfile> both_profile;  // both seats play this, frozen
  perturb::MaskRuleSet rules;
  perturb::Schedule schedule;
  long episodes = 20000;
  int seeds = 20;
  std::uint64_t seed_base = 1;
  int eval_window = 2000;
  bool freeze_at_activation = false;
  std::optional<TraceSpec> trace;
  // Greedy evaluation episodes played after training with learning and
  // exploration off, for the variance decomposition.
  int eval_episodes = 0;
};

struct TracePoint {
  long episode_begin;
  long episode_end;
  double value;
  double ci_low;
  double ci_high;
};

struct SeedResult {
  std::uint64_t seed;
  std::vector<EpisodeRecord> records;
  double pre_mean = 0.0;
  double post_mean = 0.0;
  double restored_mean = 0.0;
  bool has_restored = false;
  // First post-activation episode whose reward reaches the collapse band
  // (<= -0.9 on the game's own scale times |r|... threshold supplied by the
  // caller through MatchConfig? kept simple: reward <= threshold).
  long episodes_to_dea = -1;
  long episodes_to_recovery = -1;
  std::vector<TracePoint> trace;
  std::vector<std::pair<int, double>> eval_records;  // (chance_id, reward)
  // Post-phase empirical visit frequency per decision point, for reach
  // measurements from counts.
  std::vector<std::pair<std::string, double>> post_point_visit_freq;
};

struct MatchResult {
  std::vector<SeedResult> seeds;
  std::vector<double> pre_means() const;
  std::vector<double> post_means() const;
  std::vector<double> restored_means() const;
};

// Thresholds for the episodes-to-DEA / recovery diagnostics.
struct CollapseBands {
  double dea_reward = -0.9;
  double recovery_reward = 0.0;
};

struct SeedRun {
  // The per-seed learners, exposed so experiments can inspect/extract.
  std::vector<std::unique_ptr<agents::Agent>> learners;  // 1 (shared) or 2
  agents::Agent* seat_agent[2];
};

// Plays one episode: chance via the chance stream, decisions from the
// configured sources, masks applied to their target player while active.
EpisodeRecord play_episode(const Game& game, const MatchConfig& config, SeedRun& run,
                           long episode, std::uint64_t seed, bool mask_active, Rng& chance_rng,
                           Rng& policy_rng, std::vector<std::string>* visited_points = nullptr);

// As play_episode, with cached initial states and per-seat policy streams.
EpisodeRecord play_episode_streams(const Game& game,
                                   const std::vector<std::pair<HistoryState, double>>& initial,
                                   const MatchConfig& config, SeedRun& run, long episode,
                                   std::uint64_t seed, bool mask_active, Rng& chance_rng,
                                   std::array<Rng*, 2> policy_rng,
                                   std::vector<std::string>* visited_points = nullptr);

// Full deterministic run for one seed index.
SeedResult run_seed(const Game& game, const MatchConfig& config, int seed_index,
                    const CollapseBands& bands = {});

// All seeds (parallelized); deterministic aggregation order.
MatchResult run_match(const MatchConfig& config, const CollapseBands& bands = {});

}  // namespace caclab::selfplay
