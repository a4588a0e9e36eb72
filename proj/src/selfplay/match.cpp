#include "caclab/selfplay/match.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <map>
#include <set>
#include <thread>

#include "caclab/agents/dqn.hpp"
#include "caclab/agents/tabular.hpp"
#include "caclab/core/check.hpp"
#include "caclab/metrics/metrics.hpp"

namespace caclab::selfplay {
namespace {

Phase phase_of(long episode, const perturb::Schedule& s) {
  if (episode < s.activate_at) return Phase::kPre;
  if (s.deactivate_at >= 0 && episode >= s.deactivate_at) return Phase::kRestored;
  return Phase::kPost;
}

double window_mean(const std::vector<double>& xs, std::size_t begin, std::size_t end) {
  double total = 0.0;
  for (std::size_t i = begin; i < end; ++i) total += xs[i];
  return end > begin ? total / (end - begin) : 0.0;
}

int sample_outcome(const std::vector<std::pair<int, double>>& outcomes, Rng& rng) {
  double u = rng.uniform();
  double acc = 0.0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    acc += outcomes[i].second;
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(outcomes.size()) - 1;
}

// Behaviour profile as actually deployed: masked actions get zero mass.
PolicyProfile played_profile(const metrics::GameTree& tree, SeedRun& run,
                             const perturb::MaskRuleSet& rules, bool mask_active) {
  PolicyProfile profile;
  for (const auto& is : tree.info_sets()) {
    const agents::Agent& agent = *run.seat_agent[is.player];
    std::vector<Action> legal = is.actions;
    if (mask_active && !rules.empty()) legal = perturb::effective_actions(is.key, legal, rules);
    std::vector<double> probs = agent.policy_probs(tree.game(), is.sample, is.player, is.key,
                                                   legal, agents::PolicyKind::kBehavior);
    PolicyProfile::Dist dist;
    for (std::size_t i = 0; i < legal.size(); ++i) dist.emplace_back(legal[i], probs[i]);
    profile.set(is.key, std::move(dist));
  }
  return profile;
}

double snapshot_metric(const std::string& metric, const metrics::GameTree& tree, SeedRun& run,
                       const perturb::MaskRuleSet& rules, bool mask_active) {
  const Game& game = tree.game();
  PolicyProfile prof = played_profile(tree, run, rules, mask_active);
  if (metric == "exploitability") return metrics::exploitability(tree, prof);

  CACLAB_CHECK_ARG(metric == "entropy" || metric == "qgap",
                   "unknown trace metric '" << metric << "'");
  std::vector<double> reach = tree.node_reach(prof, /*strict=*/false);
  double total_reach = 0.0;
  double total = 0.0;
  for (const auto& is : tree.info_sets()) {
    double r = 0.0;
    for (int n : is.nodes) r += reach[n];
    const agents::Agent* agent = run.seat_agent[is.player];
    double v = 0.0;
    if (metric == "entropy") {
      std::vector<Action> legal = is.actions;
      if (mask_active && !rules.empty()) legal = perturb::effective_actions(is.key, legal, rules);
      v = agents::entropy_nats(agent->policy_probs(game, is.sample, is.player, is.key, legal,
                                                   agents::PolicyKind::kBehavior));
    } else if (const auto* dqn = dynamic_cast<const agents::DqnAgent*>(agent)) {
      v = dqn->q_gap(game, is.sample, is.player);
    } else if (const auto* tab = dynamic_cast<const agents::TabularAgent*>(agent)) {
      if (is.actions.size() >= 2) {
        double best = -1e300, acc = 0.0;
        for (Action a : is.actions) best = std::max(best, tab->table().get(is.key, a));
        for (Action a : is.actions) acc += best - tab->table().get(is.key, a);
        v = acc / (static_cast<double>(is.actions.size()) - 1);
      }
    } else {
      fail_arg("qgap trace requires a value-based agent");
    }
    total += r * v;
    total_reach += r;
  }
  return total_reach > 0 ? total / total_reach : 0.0;
}

}  // namespace

std::vector<double> MatchResult::pre_means() const {
  std::vector<double> out;
  for (const auto& s : seeds) out.push_back(s.pre_mean);
  return out;
}
std::vector<double> MatchResult::post_means() const {
  std::vector<double> out;
  for (const auto& s : seeds) out.push_back(s.post_mean);
  return out;
}
std::vector<double> MatchResult::restored_means() const {
  std::vector<double> out;
  for (const auto& s : seeds) out.push_back(s.restored_mean);
  return out;
}

EpisodeRecord play_episode(const Game& game, const MatchConfig& config, SeedRun& run,
                           long episode, std::uint64_t seed, bool mask_active, Rng& chance_rng,
                           Rng& policy_rng, std::vector<std::string>* visited_points) {
  auto initial = game.initial_states();
  return play_episode_streams(game, initial, config, run, episode, seed, mask_active,
                              chance_rng, {&policy_rng, &policy_rng}, visited_points);
}

EpisodeRecord play_episode_streams(const Game& game,
                                   const std::vector<std::pair<HistoryState, double>>& initial,
                                   const MatchConfig& config, SeedRun& run, long episode,
                                   std::uint64_t seed, bool mask_active, Rng& chance_rng,
                                   std::array<Rng*, 2> policy_rng,
                                   std::vector<std::string>* visited_points) {
  double u = chance_rng.uniform();
  double acc = 0.0;
  int chance_id = static_cast<int>(initial.size()) - 1;
  for (std::size_t i = 0; i < initial.size(); ++i) {
    acc += initial[i].second;
    if (u < acc) {
      chance_id = static_cast<int>(i);
      break;
    }
  }
  HistoryState state = initial[chance_id].first;

  while (!game.is_terminal(state)) {
    if (game.is_chance(state)) {
      auto outcomes = game.chance_outcomes(state);
      state = game.apply_chance(state, outcomes[sample_outcome(outcomes, chance_rng)].first);
      continue;
    }
    Player p = state.to_move;
    std::string key = game.info_key(state);
    std::vector<Action> legal = game.legal_actions(state);
    if (mask_active && !config.rules.empty()) {
      legal = perturb::effective_actions(key, legal, config.rules);
    }
    if (visited_points != nullptr && p == 0) {
      visited_points->push_back(decision_point_of(key));
    }
    Action a = run.seat_agent[p]->act(game, state, p, key, legal, *policy_rng[p]);
    state = game.apply(state, a);
  }

  auto utility = game.utilities(state);
  double scale = game.report_scale();
  return EpisodeRecord{episode,
                       seed,
                       utility[0] * scale,
                       utility[1] * scale,
                       phase_of(episode, config.schedule),
                       mask_active,
                       chance_id};
}

SeedResult run_seed(const Game& game, const MatchConfig& config, int seed_index,
                    const CollapseBands& bands) {
  config.schedule.validate();
  perturb::validate_rules(game, config.rules);
  std::uint64_t seed = config.seed_base + static_cast<std::uint64_t>(seed_index);
  Rng master(Rng::mix(config.seed_base, static_cast<std::uint64_t>(seed_index) + 0x51ULL));
  Rng chance_rng = master.split("chance");
  Rng schedule_rng = master.split("schedule");
  std::array<Rng, 2> policy_rng = {master.split("policy0"), master.split("policy1")};
  bool single_stream = config.sharing != Sharing::kSeparate;
  std::array<Rng*, 2> streams = {&policy_rng[0],
                                 single_stream ? &policy_rng[0] : &policy_rng[1]};

  SeedRun run;
  if (config.both_profile.has_value()) {
    run.learners.push_back(agents::make_profile_agent(*config.both_profile));
    run.seat_agent[0] = run.learners[0].get();
    run.seat_agent[1] = run.learners[0].get();
  } else if (config.sharing == Sharing::kSeparate) {
    run.learners.push_back(
        agents::make_agent(config.agent, game, master.split("agent0").next_u64()));
    run.learners.push_back(
        agents::make_agent(config.agent, game, master.split("agent1").next_u64()));
    run.seat_agent[0] = run.learners[0].get();
    run.seat_agent[1] = run.learners[1].get();
  } else if (config.sharing == Sharing::kFixedOpponent) {
    CACLAB_CHECK_ARG(config.fixed_opponent.size() > 0,
                     "fixed-opponent mode requires a complete frozen profile");
    run.learners.push_back(
        agents::make_agent(config.agent, game, master.split("agent0").next_u64()));
    run.learners.push_back(agents::make_profile_agent(config.fixed_opponent));
    run.seat_agent[0] = run.learners[0].get();
    run.seat_agent[1] = run.learners[1].get();
  } else {
    run.learners.push_back(
        agents::make_agent(config.agent, game, master.split("agent0").next_u64()));
    run.seat_agent[0] = run.learners[0].get();
    run.seat_agent[1] = run.learners[0].get();
  }

  SeedResult result;
  result.seed = seed;
  result.records.reserve(static_cast<std::size_t>(config.episodes));

  std::unique_ptr<metrics::GameTree> trace_tree;
  bool metric_trace = config.trace.has_value() && config.trace->metric != "reward";
  if (metric_trace) trace_tree = std::make_unique<metrics::GameTree>(game);

  std::map<std::string, long> point_visits;
  long post_episodes = 0;
  std::vector<std::string> visited;
  std::vector<double> rewards;
  rewards.reserve(static_cast<std::size_t>(config.episodes));
  const auto initial = game.initial_states();

  for (long ep = 0; ep < config.episodes; ++ep) {
    if (config.freeze_at_activation && ep == config.schedule.activate_at) {
      for (auto& l : run.learners) l->freeze();
    }
    bool active = perturb::schedule_active(ep, config.schedule, schedule_rng);
    for (auto& l : run.learners) l->begin_episode(ep, policy_rng[0]);
    visited.clear();
    EpisodeRecord rec = play_episode_streams(game, initial, config, run, ep, seed, active,
                                             chance_rng, streams, &visited);
    double raw_u0 = rec.reward_p0 / game.report_scale();
    double raw_u1 = rec.reward_p1 / game.report_scale();
    run.seat_agent[0]->end_episode(0, raw_u0, *streams[0]);
    run.seat_agent[1]->end_episode(1, raw_u1, *streams[1]);
    for (auto& l : run.learners) l->episode_done(policy_rng[0]);

    result.records.push_back(rec);
    rewards.push_back(rec.reward_p0);

    if (rec.phase == Phase::kPost) {
      ++post_episodes;
      std::set<std::string> unique(visited.begin(), visited.end());
      for (const auto& pt : unique) ++point_visits[pt];
      if (result.episodes_to_dea < 0 && rec.reward_p0 <= bands.dea_reward) {
        result.episodes_to_dea = ep - config.schedule.activate_at;
      }
    }
    if (rec.phase == Phase::kRestored && result.episodes_to_recovery < 0 &&
        rec.reward_p0 >= bands.recovery_reward) {
      result.episodes_to_recovery = ep - config.schedule.deactivate_at;
    }

    if (config.trace.has_value() && (ep + 1) % config.trace->window == 0) {
      long begin = ep + 1 - config.trace->window;
      if (config.trace->metric == "reward") {
        double mean = window_mean(rewards, begin, ep + 1);
        double var = 0.0;
        for (long i = begin; i <= ep; ++i) var += (rewards[i] - mean) * (rewards[i] - mean);
        var /= config.trace->window;
        double half = 1.96 * std::sqrt(var / config.trace->window);
        result.trace.push_back(TracePoint{begin, ep + 1, mean, mean - half, mean + half});
      } else {
        double v = snapshot_metric(config.trace->metric, *trace_tree, run, config.rules, active);
        result.trace.push_back(TracePoint{begin, ep + 1, v, v, v});
      }
    }
  }

  auto phase_window = [&](Phase phase) -> std::pair<bool, double> {
    long end = -1, begin = -1;
    for (long i = static_cast<long>(result.records.size()) - 1; i >= 0; --i) {
      if (result.records[i].phase == phase) {
        if (end < 0) end = i + 1;
        begin = i;
      } else if (end >= 0) {
        break;
      }
    }
    if (end < 0) return {false, 0.0};
    begin = std::max(begin, end - config.eval_window);
    return {true, window_mean(rewards, begin, end)};
  };
  result.pre_mean = phase_window(Phase::kPre).second;
  result.post_mean = phase_window(Phase::kPost).second;
  auto restored = phase_window(Phase::kRestored);
  result.has_restored = restored.first;
  result.restored_mean = restored.second;

  for (const auto& [pt, count] : point_visits) {
    result.post_point_visit_freq.emplace_back(
        pt, post_episodes > 0 ? static_cast<double>(count) / post_episodes : 0.0);
  }

  // Greedy evaluation episodes: learning and exploration off, masks as of
  // the final training episode.
  if (config.eval_episodes > 0) {
    for (auto& l : run.learners) l->freeze();
    long last = config.episodes - 1;
    bool active = last >= config.schedule.activate_at &&
                  (config.schedule.deactivate_at < 0 || last < config.schedule.deactivate_at);
    for (int e = 0; e < config.eval_episodes; ++e) {
      double u = chance_rng.uniform();
      double acc = 0.0;
      int chance_id = static_cast<int>(initial.size()) - 1;
      for (std::size_t i = 0; i < initial.size(); ++i) {
        acc += initial[i].second;
        if (u < acc) {
          chance_id = static_cast<int>(i);
          break;
        }
      }
      HistoryState state = initial[chance_id].first;
      while (!game.is_terminal(state)) {
        if (game.is_chance(state)) {
          auto outcomes = game.chance_outcomes(state);
          state = game.apply_chance(state, outcomes[sample_outcome(outcomes, chance_rng)].first);
          continue;
        }
        Player p = state.to_move;
        std::string key = game.info_key(state);
        std::vector<Action> legal = game.legal_actions(state);
        if (active && !config.rules.empty()) {
          legal = perturb::effective_actions(key, legal, config.rules);
        }
        auto probs = run.seat_agent[p]->policy_probs(game, state, p, key, legal,
                                                     agents::PolicyKind::kGreedy);
        std::size_t best = 0;
        for (std::size_t i = 1; i < probs.size(); ++i) {
          if (probs[i] > probs[best]) best = i;
        }
        state = game.apply(state, legal[best]);
      }
      result.eval_records.emplace_back(chance_id,
                                       game.utilities(state)[0] * game.report_scale());
    }
  }
  return result;
}

MatchResult run_match(const MatchConfig& config, const CollapseBands& bands) {
  MatchResult result;
  result.seeds.resize(static_cast<std::size_t>(config.seeds));
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(config.seeds));
  std::atomic<int> next{0};
  std::vector<std::future<void>> futures;
  for (unsigned w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&]() {
      auto game = make_game(config.game);
      while (true) {
        int i = next.fetch_add(1);
        if (i >= config.seeds) return;
        result.seeds[static_cast<std::size_t>(i)] = run_seed(*game, config, i, bands);
      }
    }));
  }
  for (auto& f : futures) f.get();
  return result;
}

}  // namespace caclab::selfplay
