#include "caclab/agents/psro.hpp"

#include <atomic>
#include <future>
#include <thread>

#include "caclab/agents/tabular.hpp"
#include "caclab/core/check.hpp"

namespace caclab::agents {
namespace {

// A frozen greedy snapshot; unvisited keys fall back to uniform.
struct Snapshot {
  PolicyProfile profile;
};

Action snapshot_act(const Snapshot& snap, const std::string& key,
                    const std::vector<Action>& legal, Rng& rng) {
  std::vector<double> probs = snap.profile.probs(key, legal, /*strict=*/false);
  return legal[sample_index(probs, rng)];
}

Snapshot take_snapshot(const ValueTable& table) {
  Snapshot snap;
  for (const auto& [key, row] : table.rows()) {
    if (row.empty()) continue;
    Action best = row[0].first;
    double best_v = row[0].second;
    for (const auto& [a, v] : row) {
      if (v > best_v || (v == best_v && a < best)) {
        best_v = v;
        best = a;
      }
    }
    snap.profile.set(key, {{best, 1.0}});
  }
  return snap;
}

PsroSeedResult run_one_seed(const Game& game, const PsroConfig& config, int seed_index) {
  Rng master(Rng::mix(config.seed_base, static_cast<std::uint64_t>(seed_index) + 0x9157ULL));
  Rng chance_rng = master.split("chance");
  Rng policy_rng = master.split("policy");
  Rng pick_rng = master.split("opponent_pick");

  long total = config.population_size * config.oracle_episodes;
  long activate = total / 2;
  auto initial = game.initial_states();

  std::array<std::vector<Snapshot>, 2> population;
  PsroSeedResult result;
  result.seed = config.seed_base + static_cast<std::uint64_t>(seed_index);
  result.rewards.reserve(total);

  for (int epoch = 0; epoch < config.population_size; ++epoch) {
    std::array<std::unique_ptr<TabularAgent>, 2> live = {
        std::make_unique<TabularAgent>(config.oracle, TabularAgent::Update::kMonteCarlo),
        std::make_unique<TabularAgent>(config.oracle, TabularAgent::Update::kMonteCarlo)};
    for (long e = 0; e < config.oracle_episodes; ++e) {
      long ep = epoch * config.oracle_episodes + e;
      bool active = ep >= activate;
      // One training episode per side: `side`'s live oracle vs a uniform
      // draw from the other side's population (live included).
      for (int side = 0; side < 2; ++side) {
        const auto& pool = population[1 - side];
        int pick = pick_rng.uniform_int(static_cast<int>(pool.size()) + 1);
        const Snapshot* opp = pick < static_cast<int>(pool.size()) ? &pool[pick] : nullptr;

        live[side]->begin_episode(ep, policy_rng);
        live[1 - side]->begin_episode(ep, policy_rng);
        double cu = chance_rng.uniform();
        double acc = 0.0;
        int chance_id = static_cast<int>(initial.size()) - 1;
        for (std::size_t i = 0; i < initial.size(); ++i) {
          acc += initial[i].second;
          if (cu < acc) {
            chance_id = static_cast<int>(i);
            break;
          }
        }
        HistoryState state = initial[chance_id].first;
        while (!game.is_terminal(state)) {
          if (game.is_chance(state)) {
            auto outcomes = game.chance_outcomes(state);
            double ou = chance_rng.uniform();
            double oacc = 0.0;
            int opick = static_cast<int>(outcomes.size()) - 1;
            for (std::size_t i = 0; i < outcomes.size(); ++i) {
              oacc += outcomes[i].second;
              if (ou < oacc) {
                opick = static_cast<int>(i);
                break;
              }
            }
            state = game.apply_chance(state, outcomes[opick].first);
            continue;
          }
          Player p = state.to_move;
          std::string key = game.info_key(state);
          std::vector<Action> legal = game.legal_actions(state);
          if (active && !config.rules.empty()) {
            legal = perturb::effective_actions(key, legal, config.rules);
          }
          Action a;
          if (p == side) {
            a = live[side]->act(game, state, p, key, legal, policy_rng);
          } else if (opp == nullptr) {
            a = live[p]->act(game, state, p, key, legal, policy_rng);
          } else {
            a = snapshot_act(*opp, key, legal, policy_rng);
          }
          state = game.apply(state, a);
        }
        auto utility = game.utilities(state);
        live[side]->end_episode(side, utility[side], policy_rng);
        if (opp == nullptr) live[1 - side]->end_episode(1 - side, utility[1 - side], policy_rng);
        if (side == 0) result.rewards.push_back(utility[0] * game.report_scale());
      }
    }
    for (int side = 0; side < 2; ++side) {
      population[side].push_back(take_snapshot(live[side]->table()));
    }
  }

  long post_begin = std::max(activate, total - config.eval_window);
  long pre_begin = std::max<long>(0, activate - config.eval_window);
  double pre = 0.0, post = 0.0;
  for (long i = pre_begin; i < activate; ++i) pre += result.rewards[i];
  for (long i = post_begin; i < total; ++i) post += result.rewards[i];
  result.pre_mean = pre / (activate - pre_begin);
  result.post_mean = post / (total - post_begin);
  return result;
}

}  // namespace

std::vector<double> PsroResult::post_means() const {
  std::vector<double> out;
  for (const auto& s : seeds) out.push_back(s.post_mean);
  return out;
}

std::vector<double> PsroResult::pre_means() const {
  std::vector<double> out;
  for (const auto& s : seeds) out.push_back(s.pre_mean);
  return out;
}

PsroResult psro_run(const PsroConfig& config) {
  CACLAB_CHECK_ARG(config.population_size >= 1, "population size must be >= 1");
  PsroResult result;
  result.seeds.resize(static_cast<std::size_t>(config.seeds));
  std::atomic<int> next{0};
  unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(config.seeds));
  std::vector<std::future<void>> futures;
  for (unsigned w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&]() {
      auto game = make_game(config.game);
      while (true) {
        int i = next.fetch_add(1);
        if (i >= config.seeds) return;
        result.seeds[static_cast<std::size_t>(i)] = run_one_seed(*game, config, i);
      }
    }));
  }
  for (auto& f : futures) f.get();
  return result;
}

}  // namespace caclab::agents
