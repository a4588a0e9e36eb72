#include "caclab/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "caclab/core/check.hpp"

namespace caclab::metrics {
namespace {

CapacityReport capacity_impl(const Game& game, const perturb::MaskRuleSet& rules,
                             const PolicyProfile* profile, Player player) {
  GameTree tree(game, rules);
  CapacityReport report;
  std::vector<double> reach;
  if (profile != nullptr) reach = tree.node_reach(*profile, /*strict=*/false);

  for (const auto& is : tree.info_sets()) {
    if (is.player != player) continue;
    std::string point = decision_point_of(is.key);
    auto& detail = report.per_point_detail[point];
    detail.retained_actions =
        std::max(detail.retained_actions, static_cast<int>(is.actions.size()));
    if (is.actions.size() >= 2) {
      ++report.cac_raw_infosets;
      if (profile != nullptr) {
        double r = 0.0;
        for (int n : is.nodes) r += reach[n];
        report.cac_weighted += r;
      }
    }
    if (profile != nullptr) {
      double r = 0.0;
      for (int n : is.nodes) r += reach[n];
      detail.reach += r;
    }
  }
  for (const auto& [point, detail] : report.per_point_detail) {
    if (detail.retained_actions >= 2) ++report.cac_decision_points;
  }
  report.has_weighted = profile != nullptr;
  return report;
}

}  // namespace

std::string CapacityReport::to_json() const {
  std::ostringstream os;
  os << "{\"cac_decision_points\":" << cac_decision_points
     << ",\"cac_raw_infosets\":" << cac_raw_infosets << ",\"cac_weighted\":";
  if (has_weighted) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", cac_weighted);
    os << buf;
  } else {
    os << "null";
  }
  os << ",\"per_point_detail\":{";
  bool first = true;
  for (const auto& [point, d] : per_point_detail) {
    if (!first) os << ",";
    first = false;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", d.reach);
    os << "\"" << point << "\":{\"retained_action_count\":" << d.retained_actions
       << ",\"aggregate_reach\":" << buf << "}";
  }
  os << "}}";
  return os.str();
}

std::string ValueReport::to_json() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "{\"player_value\":%.12g,\"br_value\":%.12g,"
                "\"improvement_bound\":%.12g,\"epsilon_floor\":%.12g}",
                player_value, br_value, improvement_bound, epsilon_floor);
  return buf;
}

CapacityReport compute_cac(const Game& game, const perturb::MaskRuleSet& rules,
                           Player player) {
  return capacity_impl(game, rules, nullptr, player);
}

CapacityReport compute_cac_report(const Game& game, const perturb::MaskRuleSet& rules,
                                  const PolicyProfile& profile, Player player) {
  return capacity_impl(game, rules, &profile, player);
}

double compute_cac_weighted(const Game& game, const perturb::MaskRuleSet& rules,
                            const PolicyProfile& profile, Player player) {
  return capacity_impl(game, rules, &profile, player).cac_weighted;
}

BestResponseResult best_response(const GameTree& tree, const PolicyProfile& fixed_profile,
                                 Player responder) {
  const auto& nodes = tree.nodes();
  const auto& edges = tree.edges();
  const auto& infos = tree.info_sets();

  // Opponent-and-chance reach of every node; the responder "reaches" all of
  // its own branches.
  std::vector<double> weight(nodes.size(), 0.0);
  weight[tree.root()] = 1.0;
  std::vector<int> stack = {tree.root()};
  while (!stack.empty()) {
    int idx = stack.back();
    stack.pop_back();
    const auto& n = nodes[idx];
    if (n.kind == GameTree::Kind::kTerminal) continue;
    if (n.kind == GameTree::Kind::kChance) {
      for (int e = n.edge_begin; e < n.edge_end; ++e) {
        weight[edges[e].child] += weight[idx] * edges[e].prob;
        stack.push_back(edges[e].child);
      }
      continue;
    }
    const auto& is = infos[n.info_index];
    if (n.player == responder) {
      for (int e = n.edge_begin; e < n.edge_end; ++e) {
        weight[edges[e].child] += weight[idx];
        stack.push_back(edges[e].child);
      }
    } else {
      std::vector<double> probs = fixed_profile.probs(is.key, is.actions, /*strict=*/false);
      for (int e = n.edge_begin; e < n.edge_end; ++e) {
        weight[edges[e].child] += weight[idx] * probs[e - n.edge_begin];
        stack.push_back(edges[e].child);
      }
    }
  }

  // Decide responder info sets deepest-first; perfect recall guarantees all
  // deeper decisions are already fixed when a set is processed.
  std::vector<int> order;
  for (std::size_t i = 0; i < infos.size(); ++i) {
    if (infos[i].player == responder) order.push_back(static_cast<int>(i));
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return infos[a].depth > infos[b].depth; });

  std::vector<int> br_choice(infos.size(), -1);  // local edge offset
  std::vector<double> value(nodes.size(), 0.0);  // responder's value
  std::vector<char> done(nodes.size(), 0);

  auto eval = [&](auto&& self, int idx) -> double {
    if (done[idx]) return value[idx];
    const auto& n = nodes[idx];
    double v = 0.0;
    if (n.kind == GameTree::Kind::kTerminal) {
      v = n.utility[responder];
    } else if (n.kind == GameTree::Kind::kChance) {
      for (int e = n.edge_begin; e < n.edge_end; ++e) {
        v += edges[e].prob * self(self, edges[e].child);
      }
    } else if (n.player == responder) {
      int choice = br_choice[n.info_index];
      CACLAB_CHECK(choice >= 0, "best response ordering violated at "
                                    << infos[n.info_index].key);
      v = self(self, edges[n.edge_begin + choice].child);
    } else {
      const auto& is = infos[n.info_index];
      std::vector<double> probs = fixed_profile.probs(is.key, is.actions, /*strict=*/false);
      for (int e = n.edge_begin; e < n.edge_end; ++e) {
        v += probs[e - n.edge_begin] * self(self, edges[e].child);
      }
    }
    value[idx] = v;
    done[idx] = 1;
    return v;
  };

  BestResponseResult result;
  for (int info : order) {
    const auto& is = infos[info];
    int num_actions = static_cast<int>(is.actions.size());
    double best = -1e300;
    int best_local = 0;
    for (int local = 0; local < num_actions; ++local) {
      double total = 0.0;
      for (int node : is.nodes) {
        const auto& n = nodes[node];
        total += weight[node] * eval(eval, edges[n.edge_begin + local].child);
      }
      if (total > best + 1e-12) {
        best = total;
        best_local = local;
      }
    }
    br_choice[info] = best_local;
    result.policy.set(is.key, {{is.actions[best_local], 1.0}});
  }
  result.value = eval(eval, tree.root());
  return result;
}

BestResponseResult best_response(const Game& game, const perturb::MaskRuleSet& rules,
                                 const PolicyProfile& fixed_profile, Player responder) {
  GameTree tree(game, rules);
  return best_response(tree, fixed_profile, responder);
}

double exploitability(const GameTree& tree, const PolicyProfile& profile) {
  CACLAB_CHECK_ARG(tree.game().zero_sum(),
                   "exploitability is defined for zero-sum games only; "
                       << tree.game().name() << " is not");
  double br0 = best_response(tree, profile, 0).value;
  double br1 = best_response(tree, profile, 1).value;
  return (br0 + br1) / 2.0;
}

double exploitability(const Game& game, const PolicyProfile& profile) {
  GameTree tree(game);
  return exploitability(tree, profile);
}

double normalize(double r, const RewardBounds& bounds) {
  CACLAB_CHECK_ARG(bounds.lo < bounds.hi, "degenerate reward bounds");
  CACLAB_CHECK_ARG(r >= bounds.lo - 1e-12 && r <= bounds.hi + 1e-12,
                   "reward " << r << " outside bounds [" << bounds.lo << ", " << bounds.hi
                             << "]");
  return (r - bounds.lo) / (bounds.hi - bounds.lo);
}

double dea_floor(double epsilon, const Game& game, const perturb::MaskRuleSet& rules) {
  CACLAB_CHECK_ARG(epsilon >= 0.0 && epsilon <= 1.0, "epsilon outside [0,1]");
  GameTree tree(game, rules);
  for (const auto& is : tree.info_sets()) {
    CACLAB_CHECK_ARG(is.player != 0 || is.actions.size() == 1,
                     "dea_floor requires zero contingency; " << is.key << " retains "
                                                             << is.actions.size()
                                                             << " actions");
  }
  PolicyProfile empty;
  BestResponseResult br = best_response(tree, empty, /*responder=*/1);

  // Evaluate with the responder mixing eps-uniformly around its BR action.
  const auto& nodes = tree.nodes();
  const auto& edges = tree.edges();
  const auto& infos = tree.info_sets();
  auto walk = [&](auto&& self, int idx) -> double {
    const auto& n = nodes[idx];
    if (n.kind == GameTree::Kind::kTerminal) return n.utility[0];
    if (n.kind == GameTree::Kind::kChance) {
      double v = 0.0;
      for (int e = n.edge_begin; e < n.edge_end; ++e) {
        v += edges[e].prob * self(self, edges[e].child);
      }
      return v;
    }
    const auto& is = infos[n.info_index];
    if (n.player == 0) return self(self, edges[n.edge_begin].child);  // forced
    std::vector<double> probs = br.policy.probs(is.key, is.actions, /*strict=*/false);
    int k = static_cast<int>(is.actions.size());
    double v = 0.0;
    for (int e = n.edge_begin; e < n.edge_end; ++e) {
      double p = probs[e - n.edge_begin] * (1.0 - epsilon) + epsilon / k;
      v += p * self(self, edges[e].child);
    }
    return v;
  };
  return walk(walk, tree.root());
}

}  // namespace caclab::metrics
