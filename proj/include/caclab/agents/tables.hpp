#pragma once

#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

#include "caclab/games/game.hpp"

namespace caclab::agents {

// Sparse (info key, action) -> value map with default 0. Entries are tiny
// per key, so each key holds a small sorted vector.
class ValueTable {
 public:
  using Row = std::vector<std::pair<Action, double>>;

  double get(const std::string& key, Action a) const {
    auto it = map_.find(key);
    if (it == map_.end()) return 0.0;
    for (const auto& [act, v] : it->second) {
      if (act == a) return v;
    }
    return 0.0;
  }

  void set(const std::string& key, Action a, double v) { slot(key, a) = v; }

  double& slot(const std::string& key, Action a) {
    Row& row = map_[key];
    for (auto& [act, v] : row) {
      if (act == a) return v;
    }
    auto pos = row.begin();
    while (pos != row.end() && pos->first < a) ++pos;
    return row.insert(pos, {a, 0.0})->second;
  }

  // Argmax over `legal`, ties to the lowest action id.
  Action greedy(const std::string& key, const std::vector<Action>& legal) const {
    Action best = legal[0];
    double best_v = get(key, best);
    for (std::size_t i = 1; i < legal.size(); ++i) {
      double v = get(key, legal[i]);
      if (v > best_v) {
        best_v = v;
        best = legal[i];
      }
    }
    return best;
  }

  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  const std::unordered_map<std::string, Row>& rows() const { return map_; }

  // One line per (key, action label, value), sorted; bit-exact across runs.
  std::string serialize(const Game& game) const;

 private:
  std::unordered_map<std::string, Row> map_;
};

// Preference table: policy is the softmax of preferences over the legal
// (effective) set, so masked actions get zero probability by exclusion.
class PreferenceTable {
 public:
  double get(const std::string& key, Action a) const { return table_.get(key, a); }
  double& slot(const std::string& key, Action a) { return table_.slot(key, a); }

  std::vector<double> softmax(const std::string& key, const std::vector<Action>& legal) const {
    std::vector<double> out(legal.size());
    double mx = -1e300;
    for (std::size_t i = 0; i < legal.size(); ++i) {
      out[i] = table_.get(key, legal[i]);
      mx = std::max(mx, out[i]);
    }
    double z = 0.0;
    for (double& v : out) {
      v = std::exp(v - mx);
      z += v;
    }
    for (double& v : out) v /= z;
    return out;
  }

  std::string serialize(const Game& game) const { return table_.serialize(game); }
  const ValueTable& raw() const { return table_; }

 private:
  ValueTable table_;
};

inline double entropy_nats(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0) h -= p * std::log(p);
  }
  return h;
}

}  // namespace caclab::agents
