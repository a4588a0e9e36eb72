#include "caclab/core/policy.hpp"

#include <cstdio>

#include "caclab/core/check.hpp"

namespace caclab {

void PolicyProfile::set(const std::string& key, Dist dist) {
  table_[key] = std::move(dist);
}

const PolicyProfile::Dist* PolicyProfile::find(const std::string& key) const {
  auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

std::vector<double> PolicyProfile::probs(const std::string& key,
                                         const std::vector<Action>& legal, bool strict) const {
  CACLAB_CHECK_ARG(!legal.empty(), "empty legal set for " << key);
  if (legal.size() == 1) return {1.0};
  const Dist* dist = find(key);
  if (dist == nullptr) {
    CACLAB_CHECK_ARG(!strict, "profile missing reachable key " << key);
    return std::vector<double>(legal.size(), 1.0 / legal.size());
  }
  std::vector<double> out(legal.size(), 0.0);
  double mass = 0.0;
  for (std::size_t i = 0; i < legal.size(); ++i) {
    for (const auto& [a, p] : *dist) {
      if (a == legal[i]) {
        out[i] = p;
        mass += p;
      }
    }
  }
  if (mass <= 1e-12) {
    CACLAB_CHECK_ARG(!strict, "profile has no mass on legal actions at " << key);
    return std::vector<double>(legal.size(), 1.0 / legal.size());
  }
  for (double& p : out) p /= mass;
  return out;
}

std::string PolicyProfile::serialize(const Game& game) const {
  const auto& labels = game.action_labels();
  std::string out;
  char buf[64];
  for (const auto& [key, dist] : table_) {
    for (const auto& [a, p] : dist) {
      std::snprintf(buf, sizeof(buf), "%.17g", p);
      out += key;
      out += '\t';
      out += labels[a];
      out += '\t';
      out += buf;
      out += '\n';
    }
  }
  return out;
}

}  // namespace caclab
