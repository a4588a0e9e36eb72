#include "caclab/agents/tables.hpp"

#include <algorithm>
#include <cstdio>

namespace caclab::agents {

std::string ValueTable::serialize(const Game& game) const {
  std::vector<const std::string*> keys;
  keys.reserve(map_.size());
  for (const auto& [key, row] : map_) keys.push_back(&key);
  std::sort(keys.begin(), keys.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  const auto& labels = game.action_labels();
  std::string out;
  char buf[64];
  for (const std::string* key : keys) {
    for (const auto& [a, v] : map_.at(*key)) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += *key;
      out += '\t';
      out += labels[a];
      out += '\t';
      out += buf;
      out += '\n';
    }
  }
  return out;
}

}  // namespace caclab::agents
