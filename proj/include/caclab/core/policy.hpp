#pragma once

#include <map>
#include <string>
#include <vector>

#include "caclab/games/game.hpp"

namespace caclab {

// Per-player behaviour profile: info key -> distribution over legal actions.
// Stored sorted so serialization is stable.
class PolicyProfile {
 public:
  using Dist = std::vector<std::pair<Action, double>>;

  void set(const std::string& key, Dist dist);
  bool contains(const std::string& key) const { return table_.count(key) != 0; }
  const Dist* find(const std::string& key) const;
  std::size_t size() const { return table_.size(); }
  const std::map<std::string, Dist>& table() const { return table_; }

  // Distribution restricted to `legal` and renormalized; singleton legal
  // sets need no entry. With strict=true a missing key (or one with no mass
  // on the legal set) is an error; otherwise it falls back to uniform.
  std::vector<double> probs(const std::string& key, const std::vector<Action>& legal,
                            bool strict) const;

  // One line per (key, action label, probability), sorted; bit-stable.
  std::string serialize(const Game& game) const;

 private:
  std::map<std::string, Dist> table_;
};

}  // namespace caclab
