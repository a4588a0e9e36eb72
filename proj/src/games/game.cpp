#include "caclab/games/game.hpp"

#include <algorithm>

#include "caclab/core/check.hpp"
#include "game_factories.hpp"

namespace caclab {

std::vector<std::pair<int, double>> Game::chance_outcomes(const HistoryState&) const {
  fail("game has no in-tree chance nodes");
}

HistoryState Game::apply_chance(const HistoryState&, int) const {
  fail("game has no in-tree chance nodes");
}

Action Game::action_id(const std::string& label) const {
  const auto& labels = action_labels();
  auto it = std::find(labels.begin(), labels.end(), label);
  CACLAB_CHECK_ARG(it != labels.end(),
                   "unknown action label '" << label << "' for game " << name());
  return static_cast<Action>(it - labels.begin());
}

std::string decision_point_of(const std::string& info_key) {
  auto first = info_key.find('|');
  CACLAB_CHECK(first != std::string::npos, "malformed info key " << info_key);
  auto second = info_key.find('|', first + 1);
  CACLAB_CHECK(second != std::string::npos, "malformed info key " << info_key);
  return info_key.substr(0, first + 1) + info_key.substr(second + 1);
}

std::unique_ptr<Game> make_game(const std::string& name) {
  using namespace detail;
  if (name == "kuhn") return make_kuhn();
  if (name == "leduc") return make_leduc(3, 2, "leduc");
  if (name == "leduc4") return make_leduc(4, 3, "leduc4");
  if (name == "liars_dice_1d" || name == "liars_dice") return make_liars_dice(1, "liars_dice_1d");
  if (name == "liars_dice_2d") return make_liars_dice(2, "liars_dice_2d");
  if (name == "matching_pennies") return make_matching_pennies();
  if (name == "coordination") return make_coordination();
  if (name == "ipd") return make_ipd();
  if (name == "negotiation") return make_negotiation();
  fail_arg("unknown game name '" + name + "'");
}

const std::vector<std::string>& registered_games() {
  static const std::vector<std::string> kNames = {
      "kuhn",         "leduc",       "leduc4",           "liars_dice_1d", "liars_dice_2d",
      "matching_pennies", "coordination", "ipd", "negotiation"};
  return kNames;
}

}  // namespace caclab
