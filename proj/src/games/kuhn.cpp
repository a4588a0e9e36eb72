#include <string>

#include "caclab/core/check.hpp"
#include "game_factories.hpp"

namespace caclab::detail {
namespace {

// Kuhn poker, two-action form. Cards 0=J, 1=Q, 2=K, ante 1.
// "pass" facing a bet folds, "bet" facing a bet calls.
//   pp   showdown +-1      bp  P0 wins +1
//   pbp  P1 wins +1        bb / pbb  showdown +-2
constexpr Action kPass = 0;
constexpr Action kBet = 1;

class KuhnGame final : public Game {
 public:
  const std::string& name() const override {
    static const std::string kName = "kuhn";
    return kName;
  }

  const std::vector<std::string>& action_labels() const override {
    static const std::vector<std::string> kLabels = {"pass", "bet"};
    return kLabels;
  }

  RewardBounds reward_bounds() const override { return {-2.0, 2.0}; }
  bool zero_sum() const override { return true; }
  std::optional<double> nash_reference_value() const override { return -1.0 / 18.0; }

  std::vector<std::pair<HistoryState, double>> initial_states() const override {
    std::vector<std::pair<HistoryState, double>> out;
    for (int c0 = 0; c0 < 3; ++c0) {
      for (int c1 = 0; c1 < 3; ++c1) {
        if (c0 == c1) continue;
        HistoryState s;
        s.private_outcome = {c0, c1};
        s.to_move = 0;
        out.emplace_back(std::move(s), 1.0 / 6.0);
      }
    }
    return out;
  }

  std::vector<Action> legal_actions(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "legal_actions on terminal or chance node");
    return {kPass, kBet};
  }

  HistoryState apply(const HistoryState& s, Action a) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0 && (a == kPass || a == kBet),
                     "illegal action " << a << " in kuhn");
    HistoryState n = s;
    n.actions.push_back(a);
    const auto& h = n.actions;
    if (h.size() == 2 && !(h[0] == kPass && h[1] == kBet)) {
      n.to_move = kTerminalPlayer;
    } else if (h.size() == 3) {
      n.to_move = kTerminalPlayer;
    } else {
      n.to_move = static_cast<Player>(h.size() % 2);
    }
    return n;
  }

  std::array<double, 2> utilities(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move == kTerminalPlayer, "utilities on non-terminal");
    const auto& h = s.actions;
    double hi = s.private_outcome[0] > s.private_outcome[1] ? 1.0 : -1.0;
    double u0;
    if (h[0] == kPass && h[1] == kPass) {
      u0 = hi;
    } else if (h[0] == kBet && h[1] == kPass) {
      u0 = 1.0;  // P1 folded
    } else if (h[0] == kBet && h[1] == kBet) {
      u0 = 2.0 * hi;
    } else if (h[2] == kPass) {
      u0 = -1.0;  // P0 folded after pass-bet
    } else {
      u0 = 2.0 * hi;
    }
    return {u0, -u0};
  }

  std::string info_key(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "info_key on terminal or chance node");
    static const char* kCards = "JQK";
    std::string key = "P" + std::to_string(s.to_move) + "|";
    key += kCards[s.private_outcome[s.to_move]];
    key += '|';
    for (Action a : s.actions) key += (a == kPass ? 'p' : 'b');
    return key;
  }

  int private_cardinality() const override { return 3; }
  int private_index(const HistoryState& s, Player p) const override {
    return s.private_outcome[p];
  }
  int token_cardinality() const override { return 2; }
  int max_public_tokens() const override { return 3; }
  std::vector<int> public_tokens(const HistoryState& s, Player) const override {
    return std::vector<int>(s.actions.begin(), s.actions.end());
  }
};

}  // namespace

std::unique_ptr<Game> make_kuhn() { return std::make_unique<KuhnGame>(); }

}  // namespace caclab::detail
