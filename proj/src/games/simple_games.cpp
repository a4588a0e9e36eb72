#include <string>

#include "caclab/core/check.hpp"
#include "game_factories.hpp"

namespace caclab::detail {
namespace {

// Matching pennies as a two-ply tree with the second move hidden: P0 is the
// matcher and wins on equal choices.
class MatchingPenniesGame final : public Game {
 public:
  const std::string& name() const override {
    static const std::string kName = "matching_pennies";
    return kName;
  }
  const std::vector<std::string>& action_labels() const override {
    static const std::vector<std::string> kLabels = {"heads", "tails"};
    return kLabels;
  }
  RewardBounds reward_bounds() const override { return {-1.0, 1.0}; }
  bool zero_sum() const override { return true; }
  std::optional<double> nash_reference_value() const override { return 0.0; }

  std::vector<std::pair<HistoryState, double>> initial_states() const override {
    HistoryState s;
    s.to_move = 0;
    return {{s, 1.0}};
  }

  std::vector<Action> legal_actions(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "legal_actions on terminal or chance node");
    return {0, 1};
  }

  HistoryState apply(const HistoryState& s, Action a) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0 && (a == 0 || a == 1), "illegal action");
    HistoryState n = s;
    n.actions.push_back(a);
    n.to_move = n.actions.size() == 2 ? kTerminalPlayer : 1;
    return n;
  }

  std::array<double, 2> utilities(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move == kTerminalPlayer, "utilities on non-terminal");
    double u0 = s.actions[0] == s.actions[1] ? 1.0 : -1.0;
    return {u0, -u0};
  }

  std::string info_key(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "info_key on terminal or chance node");
    // Neither player observes anything before acting.
    return "P" + std::to_string(s.to_move) + "||";
  }

  int private_cardinality() const override { return 0; }
  int private_index(const HistoryState&, Player) const override { return -1; }
  int token_cardinality() const override { return 2; }
  int max_public_tokens() const override { return 0; }
  std::vector<int> public_tokens(const HistoryState&, Player) const override { return {}; }
};

// Shared machinery for the two 10-round simultaneous games (coordination and
// iterated prisoner's dilemma). Each round: optional public chance (the
// coordination target), then P0 and P1 choose without seeing the other's
// current-round choice. Completed rounds are public.
class RoundsGameBase : public Game {
 public:
  static constexpr int kRounds = 10;

  std::vector<Action> legal_actions(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "legal_actions on terminal or chance node");
    std::vector<Action> out;
    for (Action a = 0; a < num_choices(); ++a) out.push_back(a);
    return out;
  }

  HistoryState apply(const HistoryState& s, Action a) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "apply on terminal or chance node");
    CACLAB_CHECK_ARG(a >= 0 && a < num_choices(), "illegal action " << a);
    HistoryState n = s;
    n.actions.push_back(a);
    update_to_move(n);
    return n;
  }

  std::array<double, 2> utilities(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move == kTerminalPlayer, "utilities on non-terminal");
    std::array<double, 2> total = {0.0, 0.0};
    for (int r = 0; r < kRounds; ++r) {
      auto u = round_payoff(s, r, s.actions[2 * r], s.actions[2 * r + 1]);
      total[0] += u[0];
      total[1] += u[1];
    }
    return total;
  }

  std::string info_key(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "info_key on terminal or chance node");
    return "P" + std::to_string(s.to_move) + "||" + public_string(s);
  }

  int private_cardinality() const override { return 0; }
  int private_index(const HistoryState&, Player) const override { return -1; }

 protected:
  virtual int num_choices() const = 0;
  virtual bool has_targets() const = 0;
  virtual std::array<double, 2> round_payoff(const HistoryState& s, int round, Action a0,
                                             Action a1) const = 0;

  // Public view shared by both players: completed rounds plus the current
  // round's target (when present). The mover's own pending action is never
  // part of the key, so the encoding is identical for both seats.
  std::string public_string(const HistoryState& s) const {
    std::string out;
    int completed = static_cast<int>(s.actions.size()) / 2;
    for (int r = 0; r < completed; ++r) {
      if (has_targets()) {
        out += 't';
        out += static_cast<char>('0' + s.public_chance[r]);
      }
      out += static_cast<char>('a' + s.actions[2 * r]);
      out += static_cast<char>('a' + s.actions[2 * r + 1]);
      out += ',';
    }
    if (has_targets() && static_cast<int>(s.public_chance.size()) > completed) {
      out += 't';
      out += static_cast<char>('0' + s.public_chance[completed]);
    }
    return out;
  }

  void update_to_move(HistoryState& n) const {
    int done = static_cast<int>(n.actions.size());
    if (done == 2 * kRounds) {
      n.to_move = kTerminalPlayer;
    } else if (done % 2 == 1) {
      n.to_move = 1;
    } else if (has_targets() && static_cast<int>(n.public_chance.size()) == done / 2) {
      n.to_move = kChancePlayer;  // next round's target not yet drawn
    } else {
      n.to_move = 0;
    }
  }

  std::vector<int> tokens(const HistoryState& s) const {
    std::vector<int> out;
    int completed = static_cast<int>(s.actions.size()) / 2;
    for (int r = 0; r < completed; ++r) {
      if (has_targets()) out.push_back(num_choices() + s.public_chance[r]);
      out.push_back(s.actions[2 * r]);
      out.push_back(s.actions[2 * r + 1]);
    }
    if (has_targets() && static_cast<int>(s.public_chance.size()) > completed) {
      out.push_back(num_choices() + s.public_chance[completed]);
    }
    return out;
  }
};

// Match-the-target team game: both players get +1 per round when both pick
// the revealed target.
class CoordinationGame final : public RoundsGameBase {
 public:
  const std::string& name() const override {
    static const std::string kName = "coordination";
    return kName;
  }
  const std::vector<std::string>& action_labels() const override {
    static const std::vector<std::string> kLabels = {"a", "b", "c"};
    return kLabels;
  }
  RewardBounds reward_bounds() const override { return {0.0, 10.0}; }
  bool zero_sum() const override { return false; }

  std::vector<std::pair<HistoryState, double>> initial_states() const override {
    std::vector<std::pair<HistoryState, double>> out;
    for (int t = 0; t < 3; ++t) {
      HistoryState s;
      s.public_chance.push_back(t);
      s.to_move = 0;
      out.emplace_back(std::move(s), 1.0 / 3.0);
    }
    return out;
  }

  std::vector<std::pair<int, double>> chance_outcomes(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move == kChancePlayer, "not a chance node");
    return {{0, 1.0 / 3.0}, {1, 1.0 / 3.0}, {2, 1.0 / 3.0}};
  }

  HistoryState apply_chance(const HistoryState& s, int outcome) const override {
    CACLAB_CHECK_ARG(s.to_move == kChancePlayer, "not a chance node");
    HistoryState n = s;
    n.public_chance.push_back(outcome);
    update_to_move(n);
    return n;
  }

  int token_cardinality() const override { return 6; }
  int max_public_tokens() const override { return 31; }
  std::vector<int> public_tokens(const HistoryState& s, Player) const override {
    return tokens(s);
  }

 protected:
  int num_choices() const override { return 3; }
  bool has_targets() const override { return true; }
  std::array<double, 2> round_payoff(const HistoryState& s, int round, Action a0,
                                     Action a1) const override {
    int target = s.public_chance[round];
    double r = (a0 == target && a1 == target) ? 1.0 : 0.0;
    return {r, r};
  }
};

// Iterated prisoner's dilemma, payoffs (T,R,P,S) = (5,3,1,0), reported as
// the per-round mean.
class IpdGame final : public RoundsGameBase {
 public:
  const std::string& name() const override {
    static const std::string kName = "ipd";
    return kName;
  }
  const std::vector<std::string>& action_labels() const override {
    static const std::vector<std::string> kLabels = {"cooperate", "defect"};
    return kLabels;
  }
  RewardBounds reward_bounds() const override { return {0.0, 5.0}; }
  bool zero_sum() const override { return false; }
  double report_scale() const override { return 1.0 / kRounds; }

  std::vector<std::pair<HistoryState, double>> initial_states() const override {
    HistoryState s;
    s.to_move = 0;
    return {{s, 1.0}};
  }

  int token_cardinality() const override { return 2; }
  int max_public_tokens() const override { return 20; }
  std::vector<int> public_tokens(const HistoryState& s, Player) const override {
    return tokens(s);
  }

 protected:
  int num_choices() const override { return 2; }
  bool has_targets() const override { return false; }
  std::array<double, 2> round_payoff(const HistoryState&, int, Action a0,
                                     Action a1) const override {
    // 0 = cooperate, 1 = defect
    if (a0 == 0 && a1 == 0) return {3.0, 3.0};
    if (a0 == 0 && a1 == 1) return {0.0, 5.0};
    if (a0 == 1 && a1 == 0) return {5.0, 0.0};
    return {1.0, 1.0};
  }
};

// Single-round ultimatum over a 10-unit pie: P0 offers 0..10, P1 accepts or
// rejects; both get nothing on reject.
class NegotiationGame final : public Game {
 public:
  NegotiationGame() {
    for (int o = 0; o <= 10; ++o) labels_.push_back("offer_" + std::to_string(o));
    labels_.push_back("accept");
    labels_.push_back("reject");
  }

  const std::string& name() const override {
    static const std::string kName = "negotiation";
    return kName;
  }
  const std::vector<std::string>& action_labels() const override { return labels_; }
  RewardBounds reward_bounds() const override { return {0.0, 10.0}; }
  bool zero_sum() const override { return false; }

  std::vector<std::pair<HistoryState, double>> initial_states() const override {
    HistoryState s;
    s.to_move = 0;
    return {{s, 1.0}};
  }

  std::vector<Action> legal_actions(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "legal_actions on terminal or chance node");
    if (s.actions.empty()) {
      std::vector<Action> offers;
      for (Action a = 0; a <= 10; ++a) offers.push_back(a);
      return offers;
    }
    return {kAccept, kReject};
  }

  HistoryState apply(const HistoryState& s, Action a) const override {
    auto legal = legal_actions(s);
    CACLAB_CHECK_ARG(std::find(legal.begin(), legal.end(), a) != legal.end(),
                     "illegal action " << a << " in negotiation");
    HistoryState n = s;
    n.actions.push_back(a);
    n.to_move = n.actions.size() == 2 ? kTerminalPlayer : 1;
    return n;
  }

  std::array<double, 2> utilities(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move == kTerminalPlayer, "utilities on non-terminal");
    if (s.actions[1] == kReject) return {0.0, 0.0};
    double offer = s.actions[0];
    return {10.0 - offer, offer};
  }

  std::string info_key(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "info_key on terminal or chance node");
    std::string key = "P" + std::to_string(s.to_move) + "||";
    if (!s.actions.empty()) key += offer_char(s.actions[0]);
    return key;
  }

  int private_cardinality() const override { return 0; }
  int private_index(const HistoryState&, Player) const override { return -1; }
  int token_cardinality() const override { return 11; }
  int max_public_tokens() const override { return 1; }
  std::vector<int> public_tokens(const HistoryState& s, Player) const override {
    if (s.actions.empty()) return {};
    return {static_cast<int>(s.actions[0])};
  }

 private:
  static constexpr Action kAccept = 11;
  static constexpr Action kReject = 12;

  // Offers 0..10 encode as '0'..'9' then 'A'.
  static char offer_char(Action offer) { return offer < 10 ? '0' + offer : 'A'; }

  std::vector<std::string> labels_;
};

}  // namespace

std::unique_ptr<Game> make_matching_pennies() {
  return std::make_unique<MatchingPenniesGame>();
}
std::unique_ptr<Game> make_coordination() { return std::make_unique<CoordinationGame>(); }
std::unique_ptr<Game> make_ipd() { return std::make_unique<IpdGame>(); }
std::unique_ptr<Game> make_negotiation() { return std::make_unique<NegotiationGame>(); }

}  // namespace caclab::detail
