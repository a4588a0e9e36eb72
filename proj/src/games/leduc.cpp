#include <string>

#include "caclab/core/check.hpp"
#include "game_factories.hpp"

namespace caclab::detail {
namespace {

// Leduc hold'em family. Cards are rank-major ids (rank * suits + suit), one
// private card each, one board card between rounds. Fixed-limit: ante 1,
// bet 2 in round 1, bet 4 in round 2, at most two raises per round. Fold is
// only legal facing a bet. Info keys are rank-based (suits only matter for
// dealing and pairing).
constexpr Action kFold = 0;
constexpr Action kCall = 1;   // check when not facing a bet
constexpr Action kRaise = 2;  // bet when not facing a bet

constexpr double kBetSize[2] = {2.0, 4.0};

struct Replay {
  int round = 0;
  bool awaiting_board = false;
  bool terminal = false;
  int folder = -1;
  bool facing = false;
  int raises = 0;
  bool checked_once = false;
  Player to_act = 0;
  std::array<double, 2> contrib = {1.0, 1.0};  // antes
  int round_boundary = 0;  // index into actions where round 2 starts
};

class LeducGame final : public Game {
 public:
  LeducGame(int num_ranks, int num_suits, const char* name)
      : ranks_(num_ranks), suits_(num_suits), name_(name) {}

  const std::string& name() const override { return name_; }

  const std::vector<std::string>& action_labels() const override {
    static const std::vector<std::string> kLabels = {"fold", "call", "raise"};
    return kLabels;
  }

  RewardBounds reward_bounds() const override { return {-13.0, 13.0}; }
  bool zero_sum() const override { return true; }
  std::optional<double> nash_reference_value() const override {
    return ranks_ == 3 ? -0.0866 : -0.096;
  }

  std::vector<std::pair<HistoryState, double>> initial_states() const override {
    int cards = ranks_ * suits_;
    double p = 1.0 / (cards * (cards - 1));
    std::vector<std::pair<HistoryState, double>> out;
    for (int c0 = 0; c0 < cards; ++c0) {
      for (int c1 = 0; c1 < cards; ++c1) {
        if (c0 == c1) continue;
        HistoryState s;
        s.private_outcome = {c0, c1};
        s.to_move = 0;
        out.emplace_back(std::move(s), p);
      }
    }
    return out;
  }

  std::vector<Action> legal_actions(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "legal_actions on terminal or chance node");
    Replay r = replay(s);
    if (r.facing) {
      if (r.raises < 2) return {kFold, kCall, kRaise};
      return {kFold, kCall};
    }
    return {kCall, kRaise};
  }

  HistoryState apply(const HistoryState& s, Action a) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "apply on terminal or chance node");
    {
      auto legal = legal_actions(s);
      CACLAB_CHECK_ARG(std::find(legal.begin(), legal.end(), a) != legal.end(),
                       "illegal action " << a << " in " << name_);
    }
    HistoryState n = s;
    n.actions.push_back(a);
    set_to_move(n);
    return n;
  }

  std::vector<std::pair<int, double>> chance_outcomes(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move == kChancePlayer, "not a chance node");
    int cards = ranks_ * suits_;
    std::vector<std::pair<int, double>> out;
    double p = 1.0 / (cards - 2);
    for (int c = 0; c < cards; ++c) {
      if (c == s.private_outcome[0] || c == s.private_outcome[1]) continue;
      out.emplace_back(c, p);
    }
    return out;
  }

  HistoryState apply_chance(const HistoryState& s, int outcome) const override {
    CACLAB_CHECK_ARG(s.to_move == kChancePlayer, "not a chance node");
    HistoryState n = s;
    n.public_chance.push_back(outcome);
    set_to_move(n);
    return n;
  }

  std::array<double, 2> utilities(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move == kTerminalPlayer, "utilities on non-terminal");
    Replay r = replay(s);
    if (r.folder >= 0) {
      double x = r.contrib[r.folder];
      return r.folder == 0 ? std::array<double, 2>{-x, x} : std::array<double, 2>{x, -x};
    }
    int board_rank = s.public_chance[0] / suits_;
    int score0 = hand_score(s.private_outcome[0] / suits_, board_rank);
    int score1 = hand_score(s.private_outcome[1] / suits_, board_rank);
    if (score0 == score1) return {0.0, 0.0};
    double x = r.contrib[0];  // equal contributions at showdown
    return score0 > score1 ? std::array<double, 2>{x, -x} : std::array<double, 2>{-x, x};
  }

  std::string info_key(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "info_key on terminal or chance node");
    Replay r = replay(s);
    std::string key = "P" + std::to_string(s.to_move) + "|";
    key += rank_char(s.private_outcome[s.to_move] / suits_);
    key += '|';
    for (int i = 0; i < r.round_boundary; ++i) key += action_char(s.actions[i]);
    if (!s.public_chance.empty()) {
      key += rank_char(s.public_chance[0] / suits_);
      for (std::size_t i = r.round_boundary; i < s.actions.size(); ++i) {
        key += action_char(s.actions[i]);
      }
    }
    return key;
  }

  int private_cardinality() const override { return ranks_; }
  int private_index(const HistoryState& s, Player p) const override {
    return s.private_outcome[p] / suits_;
  }
  int token_cardinality() const override { return 3 + ranks_; }
  int max_public_tokens() const override { return 9; }
  std::vector<int> public_tokens(const HistoryState& s, Player) const override {
    Replay r = replay(s);
    std::vector<int> toks;
    for (int i = 0; i < r.round_boundary; ++i) toks.push_back(s.actions[i]);
    if (!s.public_chance.empty()) {
      toks.push_back(3 + s.public_chance[0] / suits_);
      for (std::size_t i = r.round_boundary; i < s.actions.size(); ++i) {
        toks.push_back(s.actions[i]);
      }
    }
    return toks;
  }

 private:
  static int hand_score(int rank, int board_rank) {
    return rank == board_rank ? 100 + rank : rank;
  }

  char rank_char(int rank) const {
    static const char* kRanks = "JQKA";
    return kRanks[rank];
  }

  static char action_char(Action a) { return a == kFold ? 'f' : (a == kCall ? 'c' : 'r'); }

  // Recomputes the betting situation from the recorded sequences.
  Replay replay(const HistoryState& s) const {
    Replay r;
    bool round_over = false;
    for (std::size_t i = 0; i < s.actions.size(); ++i) {
      if (round_over) {
        // Starting round 2 (board must already be dealt).
        r.round = 1;
        r.round_boundary = static_cast<int>(i);
        r.facing = false;
        r.raises = 0;
        r.checked_once = false;
        r.to_act = 0;
        round_over = false;
      }
      Action a = s.actions[i];
      if (a == kFold) {
        r.folder = r.to_act;
        r.terminal = true;
        return r;
      }
      if (a == kCall) {
        if (r.facing) {
          r.contrib[r.to_act] = r.contrib[1 - r.to_act];
          round_over = true;
        } else if (r.checked_once) {
          round_over = true;
        } else {
          r.checked_once = true;
          r.to_act = 1;
        }
      } else {  // raise
        r.contrib[r.to_act] = r.contrib[1 - r.to_act] + kBetSize[r.round];
        r.facing = true;
        ++r.raises;
        r.to_act = 1 - r.to_act;
      }
    }
    if (round_over) {
      if (r.round == 0 && s.public_chance.empty()) {
        r.awaiting_board = true;
      } else if (r.round == 1) {
        r.terminal = true;
      } else {
        // Board dealt, round 2 about to start.
        r.round = 1;
        r.round_boundary = static_cast<int>(s.actions.size());
        r.facing = false;
        r.raises = 0;
        r.checked_once = false;
        r.to_act = 0;
      }
    }
    if (r.round == 0) r.round_boundary = static_cast<int>(s.actions.size());
    return r;
  }

  void set_to_move(HistoryState& n) const {
    Replay r = replay(n);
    if (r.terminal) {
      n.to_move = kTerminalPlayer;
    } else if (r.awaiting_board) {
      n.to_move = kChancePlayer;
    } else {
      n.to_move = r.to_act;
    }
  }

  int ranks_;
  int suits_;
  std::string name_;
};

}  // namespace

std::unique_ptr<Game> make_leduc(int num_ranks, int num_suits, const char* name) {
  return std::make_unique<LeducGame>(num_ranks, num_suits, name);
}

}  // namespace caclab::detail
