#include <string>

#include "caclab/core/check.hpp"
#include "game_factories.hpp"

namespace caclab::detail {
namespace {

// Liar's dice with D dice per player (D = 1 or 2). A claim (count, face)
// asserts at least `count` dice across both hands show `face`; claims are
// ordered lexicographically by (count, face) and must strictly increase.
// Challenge is legal only once a claim stands; a verified claim loses the
// challenger one unit, otherwise the claimer. No wild faces.
//
// Claim id = (count-1)*6 + (face-1); counts run 1..2D. Challenge is the
// last action id. Private outcome encodes the sorted roll.
class LiarsDiceGame final : public Game {
 public:
  LiarsDiceGame(int dice_per_player, const char* name)
      : dice_(dice_per_player),
        num_claims_(2 * dice_per_player * 6),
        challenge_(num_claims_),
        name_(name) {
    labels_.reserve(num_claims_ + 1);
    for (int c = 1; c <= 2 * dice_; ++c) {
      for (int f = 1; f <= 6; ++f) {
        labels_.push_back("claim_" + std::to_string(c) + "x" + std::to_string(f));
      }
    }
    labels_.push_back("challenge");
  }

  const std::string& name() const override { return name_; }
  const std::vector<std::string>& action_labels() const override { return labels_; }
  RewardBounds reward_bounds() const override { return {-1.0, 1.0}; }
  bool zero_sum() const override { return true; }
  std::optional<double> nash_reference_value() const override {
    if (dice_ == 1) return -0.076;
    return std::nullopt;
  }
  bool tree_tractable() const override { return dice_ == 1; }

  std::vector<std::pair<HistoryState, double>> initial_states() const override {
    std::vector<std::pair<HistoryState, double>> out;
    int rolls = dice_ == 1 ? 6 : 36;
    double p = 1.0 / (rolls * rolls);
    for (int r0 = 0; r0 < rolls; ++r0) {
      for (int r1 = 0; r1 < rolls; ++r1) {
        HistoryState s;
        s.private_outcome = {canonical_roll(r0), canonical_roll(r1)};
        s.to_move = 0;
        out.emplace_back(std::move(s), p);
      }
    }
    return out;
  }

  std::vector<Action> legal_actions(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "legal_actions on terminal or chance node");
    std::vector<Action> out;
    int last = s.actions.empty() ? -1 : s.actions.back();
    for (Action a = last + 1; a < num_claims_; ++a) out.push_back(a);
    if (last >= 0) out.push_back(challenge_);
    return out;
  }

  HistoryState apply(const HistoryState& s, Action a) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "apply on terminal or chance node");
    int last = s.actions.empty() ? -1 : s.actions.back();
    bool legal = (a == challenge_ && last >= 0) || (a > last && a < num_claims_);
    CACLAB_CHECK_ARG(legal, "illegal action " << a << " in " << name_);
    HistoryState n = s;
    n.actions.push_back(a);
    n.to_move = a == challenge_ ? kTerminalPlayer
                                : static_cast<Player>(n.actions.size() % 2);
    return n;
  }

  std::array<double, 2> utilities(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move == kTerminalPlayer, "utilities on non-terminal");
    int n = static_cast<int>(s.actions.size());
    int claim = s.actions[n - 2];
    int count = claim / 6 + 1;
    int face = claim % 6 + 1;
    int challenger = (n - 1) % 2;  // player who played `challenge`
    int actual = count_face(s.private_outcome[0], face) + count_face(s.private_outcome[1], face);
    int loser = actual >= count ? challenger : 1 - challenger;
    return loser == 0 ? std::array<double, 2>{-1.0, 1.0} : std::array<double, 2>{1.0, -1.0};
  }

  std::string info_key(const HistoryState& s) const override {
    CACLAB_CHECK_ARG(s.to_move >= 0, "info_key on terminal or chance node");
    std::string key = "P" + std::to_string(s.to_move) + "|";
    key += roll_string(s.private_outcome[s.to_move]);
    key += '|';
    for (Action a : s.actions) {
      key += a == challenge_ ? '!' : static_cast<char>('a' + a);
    }
    return key;
  }

  int private_cardinality() const override { return dice_ == 1 ? 6 : 21; }
  int private_index(const HistoryState& s, Player p) const override {
    int r = s.private_outcome[p];
    if (dice_ == 1) return r;
    // sorted pair (lo, hi) -> triangular index
    int lo = r / 6, hi = r % 6;
    return lo * 6 - lo * (lo - 1) / 2 + (hi - lo);
  }
  int token_cardinality() const override { return num_claims_ + 1; }
  int max_public_tokens() const override { return num_claims_ + 1; }
  std::vector<int> public_tokens(const HistoryState& s, Player) const override {
    return std::vector<int>(s.actions.begin(), s.actions.end());
  }

 private:
  // Rolls are stored order-independent: one die as face 0..5, two dice as
  // lo*6+hi with lo <= hi.
  int canonical_roll(int raw) const {
    if (dice_ == 1) return raw;
    int a = raw / 6, b = raw % 6;
    return a <= b ? a * 6 + b : b * 6 + a;
  }

  int count_face(int roll, int face) const {
    if (dice_ == 1) return (roll + 1 == face) ? 1 : 0;
    return ((roll / 6 + 1 == face) ? 1 : 0) + ((roll % 6 + 1 == face) ? 1 : 0);
  }

  std::string roll_string(int roll) const {
    if (dice_ == 1) return std::string(1, static_cast<char>('1' + roll));
    std::string out;
    out += static_cast<char>('1' + roll / 6);
    out += static_cast<char>('1' + roll % 6);
    return out;
  }

  int dice_;
  int num_claims_;
  Action challenge_;
  std::string name_;
  std::vector<std::string> labels_;
};

}  // namespace

std::unique_ptr<Game> make_liars_dice(int dice_per_player, const char* name) {
  return std::make_unique<LiarsDiceGame>(dice_per_player, name);
}

}  // namespace caclab::detail
