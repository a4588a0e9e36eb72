#pragma once

#include <memory>

#include "caclab/games/game.hpp"

namespace caclab::detail {

std::unique_ptr<Game> make_kuhn();
std::unique_ptr<Game> make_leduc(int num_ranks, int num_suits, const char* name);
std::unique_ptr<Game> make_liars_dice(int dice_per_player, const char* name);
std::unique_ptr<Game> make_matching_pennies();
std::unique_ptr<Game> make_coordination();
std::unique_ptr<Game> make_ipd();
std::unique_ptr<Game> make_negotiation();

}  // namespace caclab::detail
