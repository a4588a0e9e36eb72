#pragma once

#include <functional>

#include "caclab/metrics/tree.hpp"

namespace caclab::agents {

// Vanilla full-tree CFR with regret matching, alternating updates and
// linear (iteration-weighted) strategy averaging. Returns the average
// profile; `checkpoint` fires every `checkpoint_every` iterations with the
// running average for convergence traces.
PolicyProfile cfr_solve(
    const Game& game, int iterations,
    const std::function<void(int iteration, const PolicyProfile& average)>& checkpoint = {},
    int checkpoint_every = 0);

PolicyProfile cfr_solve(
    const metrics::GameTree& tree, int iterations,
    const std::function<void(int iteration, const PolicyProfile& average)>& checkpoint = {},
    int checkpoint_every = 0);

}  // namespace caclab::agents
