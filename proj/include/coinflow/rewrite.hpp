#pragma once

#include "coinflow/moves.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace coinflow {

struct RewriteOptions {
    std::size_t max_states = 200'000;
    int max_extra = 2;  // coins above the starting window count
    bool best_first = true;
};

// Searches for drops and pick-ups inside `window` (at most 64 cells) that
// turn board ∩ window into `goal`. Every action is individually reversible:
// drops land on 2-adjacent cells and only coins with two neighbors are
// picked up. Coins outside the window stay put but count as neighbors.
std::optional<ActionSequence> local_rewrite(const Configuration& board, int hand, const std::vector<Position>& window,
                                            const Configuration& goal, const RewriteOptions& options = {});

} // namespace coinflow
