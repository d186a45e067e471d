#pragma once

#include "coinflow/certificate.hpp"
#include "coinflow/moves.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace coinflow {

// (coin, destination)
using Poke = std::pair<Position, Position>;

// Minimum configuration with exactly one pair of adjacent coins.
bool is_poking_state(const Configuration& m);

std::vector<Poke> legal_pokes(const Configuration& m);

// Error("illegal_poke") unless the poke is in legal_pokes(m).
Configuration apply_poke(const Configuration& m, const Poke& poke);

struct ChainDecomposition {
    std::vector<Position> order;  // c1..cN, c1 the start corner
    std::size_t pair_index = 0;   // order[i0], order[i0+1] adjacent

    std::pair<Position, Position> endpoints() const { return {order.front(), order.back()}; }
};

// Minimum chain with one adjacent pair between opposite corners of its span.
std::optional<ChainDecomposition> chain_decompose(const Configuration& m);

// Error("not_a_chain") when m is not a minimum chain.
bool chain_poking_decide(const Configuration& m, const Configuration& target);

// Pokes from m to target. Error("not_reachable") when decide is false.
std::vector<Poke> chain_poking_solve(const Configuration& m, const Configuration& target);

// Pokes from m to target by breadth-first search over pokes. Handles any
// poking state, not only chains. None if unreachable or over max_states.
std::optional<std::vector<Poke>> poking_search(const Configuration& m, const Configuration& target,
                                               std::size_t max_states = 200'000);

// Each poke c -> p as "drop p, pick up c"; needs one coin in hand and every
// action is reversible.
ActionSequence pokes_to_actions(const std::vector<Poke>& pokes);

// Chain coordinates relative to a start corner of rectangle (x0,y0,W+1,H+1).
// u runs along x, v away from the start row. t = u + v.
struct ChainFrame {
    Position origin;  // start corner
    bool down = true;  // start at the top, v grows downward
    int W = 0;
    int H = 0;

    Position to_local(Position p) const { return {p.x - origin.x, down ? origin.y - p.y : p.y - origin.y}; }
    Position to_world(Position q) const { return {origin.x + q.x, down ? origin.y - q.y : origin.y + q.y}; }
};

// Coin k of a minimum chain sits at t_k with offset a_k = u. For odd chains
// the pair occupies indices (j, j+1); even chains have no pair (j = -1).
struct ChainState {
    int j = -1;
    std::vector<int> a;

    friend auto operator<=>(const ChainState&, const ChainState&) = default;
};

int chain_t(const ChainState& s, int k);
bool chain_valid(const ChainFrame& f, const ChainState& s);
Configuration chain_cells(const ChainFrame& f, const ChainState& s);
std::optional<ChainState> chain_state_of(const ChainFrame& f, const Configuration& c);
// Frame and state of a minimum chain between opposite corners, even or odd.
std::optional<std::pair<ChainFrame, ChainState>> find_chain(const Configuration& m);

// Minimum+1 puzzles on one shared rectangle. Even spans need a single move;
// odd spans go through the poking game. Unknown if the inputs do not fit.
SolveOutcome solve_min_plus1(const Configuration& a, const Configuration& b, std::size_t max_states = 200'000);

// Re-decides a minimum+1 puzzle by plain poking BFS, without the chain
// theory. True when no solution exists; none if the search ran out.
std::optional<bool> min_plus1_unsolvable_by_search(const Configuration& a, const Configuration& b,
                                                   std::size_t max_states, std::size_t* states = nullptr);

} // namespace coinflow
