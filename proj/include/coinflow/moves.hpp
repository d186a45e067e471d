#pragma once

#include "coinflow/grid.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coinflow {

// Board plus the number of coins held in hand.
struct GameState {
    Configuration board;
    int hand = 0;

    int total() const { return static_cast<int>(board.size()) + hand; }
    friend bool operator==(const GameState&, const GameState&) = default;
};

enum class ActionKind { Move, PickUp, Drop };

struct Action {
    ActionKind kind = ActionKind::Move;
    Position from;  // Move source, or the PickUp/Drop cell
    Position to;    // Move destination; equal to `from` otherwise

    static Action move(Position from, Position to) { return {ActionKind::Move, from, to}; }
    static Action pick_up(Position at) { return {ActionKind::PickUp, at, at}; }
    static Action drop(Position at) { return {ActionKind::Drop, at, at}; }

    friend bool operator==(const Action&, const Action&) = default;
};

using ActionSequence = std::vector<Action>;

std::string to_string(const Action& a);

// True iff p has two occupied neighbors once `mover` is taken off the board.
bool is_legal_destination(const Configuration& c, std::optional<Position> mover, Position p);

// All legal (source, destination) pairs. Destinations are restricted to the
// span, which contains every reachable cell.
std::vector<std::pair<Position, Position>> legal_moves(const Configuration& c);

// Error codes: illegal_move, not_occupied, empty_hand, drop_violates_2adjacency.
GameState apply(const GameState& state, const Action& a);

// Replays seq; errors carry the failing index. Error("final_mismatch") if
// the result differs from expected_final.
GameState validate_sequence(const GameState& initial, const ActionSequence& seq,
                            const std::optional<GameState>& expected_final = std::nullopt);

// Rewrites a hand-balanced sequence into pure moves reaching the same final
// board. Error("unbalanced_hand") when pick-ups and drops do not pair off.
ActionSequence moves_only(const GameState& initial, const ActionSequence& seq);

// The sequence undoing seq, valid when every pick-up in seq removed a coin
// that had two occupied neighbors and every move left from such a cell.
ActionSequence inverse(const ActionSequence& seq);

} // namespace coinflow
