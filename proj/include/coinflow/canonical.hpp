#pragma once

#include "coinflow/moves.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coinflow {

// The corner an 'L' bends around.
//   BL: from the top-left corner down, then right.   TR: right, then down.
//   TL: from the bottom-left corner up, then right.  BR: right, then up.
enum class Corner { BL, TR, TL, BR };

std::string to_string(Corner c);

struct LShape {
    Rectangle rect;
    Corner corner = Corner::BL;
    int pair = -1;  // odd 'L's: coins at path steps 2*pair and 2*pair+1

    bool odd() const { return !rect.even(); }
    friend bool operator==(const LShape&, const LShape&) = default;
};

// Cells along the 'L' path, m+n-1 of them, starting at the start corner.
std::vector<Position> l_path(const Rectangle& r, Corner corner);
Configuration l_cells(const LShape& l);
int max_pair_index(const Rectangle& r);

LShape canonical_lshape(const Rectangle& r);
Configuration canonical_L(const Rectangle& r);
Configuration canonical_config(const Configuration& c);

// The 'L' with span r formed by c ∩ r, if any.
std::optional<LShape> identify_L(const Configuration& c, const Rectangle& r);

// Same rectangle and pair index, hugging the other two sides.
LShape mirrored(const LShape& l);

struct SubroutineTrace {
    std::string name;
    ActionSequence forward;
    std::optional<ActionSequence> backward;  // none for span-shrinking traces
    GameState end;
    std::optional<LShape> shape;  // resulting 'L' where one is tracked
};

// Moves the adjacent pair to target_pair. Errors: not_odd, insufficient_hand,
// not_on_board.
SubroutineTrace leapfrog(const GameState& state, const LShape& l, int target_pair);

// Turns l into mirrored(l). Even 'L's need two coins in hand, odd ones one.
SubroutineTrace flip_L(const GameState& state, const LShape& l);

enum class Side { Left, Right, Top, Bottom };

// Removes `amount` columns or rows on `side`; the result may come out
// mirrored. Errors: insufficient_hand, amount_too_large.
SubroutineTrace trim_L(const GameState& state, const LShape& l, Side side, int amount);

// Canonical 'L' on `from` to canonical 'L' on `to` (to inside from), hand >= 2.
SubroutineTrace shrink(const GameState& state, const Rectangle& from, const Rectangle& to);

// Board becomes canonical_config(board) and the hand grows by
// |board| - |canonical|. Hand >= 2. Errors: insufficient_hand,
// canonicalize_failed.
SubroutineTrace canonicalize(const GameState& state);

} // namespace coinflow
