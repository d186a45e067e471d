#pragma once

#include "coinflow/certificate.hpp"
#include "coinflow/moves.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace coinflow {

struct PuzzleFile {
    Configuration start;
    Configuration target;
    std::string name;
    std::string source;

    friend bool operator==(const PuzzleFile&, const PuzzleFile&) = default;
};

// Grid text ('.' free, 'o' coin, blocks split by a "---" line, y up, the
// bottom-left character at the origin; "# origin X Y", "# name ...",
// "# source ..." optional) or JSON {"start": [[x,y],...], "target": ...}.
// Errors: parse_error (with line/column), duplicate_coin, empty_configuration.
PuzzleFile parse_puzzle(const std::string& text);

// Canonical grid text: both blocks over their common bounding box.
std::string render_puzzle(const PuzzleFile& p);
std::string puzzle_to_json(const PuzzleFile& p);

// One action per line: "mv x1 y1 x2 y2", "up x y", "dn x y". Blank lines and
// '#' comments are skipped. Error("parse_error") with the line number.
ActionSequence parse_actions(const std::string& text);
std::string render_actions(const ActionSequence& seq);

// ASCII grid of the bounding box, 'o' per coin.
std::string render_ascii(const Configuration& c);

// One frame per state, first frame the initial board. In a frame after an
// action '@' marks a dropped coin and 'x' a picked-up one (a move shows
// both). Frames share the bounding box of all visited cells.
std::string render_ascii(const GameState& initial, const ActionSequence& seq);

std::string render_svg(const Configuration& c);
std::string render_svg(const GameState& initial, const ActionSequence& seq);

std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

// K coins uniform over an m x n box at the origin, redrawn until the span is
// the whole box. Error("generation_failed") after too many attempts.
Configuration random_configuration(int m, int n, int k, std::uint64_t seed);

} // namespace coinflow
