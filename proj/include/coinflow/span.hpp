#pragma once

#include "coinflow/grid.hpp"

#include <optional>
#include <vector>

namespace coinflow {

// Free cells with at least two occupied neighbors.
Configuration adjacent_set(const Configuration& c);

// Closure of c under adding cells with two or more occupied neighbors.
Configuration span(const Configuration& c);

// Maximal rectangles of a span, sorted by lower-left corner. Pairwise
// distance is at least 3.
struct SpanDecomposition {
    std::vector<Rectangle> rectangles;

    std::size_t size() const { return rectangles.size(); }
    // Index of the rectangle containing p, if any.
    std::optional<std::size_t> component_of(Position p) const;
    Configuration cells() const;
};

// Throws Error("empty") for an empty configuration and
// Error("not_rectangular") if the span violates the rectangle structure.
SpanDecomposition span_components(const Configuration& c);
SpanDecomposition decompose_span_set(const Configuration& span_cells);

// 4|C| - 2 * (adjacent pairs).
int perimeter(const Configuration& c);
int adjacent_pair_count(const Configuration& c);

int min_cardinality(const Rectangle& r);
int min_cardinality(const SpanDecomposition& s);

bool is_minimal(const Configuration& c);
bool is_minimum(const Configuration& c);
// |c| equals the minimum for its span plus one, and the span is unchanged
// after removing some coin.
bool is_minimum_plus_one(const Configuration& c);

// Some k coins whose removal keeps span(A \ A') containing span(relative_to),
// or span(A) itself when relative_to is empty. Exhaustive for k <= 2 and
// |A| <= 64, greedy otherwise (may miss a solution there).
std::optional<Configuration> find_extra_coins(const Configuration& a, const std::optional<Configuration>& relative_to,
                                              int k);

// Ordered b_1..b_k where each b_i has two neighbors among the coins not yet
// removed. Dropping them back in reverse order is always legal.
std::optional<std::vector<Position>> find_redundant_coins(const Configuration& b, int k);

// No two coins are adjacent.
bool all_isolated(const Configuration& c);

} // namespace coinflow
