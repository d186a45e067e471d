#pragma once

#include "coinflow/certificate.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coinflow {

// Trivial obstructions for A -> B (A != B). Empty when none applies.
std::vector<Certificate> necessary_conditions(const Configuration& a, const Configuration& b);

// Stacked vertically (x projections meet) with h free rows between them, or
// the same with axes swapped.
struct SplitGeometry {
    int h = 0;
    bool transposed = false;
};

// None unless the rectangles are stacked with a gap of at least 2.
std::optional<SplitGeometry> split_geometry(const Rectangle& r1, const Rectangle& r2);

// (m1+n1+m2+n2+h-1)/2 and (m1+n1+m2+n2+h+2)/2, measured across the gap.
// Error("geometry_precondition") when split_geometry fails.
Rational split_bound(const Rectangle& r1, const Rectangle& r2);
Rational refined_split_bound(const Rectangle& r1, const Rectangle& r2);

// True when some sequence of at most two moves leaves r1 and r2 in distinct
// components of the span.
bool split_within_two_moves(const Configuration& a, const Rectangle& r1, const Rectangle& r2);

std::optional<Certificate> prove_unsolvable_by_split(const Configuration& a, const Configuration& b);

// Re-derives the certificate from scratch. On rejection *why says what failed.
bool check_certificate(const Configuration& a, const Configuration& b, const Certificate& cert,
                       std::string* why = nullptr);

// The family A_n, B_n (n >= 9) on an n x n box at the origin.
// Error("n_too_small") below 9.
std::pair<Configuration, Configuration> gen_counterexample(int n);

} // namespace coinflow
