#pragma once

#include "coinflow/certificate.hpp"
#include "coinflow/oracle.hpp"

#include <optional>
#include <string>

namespace coinflow {

// Pick two extra coins, canonicalize, reverse-canonicalize toward B, drop the
// two redundant coins. Unknown when the hypotheses are not met.
SolveOutcome solve_same_span(const Configuration& a, const Configuration& b);

// Same pipeline with each 'L' of the start shrunk onto its target 'L'.
SolveOutcome solve_two_extra(const Configuration& a, const Configuration& b);

// |C| bound for building C from a canonical 'L' on an m x n box with k coins
// in hand.
bool sweep_hypothesis(int m, int n, int k, int c);

// Board holds the canonical 'L' on r (hand k); builds c inside r.
// Error("hypothesis_violated"), Error("sweep_failed").
ActionSequence sweep_build(const GameState& state, const Rectangle& r, const Configuration& c);

// The two inequalities checked by solve_sweep, and the stronger published
// condition on N.
bool sweep_inequalities(int m, int n, int coins, int min_a, int min_b);
bool sweep_condition_iv(int coins, int min_a, int min_b);

SolveOutcome solve_sweep(const Configuration& a, const Configuration& b);

enum class Method { Auto, SameSpan, TwoExtra, Sweep, Oracle };

std::optional<Method> parse_method(const std::string& s);

struct SolveOptions {
    Method method = Method::Auto;
    SearchLimits oracle_limits{};
    bool use_oracle = true;
};

SolveOutcome solve(const Configuration& a, const Configuration& b, const SolveOptions& options = {});

} // namespace coinflow
