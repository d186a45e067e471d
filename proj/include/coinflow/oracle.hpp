#pragma once

#include "coinflow/moves.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace coinflow {

// Default state budget; COINFLOW_MAX_STATES overrides it.
std::size_t default_max_states();

struct SearchLimits {
    std::size_t max_states = default_max_states();
    std::optional<int> max_depth;
};

struct ReachableSet {
    bool exhausted = false;  // limits hit, states is partial
    std::vector<Configuration> states;
};

// Everything reachable from a by pure moves.
ReachableSet reachable_set(const Configuration& a, const SearchLimits& limits = {});

enum class OracleVerdict { Reachable, Unreachable, Exhausted };

struct OracleResult {
    OracleVerdict verdict = OracleVerdict::Exhausted;
    std::size_t states = 0;
    ActionSequence moves;  // shortest, when reachable
};

// Breadth-first search from a to b over the span of a.
OracleResult oracle_search(const Configuration& a, const Configuration& b, const SearchLimits& limits = {});

// Shortest pure-move solution, none if unreachable. Error("exhausted") when
// the limits stop the search first.
std::optional<ActionSequence> shortest_solution(const Configuration& a, const Configuration& b,
                                                const SearchLimits& limits = {});

// Closure of m under pokes. Error("precondition_violated") unless m is
// minimum with exactly one adjacent pair.
ReachableSet reachable_poking(const Configuration& m, const SearchLimits& limits = {});

} // namespace coinflow
