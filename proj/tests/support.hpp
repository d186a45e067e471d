#pragma once

// Independent reference implementations used as test oracles. They share no
// code with the library beyond the value types.

#include "coinflow/grid.hpp"
#include "coinflow/moves.hpp"

#include <deque>
#include <map>
#include <random>
#include <set>

namespace coinflow::testing {

inline int count_neighbors(const std::set<Position>& s, Position p) {
    return s.count({p.x + 1, p.y}) + s.count({p.x - 1, p.y}) + s.count({p.x, p.y + 1}) + s.count({p.x, p.y - 1});
}

// Rounds of simultaneous additions over the padded bounding box.
inline Configuration naive_span(const Configuration& c) {
    std::set<Position> s(c.begin(), c.end());
    if (s.empty()) return c;
    for (bool grew = true; grew;) {
        grew = false;
        int x0 = s.begin()->x, x1 = x0, y0 = s.begin()->y, y1 = y0;
        for (auto p : s) x0 = std::min(x0, p.x), x1 = std::max(x1, p.x), y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
        std::vector<Position> add;
        for (int x = x0 - 1; x <= x1 + 1; ++x)
            for (int y = y0 - 1; y <= y1 + 1; ++y)
                if (!s.count({x, y}) && count_neighbors(s, {x, y}) >= 2) add.push_back({x, y});
        for (auto p : add) s.insert(p), grew = true;
    }
    return Configuration(std::vector<Position>(s.begin(), s.end()));
}

// Pure-move breadth-first search without bit packing. -1 when b is
// unreachable, -2 when the cap stops the search.
inline int naive_distance(const Configuration& a, const Configuration& b, std::size_t cap = 200000) {
    if (a == b) return 0;
    std::map<Configuration, int> seen{{a, 0}};
    std::deque<Configuration> q{a};
    while (!q.empty() && seen.size() < cap) {
        auto c = q.front();
        q.pop_front();
        std::set<Position> s(c.begin(), c.end());
        for (auto from : c) {
            auto rest = s;
            rest.erase(from);
            for (auto coin : rest)
                for (Position to : {Position{coin.x + 1, coin.y}, Position{coin.x - 1, coin.y}, Position{coin.x, coin.y + 1},
                                    Position{coin.x, coin.y - 1}}) {
                    if (s.count(to) || count_neighbors(rest, to) < 2) continue;
                    auto next = c.without(from).with(to);
                    if (seen.count(next)) continue;
                    seen[next] = seen[c] + 1;
                    if (next == b) return seen[next];
                    q.push_back(next);
                }
        }
    }
    return q.empty() ? -1 : -2;
}

inline Configuration random_config(std::mt19937& rng, int m, int n, int k, Position origin = {0, 0}) {
    std::vector<Position> cells;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < n; ++y) cells.push_back({origin.x + x, origin.y + y});
    std::shuffle(cells.begin(), cells.end(), rng);
    cells.resize(std::min<std::size_t>(k, cells.size()));
    return Configuration(cells);
}

} // namespace coinflow::testing
