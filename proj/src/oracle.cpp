#include "coinflow/oracle.hpp"

#include "coinflow/poking.hpp"
#include "coinflow/span.hpp"

#include <array>
#include <bit>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace coinflow {

std::size_t default_max_states() {
    if (const char* env = std::getenv("COINFLOW_MAX_STATES")) {
        try {
            auto v = std::stoull(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return 5'000'000;
}

namespace {

// Cells of the search area, indexed, with neighbor tables.
struct Board {
    std::vector<Position> cells;
    std::unordered_map<Position, int> index;
    std::vector<std::array<int, 4>> adj;  // -1 for outside

    explicit Board(const Configuration& area) : cells(area.begin(), area.end()) {
        for (int i = 0; i < static_cast<int>(cells.size()); ++i) index[cells[i]] = i;
        adj.resize(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            auto ns = neighbors(cells[i]);
            for (int k = 0; k < 4; ++k) {
                auto it = index.find(ns[k]);
                adj[i][k] = it == index.end() ? -1 : it->second;
            }
        }
    }
};

template <std::size_t W>
using Bits = std::array<std::uint64_t, W>;

template <std::size_t W>
struct BitsHash {
    std::size_t operator()(const Bits<W>& b) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : b) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 32));
    }
};

template <std::size_t W>
bool test(const Bits<W>& b, int i) {
    return (b[i >> 6] >> (i & 63)) & 1u;
}
template <std::size_t W>
void flip(Bits<W>& b, int i) {
    b[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

template <std::size_t W>
Bits<W> encode(const Board& board, const Configuration& c) {
    Bits<W> b{};
    for (auto p : c) flip<W>(b, board.index.at(p));
    return b;
}

template <std::size_t W>
Configuration decode(const Board& board, const Bits<W>& b) {
    std::vector<Position> out;
    for (std::size_t w = 0; w < W; ++w) {
        auto word = b[w];
        while (word) {
            int bit = std::countr_zero(word);
            out.push_back(board.cells[w * 64 + bit]);
            word &= word - 1;
        }
    }
    return Configuration(std::move(out));
}

// Calls f(from, to) for every legal move in state s.
template <std::size_t W, class F>
void for_each_move(const Board& board, const Bits<W>& s, F&& f) {
    const int n = static_cast<int>(board.cells.size());
    std::vector<int> coins;
    for (int i = 0; i < n; ++i)
        if (test<W>(s, i)) coins.push_back(i);
    for (int p = 0; p < n; ++p) {
        if (test<W>(s, p)) continue;
        int count = 0;
        for (int q : board.adj[p])
            if (q >= 0 && test<W>(s, q)) ++count;
        if (count < 2) continue;
        for (int c : coins) {
            bool adjacent = false;
            for (int q : board.adj[p]) adjacent = adjacent || q == c;
            if (adjacent && count < 3) continue;
            f(c, p);
        }
    }
}

template <std::size_t W>
struct Bfs {
    const Board& board;
    std::vector<Bits<W>> nodes;
    std::vector<std::uint32_t> parent;
    std::vector<std::pair<std::uint16_t, std::uint16_t>> via;
    std::vector<int> depth;
    std::unordered_map<Bits<W>, std::uint32_t, BitsHash<W>> seen;

    // Returns the index of the goal node, or -1. Sets exhausted.
    long run(const Bits<W>& start, const std::optional<Bits<W>>& goal, const SearchLimits& limits, bool& exhausted) {
        exhausted = false;
        nodes.push_back(start);
        parent.push_back(0);
        via.emplace_back(0, 0);
        depth.push_back(0);
        seen.emplace(start, 0);
        if (goal && start == *goal) return 0;
        for (std::size_t head = 0; head < nodes.size(); ++head) {
            if (limits.max_depth && depth[head] >= *limits.max_depth) {
                exhausted = true;
                continue;
            }
            Bits<W> cur = nodes[head];
            long found = -1;
            bool stop = false;
            for_each_move<W>(board, cur, [&](int from, int to) {
                if (found >= 0 || stop) return;
                Bits<W> next = cur;
                flip<W>(next, from);
                flip<W>(next, to);
                if (seen.count(next)) return;
                if (nodes.size() >= limits.max_states) {
                    stop = true;
                    return;
                }
                auto id = static_cast<std::uint32_t>(nodes.size());
                seen.emplace(next, id);
                nodes.push_back(next);
                parent.push_back(static_cast<std::uint32_t>(head));
                via.emplace_back(static_cast<std::uint16_t>(from), static_cast<std::uint16_t>(to));
                depth.push_back(depth[head] + 1);
                if (goal && next == *goal) found = id;
            });
            if (found >= 0) return found;
            if (stop) {
                exhausted = true;
                return -1;
            }
        }
        return -1;
    }

    ActionSequence path_to(std::uint32_t id) const {
        ActionSequence out;
        while (id != 0) {
            out.push_back(Action::move(board.cells[via[id].first], board.cells[via[id].second]));
            id = parent[id];
        }
        std::reverse(out.begin(), out.end());
        return out;
    }
};

template <std::size_t W>
OracleResult search_w(const Board& board, const Configuration& a, const std::optional<Configuration>& b,
                      const SearchLimits& limits, std::vector<Configuration>* all) {
    Bfs<W> bfs{board, {}, {}, {}, {}, {}};
    std::optional<Bits<W>> goal;
    if (b) goal = encode<W>(board, *b);
    bool exhausted = false;
    long found = bfs.run(encode<W>(board, a), goal, limits, exhausted);
    OracleResult r;
    r.states = bfs.nodes.size();
    if (found >= 0) {
        r.verdict = OracleVerdict::Reachable;
        r.moves = bfs.path_to(static_cast<std::uint32_t>(found));
    } else {
        r.verdict = exhausted ? OracleVerdict::Exhausted : OracleVerdict::Unreachable;
    }
    if (all)
        for (const auto& n : bfs.nodes) all->push_back(decode<W>(board, n));
    return r;
}

OracleResult dispatch(const Configuration& a, const std::optional<Configuration>& b, const SearchLimits& limits,
                      std::vector<Configuration>* all) {
    Board board(span(a));
    auto n = board.cells.size();
    if (n <= 64) return search_w<1>(board, a, b, limits, all);
    if (n <= 128) return search_w<2>(board, a, b, limits, all);
    if (n <= 256) return search_w<4>(board, a, b, limits, all);
    if (n <= 512) return search_w<8>(board, a, b, limits, all);
    throw Error("too_large", "span has " + std::to_string(n) + " cells, oracle handles at most 512");
}

} // namespace

ReachableSet reachable_set(const Configuration& a, const SearchLimits& limits) {
    ReachableSet out;
    if (a.empty()) {
        out.states.push_back(a);
        return out;
    }
    auto r = dispatch(a, std::nullopt, limits, &out.states);
    out.exhausted = r.verdict == OracleVerdict::Exhausted;
    return out;
}

OracleResult oracle_search(const Configuration& a, const Configuration& b, const SearchLimits& limits) {
    OracleResult r;
    if (a == b) {
        r.verdict = OracleVerdict::Reachable;
        r.states = 1;
        return r;
    }
    if (a.size() != b.size() || a.empty() || !b.is_subset_of(span(a))) {
        r.verdict = OracleVerdict::Unreachable;
        return r;
    }
    return dispatch(a, b, limits, nullptr);
}

std::optional<ActionSequence> shortest_solution(const Configuration& a, const Configuration& b,
                                                const SearchLimits& limits) {
    auto r = oracle_search(a, b, limits);
    switch (r.verdict) {
    case OracleVerdict::Reachable: return r.moves;
    case OracleVerdict::Unreachable: return std::nullopt;
    case OracleVerdict::Exhausted: break;
    }
    throw Error("exhausted", "search stopped after " + std::to_string(r.states) + " states");
}

ReachableSet reachable_poking(const Configuration& m, const SearchLimits& limits) {
    if (!is_poking_state(m)) throw Error("precondition_violated", "not minimum with a single adjacent pair");
    ReachableSet out;
    std::unordered_set<Configuration> seen{m};
    std::deque<std::pair<Configuration, int>> queue{{m, 0}};
    out.states.push_back(m);
    while (!queue.empty()) {
        auto [cur, d] = queue.front();
        queue.pop_front();
        if (limits.max_depth && d >= *limits.max_depth) {
            out.exhausted = true;
            continue;
        }
        for (auto [c, p] : legal_pokes(cur)) {
            auto next = cur.without(c).with(p);
            if (!seen.insert(next).second) continue;
            if (out.states.size() >= limits.max_states) {
                out.exhausted = true;
                return out;
            }
            out.states.push_back(next);
            queue.emplace_back(std::move(next), d + 1);
        }
    }
    return out;
}

} // namespace coinflow
