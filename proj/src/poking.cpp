#include "coinflow/poking.hpp"

#include "coinflow/oracle.hpp"
#include "coinflow/span.hpp"

#include <deque>
#include <map>
#include <unordered_map>

namespace coinflow {

bool is_poking_state(const Configuration& m) {
    if (m.size() < 2 || adjacent_pair_count(m) != 1) return false;
    try {
        return is_minimum(m);
    } catch (const Error&) {
        return false;
    }
}

std::vector<Poke> legal_pokes(const Configuration& m) {
    std::vector<Poke> out;
    std::vector<Position> pair;
    for (auto c : m)
        if (m.occupied_neighbors(c) > 0) pair.push_back(c);
    for (auto c : pair)
        for (auto p : neighbors(c))
            if (!m.contains(p) && m.occupied_neighbors(p, c) >= 1) out.emplace_back(c, p);
    return out;
}

Configuration apply_poke(const Configuration& m, const Poke& poke) {
    auto legal = legal_pokes(m);
    if (std::find(legal.begin(), legal.end(), poke) == legal.end())
        throw Error("illegal_poke", to_string(poke.first) + " -> " + to_string(poke.second));
    return m.without(poke.first).with(poke.second);
}

int chain_t(const ChainState& s, int k) { return (s.j < 0 || k <= s.j) ? 2 * k : 2 * k - 1; }

bool chain_valid(const ChainFrame& f, const ChainState& s) {
    const int n = static_cast<int>(s.a.size());
    if (n == 0) return false;
    if (s.j >= 0 && s.j > n - 2) return false;
    if (chain_t(s, n - 1) != f.W + f.H || s.a[0] != 0 || s.a[n - 1] != f.W) return false;
    for (int k = 0; k < n; ++k) {
        int t = chain_t(s, k);
        if (s.a[k] < 0 || s.a[k] > f.W || t - s.a[k] < 0 || t - s.a[k] > f.H) return false;
        if (k + 1 < n) {
            int dt = chain_t(s, k + 1) - t;
            int da = s.a[k + 1] - s.a[k];
            if (da < 0 || da > dt) return false;
        }
    }
    return true;
}

Configuration chain_cells(const ChainFrame& f, const ChainState& s) {
    std::vector<Position> out;
    for (int k = 0; k < static_cast<int>(s.a.size()); ++k) {
        int t = chain_t(s, k);
        out.push_back(f.to_world({s.a[k], t - s.a[k]}));
    }
    return Configuration(std::move(out));
}

std::optional<ChainState> chain_state_of(const ChainFrame& f, const Configuration& c) {
    std::vector<Position> local;
    for (auto p : c) {
        auto q = f.to_local(p);
        if (q.x < 0 || q.x > f.W || q.y < 0 || q.y > f.H) return std::nullopt;
        local.push_back(q);
    }
    std::sort(local.begin(), local.end(), [](Position a, Position b) { return a.x + a.y < b.x + b.y; });
    ChainState s;
    for (std::size_t k = 0; k < local.size(); ++k) {
        s.a.push_back(local[k].x);
        if (k > 0 && local[k].x + local[k].y - local[k - 1].x - local[k - 1].y == 1) {
            if (s.j >= 0) return std::nullopt;
            s.j = static_cast<int>(k) - 1;
        }
    }
    if (!chain_valid(f, s)) return std::nullopt;
    for (std::size_t k = 0; k < local.size(); ++k)
        if (local[k].x + local[k].y != chain_t(s, static_cast<int>(k))) return std::nullopt;
    return s;
}

std::optional<std::pair<ChainFrame, ChainState>> find_chain(const Configuration& m) {
    if (m.empty()) return std::nullopt;
    auto r = enclosing_rectangle(m);
    for (bool down : {true, false}) {
        ChainFrame f{down ? r.top_left() : r.bottom_left(), down, r.m - 1, r.n - 1};
        if (auto s = chain_state_of(f, m)) return std::pair{f, *s};
    }
    return std::nullopt;
}

std::optional<ChainDecomposition> chain_decompose(const Configuration& m) {
    if (m.size() < 2) return std::nullopt;
    auto found = find_chain(m);
    if (!found || found->second.j < 0) return std::nullopt;
    const auto& [f, s] = *found;
    ChainDecomposition d;
    for (int k = 0; k < static_cast<int>(s.a.size()); ++k) {
        int t = chain_t(s, k);
        d.order.push_back(f.to_world({s.a[k], t - s.a[k]}));
    }
    d.pair_index = static_cast<std::size_t>(s.j);
    return d;
}

bool chain_poking_decide(const Configuration& m, const Configuration& target) {
    auto dm = chain_decompose(m);
    if (!dm) throw Error("not_a_chain", "start is not a minimum chain with one adjacent pair");
    auto dt = chain_decompose(target);
    if (!dt || enclosing_rectangle(m) != enclosing_rectangle(target)) return false;
    auto [p, q] = dm->endpoints();
    auto [p2, q2] = dt->endpoints();
    return (p == p2 && q == q2) || (p == q2 && q == p2);
}

namespace {

std::vector<ChainState> poke_neighbors(const ChainFrame& f, const ChainState& s) {
    std::vector<ChainState> out;
    const int n = static_cast<int>(s.a.size());
    if (s.j >= 1) {
        for (int d : {-1, 0}) {
            ChainState next = s;
            next.j = s.j - 1;
            next.a[s.j] += d;
            if (chain_valid(f, next)) out.push_back(next);
        }
    }
    if (s.j >= 0 && s.j <= n - 3) {
        for (int d : {0, 1}) {
            ChainState next = s;
            next.j = s.j + 1;
            next.a[s.j + 1] += d;
            if (chain_valid(f, next)) out.push_back(next);
        }
    }
    return out;
}

ChainState normal_form(const ChainFrame& f, int n) {
    ChainState s;
    s.j = 0;
    for (int k = 0; k < n; ++k) s.a.push_back(std::max(0, chain_t(s, k) - f.H));
    return s;
}

std::vector<ChainState> bfs_path(const ChainFrame& f, const ChainState& from, const ChainState& to) {
    std::map<ChainState, ChainState> parent{{from, from}};
    std::deque<ChainState> queue{from};
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        if (cur == to) break;
        for (auto& next : poke_neighbors(f, cur))
            if (parent.emplace(next, cur).second) queue.push_back(next);
    }
    if (!parent.count(to)) throw Error("not_reachable", "normal form not reached");
    std::vector<ChainState> path{to};
    while (!(path.back() == from)) path.push_back(parent.at(path.back()));
    std::reverse(path.begin(), path.end());
    return path;
}

// Sweeps the pair to the start corner taking the lowest offsets, then to the
// far end, and repeats. Falls back to search when it stalls.
std::vector<ChainState> path_to_normal_form(const ChainFrame& f, const ChainState& start) {
    const int n = static_cast<int>(start.a.size());
    const ChainState goal = normal_form(f, n);
    std::vector<ChainState> path{start};
    auto step = [&](bool left) {
        auto options = poke_neighbors(f, path.back());
        const ChainState* best = nullptr;
        for (const auto& o : options) {
            if ((o.j < path.back().j) != left) continue;
            if (!best || o.a < best->a) best = &o;
        }
        if (!best) return false;
        path.push_back(*best);
        return true;
    };
    for (int round = 0; round < 2 * (f.W + f.H) + 4; ++round) {
        while (path.back().j > 0 && step(true)) {
        }
        if (path.back() == goal) return path;
        while (path.back().j < n - 2 && step(false)) {
        }
    }
    return bfs_path(f, start, goal);
}

std::vector<Poke> states_to_pokes(const ChainFrame& f, const std::vector<ChainState>& path) {
    std::vector<Poke> out;
    for (std::size_t i = 1; i < path.size(); ++i) {
        auto before = chain_cells(f, path[i - 1]);
        auto after = chain_cells(f, path[i]);
        auto gone = set_difference(before, after);
        auto added = set_difference(after, before);
        if (gone.size() == 1 && added.size() == 1) out.emplace_back(gone[0], added[0]);
    }
    return out;
}

} // namespace

std::vector<Poke> chain_poking_solve(const Configuration& m, const Configuration& target) {
    if (!chain_poking_decide(m, target)) throw Error("not_reachable", "target is not a chain between the same corners");
    if (m == target) return {};
    auto [f, s] = *find_chain(m);
    auto t = chain_state_of(f, target);
    if (!t) throw Error("not_reachable", "target does not fit the start frame");
    auto forward = states_to_pokes(f, path_to_normal_form(f, s));
    auto back = states_to_pokes(f, path_to_normal_form(f, *t));
    for (auto it = back.rbegin(); it != back.rend(); ++it) forward.emplace_back(it->second, it->first);
    return forward;
}

std::optional<std::vector<Poke>> poking_search(const Configuration& m, const Configuration& target,
                                               std::size_t max_states) {
    if (m == target) return std::vector<Poke>{};
    std::unordered_map<Configuration, std::pair<Configuration, Poke>> parent;
    parent.emplace(m, std::pair{m, Poke{}});
    std::deque<Configuration> queue{m};
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        for (auto poke : legal_pokes(cur)) {
            auto next = cur.without(poke.first).with(poke.second);
            if (parent.count(next)) continue;
            if (parent.size() >= max_states) return std::nullopt;
            parent.emplace(next, std::pair{cur, poke});
            if (next == target) {
                std::vector<Poke> out;
                for (auto c = next; !(c == m); c = parent.at(c).first) out.push_back(parent.at(c).second);
                std::reverse(out.begin(), out.end());
                return out;
            }
            queue.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

ActionSequence pokes_to_actions(const std::vector<Poke>& pokes) {
    ActionSequence out;
    for (auto [c, p] : pokes) {
        out.push_back(Action::drop(p));
        out.push_back(Action::pick_up(c));
    }
    return out;
}

namespace {

struct MinPlusOne {
    Rectangle r;
};

std::optional<MinPlusOne> shared_min_plus1(const Configuration& a, const Configuration& b) {
    if (a.size() != b.size() || a.size() < 2) return std::nullopt;
    SpanDecomposition sa, sb;
    try {
        sa = span_components(a);
        sb = span_components(b);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (sa.size() != 1 || sb.size() != 1 || sa.rectangles[0] != sb.rectangles[0]) return std::nullopt;
    if (!is_minimum_plus_one(a) || !is_minimum_plus_one(b)) return std::nullopt;
    return MinPlusOne{sa.rectangles[0]};
}

std::optional<Action> single_move(const Configuration& a, const Configuration& b) {
    for (auto [from, to] : legal_moves(a))
        if (a.without(from).with(to) == b) return Action::move(from, to);
    return std::nullopt;
}

// Every (first move, a, b) split of the puzzle, as in the reduction.
struct Reduction {
    Action first;
    Position a;
    Position b;
    Configuration m;
    Configuration target;
};

std::vector<Reduction> reductions(const Configuration& a, const Configuration& b, const Rectangle& r) {
    const Configuration full(r.cells());
    std::vector<Position> redundant;
    for (auto c : b)
        if (b.occupied_neighbors(c) >= 2) redundant.push_back(c);
    std::vector<Reduction> out;
    for (auto [c1, p1] : legal_moves(a)) {
        auto a1 = a.without(c1).with(p1);
        if (span(a1) != full) continue;
        for (auto x : neighbors(p1)) {
            if (!a1.contains(x)) continue;
            auto m = a1.without(x);
            if (span(m) != full) continue;
            for (auto y : redundant) out.push_back({Action::move(c1, p1), x, y, m, b.without(y)});
        }
    }
    return out;
}

ActionSequence assemble(const Reduction& red, const std::vector<Poke>& pokes) {
    ActionSequence seq{red.first};
    Position from = red.a;
    for (auto [s, d] : pokes) {
        // poking into the free coin's cell leaves the board as it is
        if (d != from) seq.push_back(Action::move(from, d));
        from = s;
    }
    if (from != red.b) seq.push_back(Action::move(from, red.b));
    return seq;
}

} // namespace

SolveOutcome solve_min_plus1(const Configuration& a, const Configuration& b, std::size_t max_states) {
    const std::string method = "min-plus1";
    auto shared = shared_min_plus1(a, b);
    if (!shared) return SolveOutcome::unknown("not minimum+1 on one shared rectangle", method);
    if (a == b) return SolveOutcome::solved({}, method);
    if (auto mv = single_move(a, b)) return SolveOutcome::solved({*mv}, method);

    Certificate cert;
    cert.kind = CertificateKind::PokingExhaustive;
    if (shared->r.even()) {
        cert.evidence = "even span and no single move";
        return SolveOutcome::unsolvable(cert, method);
    }
    bool exhausted = false;
    std::size_t explored = 0;
    for (const auto& red : reductions(a, b, shared->r)) {
        ++explored;
        std::optional<std::vector<Poke>> pokes;
        if (red.m == red.target) {
            pokes = std::vector<Poke>{};
        } else if (!is_poking_state(red.m) || !is_poking_state(red.target)) {
            continue;
        } else if (chain_decompose(red.m)) {
            if (chain_poking_decide(red.m, red.target)) pokes = chain_poking_solve(red.m, red.target);
        } else {
            auto closure = reachable_poking(red.m, SearchLimits{max_states, std::nullopt});
            bool in = std::find(closure.states.begin(), closure.states.end(), red.target) != closure.states.end();
            if (in) pokes = poking_search(red.m, red.target, max_states);
            else if (closure.exhausted) exhausted = true;
        }
        if (!pokes) continue;
        auto seq = assemble(red, *pokes);
        try {
            validate_sequence({a, 0}, seq, GameState{b, 0});
        } catch (const Error&) {
            continue;
        }
        return SolveOutcome::solved(seq, method);
    }
    if (exhausted) return SolveOutcome::unknown("poking search exhausted", method);
    cert.evidence = "no poking route for any of " + std::to_string(explored) + " reductions";
    cert.states = explored;
    return SolveOutcome::unsolvable(cert, method);
}

std::optional<bool> min_plus1_unsolvable_by_search(const Configuration& a, const Configuration& b,
                                                   std::size_t max_states, std::size_t* states) {
    auto shared = shared_min_plus1(a, b);
    if (!shared || a == b) return std::nullopt;
    if (single_move(a, b)) return false;
    if (shared->r.even()) return true;
    std::size_t total = 0;
    for (const auto& red : reductions(a, b, shared->r)) {
        if (red.m == red.target) return false;
        if (!is_poking_state(red.m)) continue;
        auto closure = reachable_poking(red.m, SearchLimits{max_states, std::nullopt});
        total += closure.states.size();
        if (std::find(closure.states.begin(), closure.states.end(), red.target) != closure.states.end()) return false;
        if (closure.exhausted) return std::nullopt;
    }
    if (states) *states = total;
    return true;
}

} // namespace coinflow
