#include "coinflow/solver.hpp"

#include "coinflow/canonical.hpp"
#include "coinflow/infeasibility.hpp"
#include "coinflow/poking.hpp"
#include "coinflow/rewrite.hpp"
#include "coinflow/span.hpp"

#include <algorithm>
#include <functional>

namespace coinflow {

namespace {

void run(GameState& state, ActionSequence& out, const ActionSequence& seq) {
    state = validate_sequence(state, seq);
    out.insert(out.end(), seq.begin(), seq.end());
}

int ceil_half(int x) { return (x + 1) / 2; }

// Replays raw from (a, 0) to (b, 0) and rewrites it into pure moves.
SolveOutcome finish(const Configuration& a, const Configuration& b, const ActionSequence& raw,
                    const std::string& method) {
    const GameState start{a, 0}, goal{b, 0};
    validate_sequence(start, raw, goal);
    auto moves = moves_only(start, raw);
    validate_sequence(start, moves, goal);
    return SolveOutcome::solved(std::move(moves), method);
}

// pick a1, a2; canonicalize; middle; reverse-canonicalize B0; drop b2, b1.
SolveOutcome two_extra_pipeline(const Configuration& a, const Configuration& b, Position a1, Position a2,
                                const std::vector<Position>& reds, const std::string& method,
                                const std::function<void(GameState&, ActionSequence&)>& middle) {
    try {
        ActionSequence raw;
        GameState cur{a, 0};
        run(cur, raw, {Action::pick_up(a1), Action::pick_up(a2)});
        run(cur, raw, canonicalize(cur).forward);
        middle(cur, raw);
        Configuration b0 = b;
        for (auto r : reds) b0.erase(r);
        auto back = canonicalize(GameState{b0, 2});
        if (!(cur == back.end)) throw Error("pipeline_mismatch", "middle stage missed the target 'L's");
        run(cur, raw, *back.backward);
        run(cur, raw, {Action::drop(reds[1]), Action::drop(reds[0])});
        return finish(a, b, raw, method);
    } catch (const Error& e) {
        return SolveOutcome::unknown(e.what(), method);
    }
}

// Re-labels or flips and leapfrogs the 'L' on r until its cells equal goal.
void retarget(GameState& cur, ActionSequence& out, const Rectangle& r, const Configuration& goal) {
    auto shape = identify_L(cur.board, r);
    auto want = identify_L(goal, r);
    if (!shape || !want) throw Error("sweep_failed", "no 'L' on " + to_string(r));
    auto as_corner = [&](const LShape& l, Corner c) -> std::optional<LShape> {
        auto cells = l_cells(l);
        LShape t{r, c, -1};
        for (int j = t.odd() ? 0 : -1; j <= (t.odd() ? max_pair_index(r) : -1); ++j) {
            t.pair = j;
            if (l_cells(t) == cells) return t;
        }
        return std::nullopt;
    };
    if (l_cells(*shape) == goal) return;
    if (auto same = as_corner(*shape, want->corner)) {
        shape = same;
    } else {
        auto flip = flip_L(cur, *shape);
        run(cur, out, flip.forward);
        shape = as_corner(*flip.shape, want->corner);
        if (!shape) throw Error("sweep_failed", "corner mismatch on " + to_string(r));
    }
    if (shape->odd() && shape->pair != want->pair) run(cur, out, leapfrog(cur, *shape, want->pair).forward);
    if (set_intersection(cur.board, r) != goal) throw Error("sweep_failed", "retarget missed on " + to_string(r));
}

// Lattice isometry from a world rectangle onto [0,M) x [0,N).
struct Frame {
    Rectangle world;
    bool transpose = false;
    bool rot = false;
    int M = 0, N = 0;

    Frame(const Rectangle& r, bool t, bool ro) : world(r), transpose(t), rot(ro) {
        M = t ? r.n : r.m;
        N = t ? r.m : r.n;
    }
    Position to_world(Position q) const {
        if (rot) q = {M - 1 - q.x, N - 1 - q.y};
        if (transpose) q = {q.y, q.x};
        return {q.x + world.x0, q.y + world.y0};
    }
    Position to_local(Position p) const {
        Position q{p.x - world.x0, p.y - world.y0};
        if (transpose) q = {q.y, q.x};
        if (rot) q = {M - 1 - q.x, N - 1 - q.y};
        return q;
    }
    Rectangle world_rect(int x0, int y0, int m, int n) const {
        auto a = to_world({x0, y0});
        auto b = to_world({x0 + m - 1, y0 + n - 1});
        return Rectangle(std::min(a.x, b.x), std::min(a.y, b.y), std::abs(a.x - b.x) + 1, std::abs(a.y - b.y) + 1);
    }
};

struct Sweeper {
    GameState cur;
    ActionSequence out;
    const Frame* f = nullptr;

    bool has(Position q) const { return cur.board.contains(f->to_world(q)); }
    void act(const ActionSequence& seq) { run(cur, out, seq); }
    void drop(Position q) { act({Action::drop(f->to_world(q))}); }
    void pick(Position q) { act({Action::pick_up(f->to_world(q))}); }

    // Makes path[target] occupied by shifting the nearest adjacent pair along
    // the path, or by a drop when there is no pair.
    void bring_coin(const std::vector<Position>& path, int target) {
        const int s = static_cast<int>(path.size()) - 1;
        while (!has(path[target])) {
            int below = -1, above = -1;
            for (int t = 0; t < s; ++t) {
                if (!has(path[t]) || !has(path[t + 1])) continue;
                if (t + 1 < target) below = t;
                if (t > target && above < 0) above = t;
            }
            if (below < 0 && above < 0) {
                drop(path[target]);
            } else if (below >= 0 && (above < 0 || target - below <= above - target)) {
                drop(path[below + 2]);
                pick(path[below + 1]);
            } else {
                drop(path[above - 1]);
                pick(path[above]);
            }
        }
    }

    // Leaves at most one adjacent pair along the path by moving pairs together
    // and removing the middle coin.
    void merge_pairs(const std::vector<Position>& path) {
        const int s = static_cast<int>(path.size()) - 1;
        for (;;) {
            std::vector<int> pairs;
            for (int t = 0; t < s; ++t)
                if (has(path[t]) && has(path[t + 1])) pairs.push_back(t);
            if (pairs.size() < 2) return;
            int a = pairs[0];
            if (has(path[a + 2])) {
                pick(path[a + 1]);
            } else {
                drop(path[a + 2]);
                pick(path[a + 1]);
            }
        }
    }

    // Coin at (x, r) goes to (x+1, r+1) while the cells in `build` get coins.
    // Without a mover only the building coins are placed.
    void bend(std::optional<Position> mover, const std::vector<Position>& build, int r) {
        if (!mover && build.empty()) return;
        const Position from = mover ? *mover : build.front();
        const Position to = mover ? Position{from.x + 1, from.y + 1} : from;
        std::vector<Position> region{from, to};
        region.insert(region.end(), build.begin(), build.end());
        int lo = from.x, hi = to.x;
        for (auto q : region) lo = std::min(lo, q.x), hi = std::max(hi, q.x);
        auto attempt = [&](int x0, int x1, int y0, int y1) -> bool {
            x0 = std::max(x0, 0), x1 = std::min(x1, f->M - 1);
            y0 = std::max(y0, 0), y1 = std::min(y1, f->N - 1);
            if ((x1 - x0 + 1) * (y1 - y0 + 1) > 64) return false;
            std::vector<Position> window;
            Configuration goal;
            for (int x = x0; x <= x1; ++x)
                for (int y = y0; y <= y1; ++y) {
                    Position q{x, y};
                    window.push_back(f->to_world(q));
                    bool on = has(q);
                    if (mover && q == from) on = false;
                    if (q == to || std::find(build.begin(), build.end(), q) != build.end()) on = true;
                    if (on) goal.insert(f->to_world(q));
                }
            auto seq = local_rewrite(cur.board, cur.hand, window, goal, {200'000, cur.hand, true});
            if (!seq) return false;
            act(*seq);
            return true;
        };
        for (int margin : {0, 1, 2})
            if (attempt(lo - margin, hi + margin, r - margin, r + 1 + margin)) return;
        if (attempt(0, f->M - 1, r - 1, r + 2)) return;
        if (attempt(0, f->M - 1, 0, f->N - 1)) return;
        throw Error("sweep_failed", "no bend for " + to_string(f->to_world(from)));
    }
};

std::vector<Position> bl_path(int x0, int y0, int m, int n) { return l_path(Rectangle(x0, y0, m, n), Corner::BL); }

ActionSequence sweep_step(GameState& state, const Rectangle& r, const Configuration& c);

// One level of the recursion in a fixed frame. Returns the top rectangle (world).
Rectangle sweep_level(GameState& state, ActionSequence& out, const Frame& f, const Configuration& c) {
    const int M = f.M, N = f.N, W = M - 1;
    const int top = (N + 1) / 2, n1 = N - top;
    Sweeper sw{state, {}, &f};
    auto in_c = [&](Position q) { return c.contains(f.to_world(q)); };

    // the local canonical 'L' on the whole box
    Configuration local_l;
    for (auto q : canonical_L(Rectangle(0, 0, M, N))) local_l.insert(f.to_world(q));
    retarget(sw.cur, sw.out, f.world, local_l);
    const int hand0 = state.hand;
    const int l_size = static_cast<int>(local_l.size());

    // (a) coin at the bottom-left corner of the top half
    auto full = bl_path(0, 0, M, N);
    sw.bring_coin(full, top - 1);

    // (b) raise the bottom leg row by row, building the bottom half
    for (int r = 0; r < n1; ++r) {
        std::vector<int> xs;
        for (int x = 0; x < W; ++x)
            if (sw.has({x, r})) xs.push_back(x);
        if (xs.empty()) {
            std::vector<Position> build;
            for (int x = 0; x < W; ++x)
                if (in_c({x, r})) build.push_back({x, r});
            sw.bend(std::nullopt, build, r);
        }
        int start = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            int end = i + 1 == xs.size() ? W - 1 : xs[i];
            std::vector<Position> build;
            for (int x = start; x <= end; ++x)
                if (in_c({x, r})) build.push_back({x, r});
            sw.bend(Position{xs[i], r}, build, r);
            start = end + 1;
        }
    }

    // (c) coin at the bottom-right corner of the top half, then the right column
    std::vector<Position> q_path;
    for (int x = 0; x <= W; ++x) q_path.push_back({x, n1});
    for (int y = n1 - 1; y >= 0; --y) q_path.push_back({W, y});
    sw.bring_coin(q_path, W);
    for (int y = n1 - 1; y >= 0; --y)
        if (in_c({W, y}) && !sw.has({W, y})) sw.drop({W, y});
    for (int y = n1 - 1; y >= 0; --y)
        if (!in_c({W, y}) && sw.has({W, y})) sw.pick({W, y});

    // (d) one pair at most on the top 'L', then canonical there
    sw.merge_pairs(bl_path(0, n1, M, top));
    const Rectangle r1 = f.world_rect(0, 0, M, n1);
    const Rectangle r2 = f.world_rect(0, n1, M, top);
    retarget(sw.cur, sw.out, r2, canonical_L(r2));

    const int c1 = static_cast<int>(set_intersection(c, r1).size());
    const int l2 = min_cardinality(r2);
    if (set_intersection(sw.cur.board, r1) != set_intersection(c, r1))
        throw Error("sweep_failed", "bottom half differs from the target");
    if (sw.cur.hand != l_size + hand0 - (c1 + l2)) throw Error("sweep_failed", "hand accounting");
    state = sw.cur;
    out.insert(out.end(), sw.out.begin(), sw.out.end());
    return r2;
}

ActionSequence sweep_step(GameState& state, const Rectangle& r, const Configuration& c) {
    ActionSequence out;
    auto here = set_intersection(state.board, r);
    if (here == c) return out;
    if (c.empty()) {
        for (auto p : here) run(state, out, {Action::pick_up(p)});
        return out;
    }
    const bool transpose = r.m > r.n;
    const int n_local = transpose ? r.m : r.n;
    const int n1 = n_local - (n_local + 1) / 2;
    // bottom half count in the unrotated frame decides the rotation
    Frame plain(r, transpose, false);
    int low = 0;
    for (auto p : c)
        if (plain.to_local(p).y < n1) ++low;
    const bool rot = low > static_cast<int>(c.size()) - low;
    std::vector<Frame> frames{Frame(r, transpose, rot), Frame(r, transpose, !rot)};
    if (r.m == r.n) frames.push_back(Frame(r, !transpose, rot)), frames.push_back(Frame(r, !transpose, !rot));
    std::optional<Error> last;
    for (const auto& f : frames) {
        GameState trial = state;
        ActionSequence seq;
        try {
            auto r2 = sweep_level(trial, seq, f, c);
            auto rest = sweep_step(trial, r2, set_intersection(c, r2));
            seq.insert(seq.end(), rest.begin(), rest.end());
        } catch (const Error& e) {
            last = e;
            continue;
        }
        state = trial;
        out.insert(out.end(), seq.begin(), seq.end());
        return out;
    }
    throw *last;
}

std::optional<std::pair<Position, Position>> extra_pair(const Configuration& a,
                                                        const std::function<bool(const Configuration&)>& ok) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            auto rest = a.without(a[i]).without(a[j]);
            if (!rest.empty() && ok(rest)) return std::pair{a[i], a[j]};
        }
    return std::nullopt;
}

// Every component of span(a0) holds at most one target component.
bool one_each(const Configuration& a0, const SpanDecomposition& sb) {
    auto sa = span_components(a0);
    std::vector<int> count(sa.size(), 0);
    for (const auto& rb : sb.rectangles) {
        bool inside = false;
        for (std::size_t i = 0; i < sa.size(); ++i)
            if (sa.rectangles[i].contains(rb)) {
                inside = true;
                if (++count[i] > 1) return false;
            }
        if (!inside) return false;
    }
    return true;
}

} // namespace

bool sweep_hypothesis(int m, int n, int k, int c) {
    return c < std::min(ceil_half(m + n) - ceil_half(std::min(m, n)) + k - 1, 2 * (k - 1));
}

ActionSequence sweep_build(const GameState& state, const Rectangle& r, const Configuration& c) {
    if (set_intersection(state.board, r) != canonical_L(r))
        throw Error("hypothesis_violated", "no canonical 'L' on " + to_string(r));
    if (set_intersection(c, r) != c) throw Error("hypothesis_violated", "target leaves " + to_string(r));
    const int k = state.hand, size = static_cast<int>(c.size());
    if (!sweep_hypothesis(r.m, r.n, k, size))
        throw Error("hypothesis_violated", "|C| = " + std::to_string(size) + " is not below min(" +
                                               std::to_string(ceil_half(r.m + r.n) - ceil_half(std::min(r.m, r.n)) + k - 1) +
                                               ", " + std::to_string(2 * (k - 1)) + ")");
    GameState cur = state;
    auto out = sweep_step(cur, r, c);
    validate_sequence(state, out);
    return out;
}

bool sweep_inequalities(int m, int n, int coins, int min_a, int min_b) {
    const Rational big(coins);
    return big > Rational(min_a) + Rational(min_b, 2) + Rational(1) &&
           coins > min_b + ceil_half(std::min(m, n)) + 1;
}

bool sweep_condition_iv(int coins, int min_a, int min_b) {
    return Rational(coins) >= Rational(3, 2) * Rational(std::max(min_a, min_b)) + Rational(2);
}

SolveOutcome solve_same_span(const Configuration& a, const Configuration& b) {
    const std::string method = "same-span";
    if (a == b) return SolveOutcome::solved({}, method);
    if (a.size() != b.size() || a.empty()) return SolveOutcome::unknown("coin counts differ", method);
    auto sa = span(a);
    if (sa != span(b)) return SolveOutcome::unknown("spans differ", method);
    auto pair = extra_pair(a, [&](const Configuration& rest) { return span(rest) == sa; });
    if (!pair) return SolveOutcome::unknown("no two extra coins", method);
    auto reds = find_redundant_coins(b, 2);
    if (!reds) return SolveOutcome::unknown("no two redundant coins", method);
    return two_extra_pipeline(a, b, pair->first, pair->second, *reds, method, [](GameState&, ActionSequence&) {});
}

SolveOutcome solve_two_extra(const Configuration& a, const Configuration& b) {
    const std::string method = "two-extra";
    if (a == b) return SolveOutcome::solved({}, method);
    if (a.size() != b.size() || a.empty()) return SolveOutcome::unknown("coin counts differ", method);
    auto sb_cells = span(b);
    auto sb = span_components(b);
    auto pair = extra_pair(a, [&](const Configuration& rest) {
        return sb_cells.is_subset_of(span(rest)) && one_each(rest, sb);
    });
    if (!pair) return SolveOutcome::unknown("no two extra coins with one target component per start component", method);
    auto reds = find_redundant_coins(b, 2);
    if (!reds) return SolveOutcome::unknown("no two redundant coins", method);
    auto a0 = a.without(pair->first).without(pair->second);
    auto comps = span_components(a0).rectangles;
    return two_extra_pipeline(a, b, pair->first, pair->second, *reds, method, [&](GameState& cur, ActionSequence& raw) {
        for (const auto& ra : comps) {
            std::optional<Rectangle> rb;
            for (const auto& r : sb.rectangles)
                if (ra.contains(r)) rb = r;
            if (!rb) {
                for (auto p : set_intersection(cur.board, ra)) run(cur, raw, {Action::pick_up(p)});
            } else if (*rb != ra) {
                run(cur, raw, shrink(cur, ra, *rb).forward);
            }
        }
    });
}

SolveOutcome solve_sweep(const Configuration& a, const Configuration& b) {
    const std::string method = "sweep";
    if (a == b) return SolveOutcome::solved({}, method);
    if (a.size() != b.size() || a.empty()) return SolveOutcome::unknown("coin counts differ", method);
    auto sa = span_components(a);
    if (sa.size() != 1) return SolveOutcome::unknown("start span is not one rectangle", method);
    const Rectangle r = sa.rectangles[0];
    for (auto p : b)
        if (!r.contains(p)) return SolveOutcome::unknown("target leaves the start rectangle", method);
    auto sb = span_components(b);
    for (const auto& rb : sb.rectangles)
        if (!r.contains(rb)) return SolveOutcome::unknown("target span leaves the start rectangle", method);
    const int coins = static_cast<int>(a.size());
    const int min_a = min_cardinality(r), min_b = min_cardinality(sb);
    if (!sweep_inequalities(r.m, r.n, coins, min_a, min_b))
        return SolveOutcome::unknown("too few coins for the sweep", method);
    auto sa_cells = span(a);
    auto pair = extra_pair(a, [&](const Configuration& rest) { return span(rest) == sa_cells; });
    if (!pair) return SolveOutcome::unknown("no two extra coins", method);
    auto reds = find_redundant_coins(b, 2);
    if (!reds) return SolveOutcome::unknown("no two redundant coins", method);
    auto goal = canonical_config(b);
    return two_extra_pipeline(a, b, pair->first, pair->second, *reds, method, [&](GameState& cur, ActionSequence& raw) {
        run(cur, raw, sweep_build(cur, r, goal));
    });
}

std::optional<Method> parse_method(const std::string& s) {
    if (s == "auto") return Method::Auto;
    if (s == "same-span") return Method::SameSpan;
    if (s == "two-extra") return Method::TwoExtra;
    if (s == "sweep") return Method::Sweep;
    if (s == "oracle") return Method::Oracle;
    return std::nullopt;
}

namespace {

SolveOutcome guarded(const std::function<SolveOutcome()>& f, const std::string& method) {
    try {
        return f();
    } catch (const Error& e) {
        return SolveOutcome::unknown(e.what(), method);
    }
}

SolveOutcome by_oracle(const Configuration& a, const Configuration& b, const SearchLimits& limits) {
    const std::string method = "oracle";
    OracleResult r;
    try {
        r = oracle_search(a, b, limits);
    } catch (const Error& e) {
        return SolveOutcome::unknown(e.what(), method);
    }
    if (r.verdict == OracleVerdict::Reachable) return SolveOutcome::solved(r.moves, method);
    if (r.verdict == OracleVerdict::Unreachable) {
        Certificate c;
        c.kind = CertificateKind::OracleExhaustive;
        c.states = r.states;
        c.coins = static_cast<int>(a.size());
        return SolveOutcome::unsolvable(c, method);
    }
    return SolveOutcome::unknown("oracle exhausted after " + std::to_string(r.states) + " states", method);
}

} // namespace

SolveOutcome solve(const Configuration& a, const Configuration& b, const SolveOptions& options) {
    switch (options.method) {
    case Method::SameSpan: return guarded([&] { return solve_same_span(a, b); }, "same-span");
    case Method::TwoExtra: return guarded([&] { return solve_two_extra(a, b); }, "two-extra");
    case Method::Sweep: return guarded([&] { return solve_sweep(a, b); }, "sweep");
    case Method::Oracle: return by_oracle(a, b, options.oracle_limits);
    case Method::Auto: break;
    }
    if (a == b) return SolveOutcome::solved({}, "equal");
    auto blocked = necessary_conditions(a, b);
    if (!blocked.empty()) return SolveOutcome::unsolvable(blocked.front(), "necessary");
    for (auto c : b)
        if (all_isolated(b.without(c)))
            for (auto [from, to] : legal_moves(a))
                if (a.without(from).with(to) == b) return SolveOutcome::solved({Action::move(from, to)}, "single-move");

    std::vector<std::string> notes;
    auto keep = [&](const SolveOutcome& o) {
        if (o.verdict != Verdict::Unknown) return true;
        notes.push_back(o.method + ": " + o.reason);
        return false;
    };
    if (is_minimum_plus_one(a) && is_minimum_plus_one(b)) {
        auto o = guarded([&] { return solve_min_plus1(a, b); }, "min-plus-one");
        if (keep(o)) return o;
    }
    if (auto o = guarded([&] { return solve_two_extra(a, b); }, "two-extra"); keep(o)) return o;
    if (auto o = guarded([&] { return solve_sweep(a, b); }, "sweep"); keep(o)) return o;
    if (auto cert = prove_unsolvable_by_split(a, b)) return SolveOutcome::unsolvable(*cert, "split");
    if (options.use_oracle)
        if (auto o = by_oracle(a, b, options.oracle_limits); keep(o)) return o;
    std::string reason;
    for (const auto& n : notes) reason += (reason.empty() ? "" : "; ") + n;
    return SolveOutcome::unknown(reason, "auto");
}

} // namespace coinflow
