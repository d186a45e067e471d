#include "coinflow/canonical.hpp"

#include "coinflow/poking.hpp"
#include "coinflow/rewrite.hpp"
#include "coinflow/span.hpp"

namespace coinflow {

std::string to_string(Corner c) {
    switch (c) {
    case Corner::BL: return "BL";
    case Corner::TR: return "TR";
    case Corner::TL: return "TL";
    case Corner::BR: return "BR";
    }
    return "?";
}

std::vector<Position> l_path(const Rectangle& r, Corner corner) {
    std::vector<Position> out;
    switch (corner) {
    case Corner::BL:
        for (int y = r.y1(); y >= r.y0; --y) out.push_back({r.x0, y});
        for (int x = r.x0 + 1; x <= r.x1(); ++x) out.push_back({x, r.y0});
        break;
    case Corner::TR:
        for (int x = r.x0; x <= r.x1(); ++x) out.push_back({x, r.y1()});
        for (int y = r.y1() - 1; y >= r.y0; --y) out.push_back({r.x1(), y});
        break;
    case Corner::TL:
        for (int y = r.y0; y <= r.y1(); ++y) out.push_back({r.x0, y});
        for (int x = r.x0 + 1; x <= r.x1(); ++x) out.push_back({x, r.y1()});
        break;
    case Corner::BR:
        for (int x = r.x0; x <= r.x1(); ++x) out.push_back({x, r.y0});
        for (int y = r.y0 + 1; y <= r.y1(); ++y) out.push_back({r.x1(), y});
        break;
    }
    return out;
}

int max_pair_index(const Rectangle& r) { return (r.m + r.n - 3) / 2; }

Configuration l_cells(const LShape& l) {
    auto path = l_path(l.rect, l.corner);
    std::vector<Position> out;
    const int s = static_cast<int>(path.size()) - 1;
    if (l.odd() && (l.pair < 0 || l.pair > max_pair_index(l.rect)))
        throw Error("invalid_lshape", "pair index " + std::to_string(l.pair));
    for (int k = 0; k <= s; ++k) {
        bool on = l.odd() ? (k % 2 == 0 ? k <= 2 * l.pair : k >= 2 * l.pair + 1) : k % 2 == 0;
        if (on) out.push_back(path[k]);
    }
    return Configuration(std::move(out));
}

LShape canonical_lshape(const Rectangle& r) {
    LShape l{r, Corner::BL, -1};
    if (l.odd()) l.pair = r.n % 2 == 0 ? 0 : max_pair_index(r);
    return l;
}

Configuration canonical_L(const Rectangle& r) { return l_cells(canonical_lshape(r)); }

Configuration canonical_config(const Configuration& c) {
    Configuration out;
    for (const auto& r : span_components(c).rectangles) out = set_union(out, canonical_L(r));
    return out;
}

std::optional<LShape> identify_L(const Configuration& c, const Rectangle& r) {
    auto sub = set_intersection(c, r);
    if (static_cast<int>(sub.size()) != min_cardinality(r)) return std::nullopt;
    for (auto corner : {Corner::BL, Corner::TR, Corner::TL, Corner::BR}) {
        LShape l{r, corner, -1};
        int last = l.odd() ? max_pair_index(r) : -1;
        for (int j = l.odd() ? 0 : -1; j <= last; ++j) {
            l.pair = j;
            if (l_cells(l) == sub) return l;
        }
    }
    return std::nullopt;
}

LShape mirrored(const LShape& l) {
    LShape out = l;
    switch (l.corner) {
    case Corner::BL: out.corner = Corner::TR; break;
    case Corner::TR: out.corner = Corner::BL; break;
    case Corner::TL: out.corner = Corner::BR; break;
    case Corner::BR: out.corner = Corner::TL; break;
    }
    return out;
}

namespace {

// Applies seq to the running state and appends it.
void run(GameState& state, ActionSequence& out, const ActionSequence& seq) {
    state = validate_sequence(state, seq);
    out.insert(out.end(), seq.begin(), seq.end());
}

void require_on_board(const GameState& state, const LShape& l) {
    if (!l_cells(l).is_subset_of(state.board)) throw Error("not_on_board", "'L' " + to_string(l.rect) + " missing");
}

ChainFrame frame_for(const LShape& l) {
    bool down = l.corner == Corner::BL || l.corner == Corner::TR;
    return ChainFrame{down ? l.rect.top_left() : l.rect.bottom_left(), down, l.rect.m - 1, l.rect.n - 1};
}

Rectangle bbox(Position p, Position q) {
    return Rectangle(std::min(p.x, q.x), std::min(p.y, q.y), std::abs(p.x - q.x) + 1, std::abs(p.y - q.y) + 1);
}

std::vector<Position> clipped_window(const Rectangle& box, int margin, const Rectangle& clip) {
    std::vector<Position> out;
    for (int x = box.x0 - margin; x <= box.x1() + margin; ++x)
        for (int y = box.y0 - margin; y <= box.y1() + margin; ++y)
            if (clip.contains(Position{x, y})) out.push_back({x, y});
    return out;
}

// Replaces coin k of an even chain by its bent position through a small
// windowed search.
std::optional<ActionSequence> bend(const GameState& state, const ChainFrame& f, const Rectangle& rect,
                                   const ChainState& cur, int k, const ChainState& next) {
    auto world = [&](const ChainState& s, int i) {
        int t = chain_t(s, i);
        return f.to_world({s.a[i], t - s.a[i]});
    };
    Rectangle box = bbox(world(cur, k - 1), world(cur, k + 1));
    for (int margin : {0, 1}) {
        auto window = clipped_window(box, margin, rect);
        Configuration goal;
        for (auto p : window)
            if (state.board.contains(p)) goal.insert(p);
        goal.erase(world(cur, k));
        goal.insert(world(next, k));
        if (auto seq = local_rewrite(state.board, state.hand, window, goal, {20'000, 2, true})) return seq;
    }
    return std::nullopt;
}

// Bends an even chain one coin at a time until it matches goal.
void bend_chain(GameState& state, ActionSequence& out, const ChainFrame& f, const Rectangle& rect, ChainState cur,
                const ChainState& goal) {
    const int n = static_cast<int>(cur.a.size());
    while (!(cur == goal)) {
        bool moved = false;
        for (int k = 1; k + 1 < n && !moved; ++k) {
            if (cur.a[k] == goal.a[k]) continue;
            ChainState next = cur;
            next.a[k] += goal.a[k] > cur.a[k] ? 1 : -1;
            if (!chain_valid(f, next)) continue;
            if (auto seq = bend(state, f, rect, cur, k, next)) {
                run(state, out, *seq);
                cur = next;
                moved = true;
            }
        }
        if (!moved) throw Error("flip_failed", "no bend available on " + to_string(rect));
    }
}

ChainState extreme_chain(const ChainFrame& f, int n, int j, bool high) {
    ChainState s;
    s.j = j;
    for (int k = 0; k < n; ++k) {
        int t = chain_t(s, k);
        s.a.push_back(high ? std::min(f.W, t) : std::max(0, t - f.H));
    }
    return s;
}

} // namespace

SubroutineTrace leapfrog(const GameState& state, const LShape& l, int target_pair) {
    if (!l.odd()) throw Error("not_odd", "leapfrog needs an odd 'L'");
    if (target_pair < 0 || target_pair > max_pair_index(l.rect))
        throw Error("invalid_lshape", "pair index " + std::to_string(target_pair));
    require_on_board(state, l);
    SubroutineTrace tr{"leapfrog", {}, ActionSequence{}, state, l};
    tr.shape->pair = target_pair;
    if (target_pair == l.pair) return tr;
    if (state.hand < 1) throw Error("insufficient_hand", "leapfrog needs one coin in hand");
    auto path = l_path(l.rect, l.corner);
    GameState cur = state;
    for (int j = l.pair; j != target_pair;) {
        ActionSequence step;
        if (target_pair > j) {
            step = {Action::drop(path[2 * j + 2]), Action::pick_up(path[2 * j + 1])};
            ++j;
        } else {
            step = {Action::drop(path[2 * j - 1]), Action::pick_up(path[2 * j])};
            --j;
        }
        run(cur, tr.forward, step);
    }
    tr.backward = inverse(tr.forward);
    tr.end = cur;
    return tr;
}

SubroutineTrace flip_L(const GameState& state, const LShape& l) {
    require_on_board(state, l);
    LShape target = mirrored(l);
    SubroutineTrace tr{l.odd() ? "flip_odd" : "flip_even", {}, ActionSequence{}, state, target};
    auto from = l_cells(l);
    auto to = l_cells(target);
    if (from == to) return tr;
    GameState cur = state;
    if (l.odd()) {
        if (state.hand < 1) throw Error("insufficient_hand", "odd flip needs one coin in hand");
        run(cur, tr.forward, pokes_to_actions(chain_poking_solve(from, to)));
    } else {
        if (state.hand < 2) throw Error("insufficient_hand", "even flip needs two coins in hand");
        auto f = frame_for(l);
        int n = static_cast<int>(from.size());
        bool high = l.corner == Corner::BL || l.corner == Corner::TL;
        bend_chain(cur, tr.forward, f, l.rect, extreme_chain(f, n, -1, !high), extreme_chain(f, n, -1, high));
    }
    if (set_intersection(cur.board, l.rect) != set_union(set_difference(set_intersection(state.board, l.rect), from), to))
        throw Error("flip_failed", "unexpected board after flip");
    tr.backward = inverse(tr.forward);
    tr.end = cur;
    return tr;
}

SubroutineTrace trim_L(const GameState& state, const LShape& l, Side side, int amount) {
    require_on_board(state, l);
    SubroutineTrace tr{"trim", {}, std::nullopt, state, l};
    if (amount == 0) return tr;
    bool horizontal = side == Side::Left || side == Side::Right;
    if (amount < 0 || amount >= (horizontal ? l.rect.m : l.rect.n))
        throw Error("amount_too_large", std::to_string(amount) + " on " + to_string(l.rect));
    if (state.hand < 2) throw Error("insufficient_hand", "trimming needs two coins in hand");

    auto ends = [](Corner c) -> std::pair<Side, Side> {  // near, far
        switch (c) {
        case Corner::BL: return {Side::Top, Side::Right};
        case Corner::TR: return {Side::Left, Side::Bottom};
        case Corner::TL: return {Side::Bottom, Side::Right};
        case Corner::BR: return {Side::Left, Side::Top};
        }
        return {Side::Top, Side::Right};
    };
    GameState cur = state;
    LShape shape = l;
    auto [near, far] = ends(shape.corner);
    if (side != near && side != far) {
        auto flip = flip_L(cur, shape);
        run(cur, tr.forward, flip.forward);
        shape = *flip.shape;
        std::tie(near, far) = ends(shape.corner);
    }
    const bool at_far = side == far;
    if (shape.odd()) {
        auto lf = leapfrog(cur, shape, at_far ? max_pair_index(shape.rect) : 0);
        run(cur, tr.forward, lf.forward);
        shape = *lf.shape;
    }
    auto path = l_path(shape.rect, shape.corner);
    const int s = static_cast<int>(path.size()) - 1;
    const int keep_from = at_far ? 0 : amount;
    const int keep_to = at_far ? s - amount : s;
    const Position anchor = path[at_far ? keep_to : keep_from];
    if (!cur.board.contains(anchor)) run(cur, tr.forward, {Action::drop(anchor)});
    ActionSequence picks;
    for (int k = 0; k <= s; ++k)
        if ((k < keep_from || k > keep_to) && cur.board.contains(path[k])) picks.push_back(Action::pick_up(path[k]));
    run(cur, tr.forward, picks);

    Rectangle r = shape.rect;
    switch (side) {
    case Side::Left: r = Rectangle(r.x0 + amount, r.y0, r.m - amount, r.n); break;
    case Side::Right: r = Rectangle(r.x0, r.y0, r.m - amount, r.n); break;
    case Side::Top: r = Rectangle(r.x0, r.y0, r.m, r.n - amount); break;
    case Side::Bottom: r = Rectangle(r.x0, r.y0 + amount, r.m, r.n - amount); break;
    }
    tr.shape = identify_L(cur.board, r);
    if (!tr.shape) throw Error("trim_failed", "no 'L' left on " + to_string(r));
    tr.end = cur;
    return tr;
}

SubroutineTrace shrink(const GameState& state, const Rectangle& from, const Rectangle& to) {
    if (!from.contains(to)) throw Error("amount_too_large", to_string(to) + " not inside " + to_string(from));
    LShape shape = canonical_lshape(from);
    require_on_board(state, shape);
    SubroutineTrace tr{"shrink", {}, std::nullopt, state, shape};
    GameState cur = state;
    auto step = [&](Side side, int amount) {
        if (amount == 0) return;
        auto t = trim_L(cur, shape, side, amount);
        run(cur, tr.forward, t.forward);
        shape = *t.shape;
    };
    step(Side::Right, from.x1() - to.x1());
    step(Side::Top, from.y1() - to.y1());
    step(Side::Left, to.x0 - from.x0);
    step(Side::Bottom, to.y0 - from.y0);
    LShape goal = canonical_lshape(to);
    if (shape.corner != goal.corner) {
        if (l_cells(shape) == l_cells(LShape{shape.rect, goal.corner, shape.pair})) {
            shape.corner = goal.corner;
        } else {
            auto flip = flip_L(cur, shape);
            run(cur, tr.forward, flip.forward);
            shape = *flip.shape;
        }
    }
    if (shape.odd() && shape.pair != goal.pair) {
        auto lf = leapfrog(cur, shape, goal.pair);
        run(cur, tr.forward, lf.forward);
    }
    tr.shape = goal;
    tr.end = cur;
    return tr;
}

namespace {

std::optional<ActionSequence> chain_shortcut(const GameState& state, const Rectangle& r) {
    auto sub = set_intersection(state.board, r);
    auto found = find_chain(sub);
    if (!found || !found->first.down) return std::nullopt;
    auto [f, s] = *found;
    auto goal = canonical_L(r);
    ActionSequence out;
    GameState cur = state;
    if (s.j >= 0) {
        if (cur.hand < 1) return std::nullopt;
        run(cur, out, pokes_to_actions(chain_poking_solve(sub, goal)));
    } else {
        if (cur.hand < 2) return std::nullopt;
        bend_chain(cur, out, f, r, s, extreme_chain(f, static_cast<int>(s.a.size()), -1, false));
    }
    return out;
}

} // namespace

SubroutineTrace canonicalize(const GameState& state) {
    if (state.hand < 2) throw Error("insufficient_hand", "canonicalization needs two coins in hand");
    SubroutineTrace tr{"canonicalize", {}, ActionSequence{}, state, std::nullopt};
    if (state.board.empty()) return tr;
    GameState cur = state;
    for (const auto& r : span_components(state.board).rectangles) {
        auto goal = canonical_L(r);
        if (set_intersection(cur.board, r) == goal) continue;
        std::optional<ActionSequence> seq;
        if (r.area() <= 64) {
            auto window = r.cells();
            seq = local_rewrite(cur.board, cur.hand, window, goal, {300'000, std::min(cur.hand, 2), true});
            if (!seq && cur.hand > 2) seq = local_rewrite(cur.board, cur.hand, window, goal, {2'000'000, cur.hand, true});
        }
        if (!seq) seq = chain_shortcut(cur, r);
        if (!seq) throw Error("canonicalize_failed", "no reversible route to the canonical 'L' on " + to_string(r));
        run(cur, tr.forward, *seq);
    }
    tr.backward = inverse(tr.forward);
    tr.end = cur;
    return tr;
}

} // namespace coinflow
