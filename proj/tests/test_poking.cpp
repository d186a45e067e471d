#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coinflow/canonical.hpp"
#include "coinflow/oracle.hpp"
#include "coinflow/poking.hpp"
#include "coinflow/span.hpp"
#include "support.hpp"

#include <functional>

using namespace coinflow;

namespace {

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

int adjacent_pairs(const Configuration& c) {
    int k = 0;
    for (auto p : c)
        for (auto q : c)
            if (p < q && dist(p, q) == 1) ++k;
    return k;
}

Configuration replay(Configuration m, const std::vector<Poke>& pokes) {
    for (const auto& p : pokes) m = apply_poke(m, p);
    return m;
}

// 3x2 odd 'L' bent at the bottom-left, its mirror, and a quarter turn
const Configuration l_bl{{0, 1}, {0, 0}, {2, 0}};
const Configuration l_tr{{0, 1}, {2, 1}, {2, 0}};
const Configuration l_tl{{0, 0}, {0, 1}, {2, 1}};

} // namespace

TEST_CASE("legal pokes") {
    CHECK(legal_pokes({{0, 0}, {1, 0}}).empty());
    REQUIRE(is_poking_state(l_bl));
    auto pokes = legal_pokes(l_bl);
    CHECK_FALSE(pokes.empty());
    for (const auto& [c, p] : pokes) {
        CHECK(dist(c, p) == 1);
        CHECK(adjacent_pairs(l_bl) == 1);
        CHECK((c == Position{0, 1} || c == Position{0, 0}));
        auto next = apply_poke(l_bl, {c, p});
        CHECK(is_poking_state(next));
        CHECK(span(next) == span(l_bl));
    }
    CHECK_FALSE(is_poking_state({{0, 0}, {2, 0}}));
}

TEST_CASE("pokes reverse and keep the invariant") {
    std::mt19937 rng(41);
    int done = 0;
    for (auto r : {Rectangle(0, 0, 3, 2), Rectangle(0, 0, 4, 3), Rectangle(0, 0, 5, 4), Rectangle(0, 0, 2, 5)}) {
        auto m = canonical_L(r);
        for (int i = 0; i < 250; ++i) {
            auto pokes = legal_pokes(m);
            REQUIRE_FALSE(pokes.empty());
            auto poke = pokes[rng() % pokes.size()];
            auto next = apply_poke(m, poke);
            CHECK(next.size() == m.size());
            CHECK(span(next) == span(m));
            CHECK(is_poking_state(next));
            CHECK(apply_poke(next, {poke.second, poke.first}) == m);
            m = next;
            ++done;
        }
    }
    CHECK(done == 1000);
    CHECK(code_of([] { apply_poke(l_bl, {{2, 0}, {2, 1}}); }) == "illegal_poke");
}

TEST_CASE("chain decomposition") {
    Rectangle r(0, 0, 4, 3);
    auto d = chain_decompose(canonical_L(r));
    REQUIRE(d);
    auto [e1, e2] = d->endpoints();
    CHECK(Configuration{e1, e2} == Configuration{{0, 2}, {3, 0}});
    const auto& c = d->order;
    auto i0 = d->pair_index;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) CHECK(dist(c[i], c[i + 1]) == (i == i0 ? 1 : 2));
    for (std::size_t i = 0; i < i0; ++i) CHECK(dist(c[i0], c[i]) == 2 * static_cast<int>(i0 - i));

    // a plus-shaped minimum tree with one pair is no chain
    Configuration plus{{0, 2}, {2, 2}, {4, 2}, {5, 2}, {2, 0}, {2, 4}};
    REQUIRE(is_minimum(plus));
    REQUIRE(adjacent_pairs(plus) == 1);
    CHECK_FALSE(chain_decompose(plus));
    CHECK(code_of([&] { chain_poking_decide(plus, plus); }) == "not_a_chain");
}

TEST_CASE("chain decisions") {
    CHECK(chain_poking_decide(l_bl, l_bl));
    CHECK(chain_poking_decide(l_bl, l_tr));
    CHECK_FALSE(chain_poking_decide(l_bl, l_tl));
    CHECK(chain_poking_solve(l_bl, l_bl).empty());
    CHECK(code_of([] { chain_poking_solve(l_bl, l_tl); }) == "not_reachable");

    auto pokes = chain_poking_solve(l_bl, l_tr);
    CHECK(replay(l_bl, pokes) == l_tr);
    auto closure = reachable_poking(l_bl);
    CHECK(std::find(closure.states.begin(), closure.states.end(), l_tr) != closure.states.end());
    CHECK(std::find(closure.states.begin(), closure.states.end(), l_tl) == closure.states.end());

    auto pair = chain_poking_solve({{0, 0}, {1, 0}}, {{0, 0}, {1, 0}});
    CHECK(pair.empty());
}

TEST_CASE("pokes become reversible actions with one coin in hand") {
    auto pokes = chain_poking_solve(l_bl, l_tr);
    auto actions = pokes_to_actions(pokes);
    CHECK(actions.size() == 2 * pokes.size());
    GameState s{l_bl, 1};
    auto end = validate_sequence(s, actions);
    CHECK(end == GameState{l_tr, 1});
    CHECK(validate_sequence(end, inverse(actions)) == s);
}

TEST_CASE("chain solver matches the poking closure on odd rectangles") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            if ((m + n) % 2 == 0 || m + n < 3) continue;
            Rectangle r(0, 0, m, n);
            CAPTURE(m);
            CAPTURE(n);
            for (auto corner : {Corner::BL, Corner::TL}) {
                LShape l{r, corner, 0};
                auto start = l_cells(l);
                auto closure = reachable_poking(start);
                REQUIRE_FALSE(closure.exhausted);
                auto ends = chain_decompose(start)->endpoints();
                for (const auto& other : closure.states) {
                    auto d = chain_decompose(other);
                    REQUIRE(d);
                    auto e = d->endpoints();
                    CHECK(Configuration{e.first, e.second} == Configuration{ends.first, ends.second});
                    CHECK(chain_poking_decide(start, other));
                    CHECK(replay(start, chain_poking_solve(start, other)) == other);
                }
            }
        }
}

TEST_CASE("minimum+1 examples") {
    // odd 'L' flip with one spare coin: solvable
    Configuration flip_a = l_bl.with({1, 0});
    Configuration flip_b = l_tr.with({1, 1});
    REQUIRE(is_minimum_plus_one(flip_a));
    REQUIRE(is_minimum_plus_one(flip_b));
    auto solved = solve_min_plus1(flip_a, flip_b);
    REQUIRE(solved.verdict == Verdict::Solved);
    validate_sequence(GameState{flip_a, 0}, solved.moves, GameState{flip_b, 0});

    // quarter turn: unsolvable
    Configuration rot_b = l_tl.with({1, 1});
    REQUIRE(is_minimum_plus_one(rot_b));
    CHECK(solve_min_plus1(flip_a, rot_b).verdict == Verdict::Unsolvable);
    CHECK(oracle_search(flip_a, rot_b).verdict == OracleVerdict::Unreachable);

    // even 3x3, no single move between them
    Configuration even_a{{0, 2}, {0, 0}, {2, 0}, {1, 0}};
    Configuration even_b{{0, 0}, {2, 0}, {0, 2}, {2, 2}};
    REQUIRE(is_minimum_plus_one(even_a));
    REQUIRE(is_minimum_plus_one(even_b));
    CHECK(solve_min_plus1(even_a, even_b).verdict == Verdict::Unsolvable);
    CHECK(oracle_search(even_a, even_b).verdict == OracleVerdict::Unreachable);

    CHECK(solve_min_plus1(l_bl, l_tr).verdict == Verdict::Unknown);
}

TEST_CASE("minimum+1 verdicts agree with the oracle on 4x3") {
    Rectangle r(0, 0, 4, 3);
    std::vector<Configuration> plus_one;
    auto cells = r.cells();
    int k = min_cardinality(r) + 1;
    std::function<void(std::size_t, Configuration)> pick = [&](std::size_t i, Configuration c) {
        if (static_cast<int>(c.size()) == k) {
            if (span(c) == Configuration(cells) && is_minimum_plus_one(c)) plus_one.push_back(c);
            return;
        }
        if (i == cells.size()) return;
        pick(i + 1, c.with(cells[i]));
        pick(i + 1, c);
    };
    pick(0, {});
    REQUIRE(plus_one.size() > 10);
    std::mt19937 rng(2);
    for (int i = 0; i < 120; ++i) {
        const auto& a = plus_one[rng() % plus_one.size()];
        const auto& b = plus_one[rng() % plus_one.size()];
        auto o = solve_min_plus1(a, b);
        auto r2 = oracle_search(a, b);
        REQUIRE(o.verdict != Verdict::Unknown);
        CHECK((o.verdict == Verdict::Solved) == (r2.verdict == OracleVerdict::Reachable));
        if (o.verdict == Verdict::Solved) validate_sequence(GameState{a, 0}, o.moves, GameState{b, 0});
    }
}

TEST_CASE("span-keeping moves chain through the last placed coin") {
    // every sequence of up to four moves that keeps the span and never moves
    // the same coin twice in a row
    int sequences = 0;
    for (auto r : {Rectangle(0, 0, 3, 2), Rectangle(0, 0, 4, 3), Rectangle(0, 0, 3, 4)}) {
        auto l = canonical_L(r);
        auto full = span(l);
        for (auto p : r.cells()) {
            if (l.contains(p)) continue;
            auto a = l.with(p);
            if (!is_minimum_plus_one(a)) continue;
            std::function<void(const Configuration&, std::optional<Position>, int)> walk =
                [&](const Configuration& c, std::optional<Position> last, int depth) {
                    if (depth == 4) return;
                    for (auto [from, to] : legal_moves(c)) {
                        if (last && from == *last) continue;
                        auto next = c.without(from).with(to);
                        if (span(next) != full) continue;
                        if (last) CHECK(dist(from, *last) == 1);
                        ++sequences;
                        walk(next, to, depth + 1);
                    }
                };
            walk(a, std::nullopt, 0);
        }
    }
    CHECK(sequences > 0);
}
