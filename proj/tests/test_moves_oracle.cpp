#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coinflow/canonical.hpp"
#include "coinflow/oracle.hpp"
#include "coinflow/puzzle_io.hpp"
#include "coinflow/span.hpp"
#include "support.hpp"

#include <fstream>
#include <sstream>

using namespace coinflow;
using coinflow::testing::naive_distance;

namespace {

PuzzleFile fixture(const std::string& name) {
    std::ifstream in(std::string(COINFLOW_FIXTURES) + "/" + name);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return parse_puzzle(s.str());
}

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

} // namespace

TEST_CASE("legal destination ignores the mover") {
    CHECK(is_legal_destination({{0, 0}, {2, 0}, {1, 1}}, Position{1, 1}, {1, 0}));
    CHECK_FALSE(is_legal_destination({{0, 0}, {2, 0}}, std::nullopt, {3, 0}));
    // c at (3,1); (3,2) touches c and one other coin only
    Configuration c{{0, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}};
    Position mover{3, 1};
    CHECK(is_legal_destination(c, mover, {1, 1}));
    CHECK(is_legal_destination(c, mover, {0, 2}));
    CHECK_FALSE(is_legal_destination(c, mover, {3, 2}));
    auto moves = legal_moves(c);
    auto has = [&](Position from, Position to) {
        return std::find(moves.begin(), moves.end(), std::pair{from, to}) != moves.end();
    };
    CHECK(has(mover, {1, 1}));
    CHECK(has(mover, {0, 2}));
    CHECK_FALSE(has(mover, {3, 2}));
}

TEST_CASE("legal moves") {
    CHECK(legal_moves({{0, 0}, {5, 0}, {0, 5}}).empty());
    auto moves = legal_moves({{0, 0}, {1, 0}, {0, 1}});
    CHECK(std::find(moves.begin(), moves.end(), std::pair{Position{0, 0}, Position{1, 1}}) != moves.end());
}

TEST_CASE("legal moves match a brute-force scan") {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto c = coinflow::testing::random_config(rng, 5, 5, 2 + rng() % 8);
        std::set<std::pair<Position, Position>> expected;
        for (auto from : c)
            for (int x = -1; x <= 5; ++x)
                for (int y = -1; y <= 5; ++y) {
                    Position p{x, y};
                    if (c.contains(p)) continue;
                    int k = 0;
                    for (auto q : neighbors(p)) k += (q != from && c.contains(q)) ? 1 : 0;
                    if (k >= 2) expected.insert({from, p});
                }
        auto got = legal_moves(c);
        CHECK(std::set<std::pair<Position, Position>>(got.begin(), got.end()) == expected);
    }
}

TEST_CASE("apply") {
    auto s = apply(GameState{{{0, 0}, {2, 0}, {1, 1}}, 0}, Action::move({1, 1}, {1, 0}));
    CHECK(s == GameState{{{0, 0}, {2, 0}, {1, 0}}, 0});
    auto picked = apply(GameState{{{0, 0}, {7, 7}}, 0}, Action::pick_up({7, 7}));
    CHECK(picked == GameState{{{0, 0}}, 1});
    CHECK(code_of([] { apply(GameState{{{0, 0}}, 1}, Action::drop({1, 0})); }) == "drop_violates_2adjacency");
    CHECK(code_of([] { apply(GameState{{{0, 0}}, 0}, Action::pick_up({1, 0})); }) == "not_occupied");
    CHECK(code_of([] { apply(GameState{{{0, 0}, {1, 1}}, 0}, Action::drop({1, 0})); }) == "empty_hand");
    CHECK(code_of([] { apply(GameState{{{0, 0}, {2, 0}, {5, 5}}, 0}, Action::move({5, 5}, {3, 0})); }) ==
          "illegal_move");
}

TEST_CASE("validate sequence") {
    GameState s{{{0, 0}, {2, 0}}, 0};
    CHECK(validate_sequence(s, {}) == s);
    ActionSequence bad{Action::pick_up({0, 0}), Action::pick_up({2, 0}), Action::drop({9, 9})};
    try {
        validate_sequence(s, bad);
        FAIL("expected an error");
    } catch (const Error& e) {
        REQUIRE(e.index());
        CHECK(*e.index() == 2);
    }
    CHECK(code_of([&] { validate_sequence(s, {}, GameState{{{0, 0}}, 1}); }) == "final_mismatch");
}

TEST_CASE("moves only") {
    Configuration c{{0, 0}, {2, 0}, {1, 1}};
    ActionSequence pure{Action::move({1, 1}, {1, 0})};
    CHECK(moves_only(GameState{c, 0}, pure) == pure);
    ActionSequence pair{Action::pick_up({1, 1}), Action::drop({1, 0})};
    CHECK(moves_only(GameState{c, 0}, pair) == pure);
    CHECK(code_of([&] { moves_only(GameState{c, 0}, {Action::pick_up({1, 1})}); }) == "unbalanced_hand");
}

TEST_CASE("canonicalization output rewrites into pure moves") {
    // start: the other 'L' on 4x4 plus two loose coins; pick both, canonicalize, drop back
    Rectangle r(0, 0, 4, 4);
    auto mirror = l_cells(mirrored(canonical_lshape(r)));
    auto a = mirror.with({1, 1}).with({2, 2});
    GameState s{a, 0};
    ActionSequence raw{Action::pick_up({1, 1}), Action::pick_up({2, 2})};
    auto mid = validate_sequence(s, raw);
    auto canon = canonicalize(mid);
    raw.insert(raw.end(), canon.forward.begin(), canon.forward.end());
    auto end = validate_sequence(s, raw);
    CHECK(end.board == canonical_L(r));
    // give both coins back next to the 'L'
    auto l = end.board;
    std::vector<Position> spots;
    for (auto p : r.cells())
        if (!l.contains(p) && l.occupied_neighbors(p) >= 2) spots.push_back(p);
    REQUIRE(spots.size() >= 2);
    raw.push_back(Action::drop(spots[0]));
    raw.push_back(Action::drop(spots[1]));
    auto final_state = validate_sequence(s, raw);
    CHECK(final_state.hand == 0);
    auto moves = moves_only(s, raw);
    for (const auto& m : moves) CHECK(m.kind == ActionKind::Move);
    CHECK(validate_sequence(s, moves) == final_state);
}

TEST_CASE("inverse undoes reversible actions") {
    const GameState start{{{0, 0}, {1, 1}, {2, 2}, {0, 2}}, 2};
    auto tr = canonicalize(start);
    auto there = validate_sequence(start, tr.forward);
    CHECK(validate_sequence(there, inverse(tr.forward)) == start);
}

TEST_CASE("reachable set") {
    auto iso = reachable_set({{0, 0}, {5, 0}, {0, 5}});
    CHECK_FALSE(iso.exhausted);
    CHECK(iso.states.size() == 1);

    // minimum+1 on an even 4x2 span: full-span states are single-move images of the start
    Configuration a{{0, 1}, {2, 1}, {3, 0}, {0, 0}};
    REQUIRE(is_minimum_plus_one(a));
    const auto full = span(a);
    auto got = reachable_set(a);
    CHECK_FALSE(got.exhausted);
    std::set<Configuration> expected{a};
    for (auto [from, to] : legal_moves(a)) {
        auto c = a.without(from).with(to);
        if (span(c) == full) expected.insert(c);
    }
    std::set<Configuration> states;
    for (const auto& c : got.states) {
        CHECK(span(c).is_subset_of(full));
        if (span(c) == full) states.insert(c);
    }
    CHECK(states == expected);
    CHECK(got.states.size() > states.size());

    auto p = fixture("refined_split.txt");
    auto all = reachable_set(p.start);
    CHECK_FALSE(all.exhausted);
    CHECK(all.states.size() <= 5005);
    CHECK(std::find(all.states.begin(), all.states.end(), p.target) == all.states.end());
}

TEST_CASE("state budget") {
    SearchLimits tight{10, std::nullopt};
    auto r = reachable_set(canonical_L(Rectangle(0, 0, 4, 4)).with({1, 1}).with({2, 2}), tight);
    CHECK(r.exhausted);
    auto p = fixture("two_rows_twelve.txt");
    CHECK(oracle_search(p.start, p.target, tight).verdict == OracleVerdict::Exhausted);
    CHECK(code_of([&] { shortest_solution(p.start, p.target, tight); }) == "exhausted");
}

TEST_CASE("shortest solutions") {
    Configuration a{{0, 0}, {2, 0}};
    auto same = shortest_solution(a, a);
    REQUIRE(same);
    CHECK(same->empty());

    for (const auto& [name, length] : std::vector<std::pair<std::string, int>>{
             {"four_moves.txt", 4}, {"weak_target_solvable.txt", 4}, {"two_rows_twelve.txt", 12}}) {
        CAPTURE(name);
        auto p = fixture(name);
        auto seq = shortest_solution(p.start, p.target);
        REQUIRE(seq);
        CHECK(static_cast<int>(seq->size()) == length);
        CHECK(validate_sequence(GameState{p.start, 0}, *seq, GameState{p.target, 0}).hand == 0);
        if (length <= 4) CHECK(naive_distance(p.start, p.target) == length);
    }
    for (auto name : {"refined_split.txt", "weak_target_unsolvable.txt"}) {
        CAPTURE(name);
        auto p = fixture(name);
        CHECK(oracle_search(p.start, p.target).verdict == OracleVerdict::Unreachable);
        CHECK(naive_distance(p.start, p.target) == -1);
    }
}

TEST_CASE("oracle distances agree with the reference search") {
    std::mt19937 rng(17);
    for (int i = 0; i < 60; ++i) {
        auto a = coinflow::testing::random_config(rng, 3, 3, 3 + rng() % 3);
        auto b = coinflow::testing::random_config(rng, 3, 3, a.size());
        auto r = oracle_search(a, b);
        int d = naive_distance(a, b);
        if (r.verdict == OracleVerdict::Reachable) CHECK(static_cast<int>(r.moves.size()) == d);
        if (r.verdict == OracleVerdict::Unreachable) CHECK(d == -1);
    }
}

TEST_CASE("odd flip with one coin in hand") {
    // 'L' down the left and along the bottom of 3x2, plus one coin
    Configuration a{{0, 1}, {1, 0}, {2, 0}, {0, 0}};
    Configuration b{{0, 1}, {1, 1}, {2, 0}, {2, 1}};
    auto seq = shortest_solution(a, b);
    REQUIRE(seq);
    CHECK(seq->size() > 0);
    validate_sequence(GameState{a, 0}, *seq, GameState{b, 0});
}

TEST_CASE("poking closure") {
    auto pair = reachable_poking({{0, 0}, {1, 0}});
    CHECK(pair.states.size() == 1);
    Configuration m{{0, 1}, {1, 0}, {2, 0}};
    REQUIRE(is_minimum(m));
    auto closure = reachable_poking(m);
    for (const auto& other : closure.states) {
        auto back = reachable_poking(other);
        CHECK(std::find(back.states.begin(), back.states.end(), m) != back.states.end());
    }
    CHECK(code_of([] { reachable_poking({{0, 0}, {2, 0}}); }) == "precondition_violated");
}
