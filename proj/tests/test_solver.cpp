#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coinflow/canonical.hpp"
#include "coinflow/infeasibility.hpp"
#include "coinflow/oracle.hpp"
#include "coinflow/puzzle_io.hpp"
#include "coinflow/solver.hpp"
#include "coinflow/span.hpp"
#include "support.hpp"

#include <fstream>
#include <sstream>

using namespace coinflow;

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

void check_solved(const Configuration& a, const Configuration& b, const SolveOutcome& o) {
    REQUIRE(o.verdict == Verdict::Solved);
    for (const auto& m : o.moves) CHECK(m.kind == ActionKind::Move);
    CHECK(validate_sequence(GameState{a, 0}, o.moves, GameState{b, 0}).hand == 0);
}

Configuration row(int y, int width) {
    Configuration c;
    for (int x = 0; x < width; ++x) c.insert({x, y});
    return c;
}

const Configuration square_l = canonical_L(Rectangle(0, 0, 4, 4));

} // namespace

TEST_CASE("same span") {
    CHECK(solve_same_span(square_l, square_l).verdict == Verdict::Solved);
    CHECK(solve_same_span(square_l, square_l).moves.empty());

    auto a = square_l.with({1, 1}).with({2, 2});
    auto b = l_cells(mirrored(canonical_lshape(Rectangle(0, 0, 4, 4)))).with({2, 2}).with({1, 3});
    REQUIRE(span(a) == span(b));
    REQUIRE(find_redundant_coins(b, 2));
    auto o = solve_same_span(a, b);
    check_solved(a, b, o);
    CHECK(oracle_search(a, b).verdict == OracleVerdict::Reachable);

    // target with isolated coins only
    Configuration lone{{0, 0}, {3, 0}, {0, 3}, {3, 3}, {1, 1}, {2, 2}};
    CHECK(solve_same_span(a, lone).verdict != Verdict::Solved);
    CHECK(solve(a, {{0, 0}, {2, 0}, {4, 0}, {0, 2}, {2, 2}, {4, 2}}).verdict == Verdict::Unsolvable);
}

TEST_CASE("two extra coins with a shrinking step") {
    // 7x4 'L' plus two spare coins, target packed into the left 4x4
    auto a = canonical_L(Rectangle(0, 0, 7, 4)).with({1, 1}).with({2, 1});
    Configuration b = square_l.with({1, 1}).with({2, 1}).with({1, 2}).with({2, 2});
    REQUIRE(a.size() == b.size());
    REQUIRE(find_extra_coins(a, std::nullopt, 2));
    REQUIRE(find_redundant_coins(b, 2));
    CHECK(solve_same_span(a, b).verdict != Verdict::Solved);
    auto o = solve_two_extra(a, b);
    check_solved(a, b, o);

    // same span: falls into the same-span case
    auto a2 = square_l.with({1, 1}).with({2, 2});
    auto b2 = square_l.with({0, 2}).with({2, 0});
    check_solved(a2, b2, solve_two_extra(a2, b2));
}

TEST_CASE("weak targets") {
    auto good = fixture("weak_target_solvable.txt");
    auto bad = fixture("weak_target_unsolvable.txt");
    for (const auto& p : {good, bad}) {
        CHECK(find_redundant_coins(p.target, 1));
        CHECK_FALSE(find_redundant_coins(p.target, 2));
        CHECK(solve_two_extra(p.start, p.target).verdict != Verdict::Solved);
    }
    auto o = solve(good.start, good.target);
    check_solved(good.start, good.target, o);
    CHECK(o.moves.size() == 4);
    auto no = solve(bad.start, bad.target);
    CHECK(no.verdict == Verdict::Unsolvable);
    REQUIRE(no.certificate);
    CHECK(check_certificate(bad.start, bad.target, *no.certificate));
}

TEST_CASE("sweep hypothesis arithmetic") {
    CHECK(sweep_hypothesis(4, 4, 5, 5));
    CHECK_FALSE(sweep_hypothesis(4, 4, 5, 6));
    CHECK(sweep_hypothesis(1, 1, 3, 1));
    CHECK_FALSE(sweep_hypothesis(1, 1, 1, 0));
    for (int m = 1; m <= 12; ++m)
        for (int n = 1; n <= 12; ++n)
            for (int coins = 1; coins <= 40; ++coins)
                for (int lo = (m + n + 1) / 2, ma = lo; ma <= coins; ++ma)
                    for (int mb = lo; mb <= ma + 4 && mb <= coins; ++mb)
                        if (sweep_condition_iv(coins, ma, mb)) CHECK(sweep_inequalities(m, n, coins, ma, mb));
}

TEST_CASE("sweep build small cases") {
    Rectangle r(0, 0, 4, 4);
    GameState s{square_l, 2};
    auto empty = sweep_build(s, r, {});
    CHECK(validate_sequence(s, empty) == GameState{{}, 2 + 4});

    Rectangle unit(3, 3, 1, 1);
    GameState one{{{3, 3}}, 3};
    CHECK(sweep_build(one, unit, {{3, 3}}).empty());
    CHECK(validate_sequence(one, sweep_build(one, unit, {})) == GameState{{}, 4});

    Configuration c{{0, 0}, {3, 0}, {1, 2}, {3, 3}, {0, 3}};
    GameState k5{square_l, 5};
    auto seq = sweep_build(k5, r, c);
    CHECK(validate_sequence(k5, seq) == GameState{c, 5 + 4 - 5});

    CHECK(code_of([&] { sweep_build(k5, r, c.with({2, 1})); }) == "hypothesis_violated");
}

TEST_CASE("sweep build on random targets") {
    std::mt19937 rng(8);
    int built = 0;
    for (int i = 0; i < 80; ++i) {
        int m = 2 + rng() % 5, n = 2 + rng() % 5;
        int k = 2 + rng() % 4;
        Rectangle r(0, 0, m, n);
        int cap = 0;
        while (sweep_hypothesis(m, n, k, cap + 1)) ++cap;
        if (cap == 0) continue;
        auto c = coinflow::testing::random_config(rng, m, n, 1 + rng() % cap);
        REQUIRE(sweep_hypothesis(m, n, k, c.size()));
        auto l = canonical_L(r);
        GameState s{l, k};
        auto seq = sweep_build(s, r, c);
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(validate_sequence(s, seq) == GameState{c, k + static_cast<int>(l.size()) - static_cast<int>(c.size())});
        ++built;
    }
    CHECK(built > 40);
}

TEST_CASE("sweep solver") {
    auto a = square_l.with({1, 1}).with({2, 1}).with({1, 2}).with({2, 2});
    // bottom row, top row shifted right, one coin joining them
    auto b = set_union(row(0, 4), {{0, 2}, {1, 3}, {2, 3}, {3, 3}});
    REQUIRE(a.size() == 8);
    REQUIRE(b.size() == 8);
    REQUIRE(span_components(b).size() == 1);
    CHECK(sweep_condition_iv(8, 4, 4));
    auto o = solve_sweep(a, b);
    check_solved(a, b, o);
    CHECK(oracle_search(a, b).verdict == OracleVerdict::Reachable);

    auto [a9, b9] = gen_counterexample(9);
    CHECK_FALSE(sweep_condition_iv(12, 10, 10));
    CHECK(solve_sweep(a9, b9).verdict == Verdict::Unknown);
    auto certified = solve(a9, b9);
    CHECK(certified.verdict == Verdict::Unsolvable);
    REQUIRE(certified.certificate);
    CHECK(certified.certificate->kind == CertificateKind::SplitBound);

    // only one redundant coin in the target
    Configuration thin = square_l.with({1, 1}).with({2, 2}).with({3, 3}).with({3, 1});
    Configuration one_spare = set_union(canonical_L(Rectangle(0, 0, 4, 4)), {{3, 3}, {3, 1}, {1, 3}, {1, 1}});
    REQUIRE(find_redundant_coins(one_spare, 1));
    REQUIRE_FALSE(find_redundant_coins(one_spare, 2));
    CHECK(solve_sweep(thin, one_spare).verdict == Verdict::Unknown);
}

TEST_CASE("dispatcher") {
    CHECK(solve(square_l, square_l).verdict == Verdict::Solved);
    CHECK(parse_method("same-span") == Method::SameSpan);
    CHECK(parse_method("two-extra") == Method::TwoExtra);
    CHECK(parse_method("sweep") == Method::Sweep);
    CHECK(parse_method("oracle") == Method::Oracle);
    CHECK(parse_method("auto") == Method::Auto);
    CHECK_FALSE(parse_method("magic"));

    auto split = fixture("refined_split.txt");
    auto o = solve(split.start, split.target);
    REQUIRE(o.verdict == Verdict::Unsolvable);
    REQUIRE(o.certificate);
    CHECK(o.certificate->kind == CertificateKind::SplitBound);
    CHECK(check_certificate(split.start, split.target, *o.certificate));

    for (auto name : {"four_moves.txt", "two_rows_twelve.txt"}) {
        auto p = fixture(name);
        check_solved(p.start, p.target, solve(p.start, p.target));
    }

    SolveOptions no_oracle;
    no_oracle.use_oracle = false;
    auto p = fixture("four_moves.txt");
    CHECK(solve(p.start, p.target, no_oracle).verdict != Verdict::Unsolvable);

    SolveOptions forced;
    forced.method = Method::Oracle;
    auto by_oracle = solve(p.start, p.target, forced);
    check_solved(p.start, p.target, by_oracle);
    CHECK(by_oracle.moves.size() == 4);
}

TEST_CASE("dispatcher never contradicts the oracle") {
    std::mt19937 rng(1234);
    int solved = 0, unsolvable = 0;
    for (int i = 0; i < 300; ++i) {
        int m = 3 + rng() % 2, n = 3;
        int k = 3 + rng() % 4;
        auto a = coinflow::testing::random_config(rng, m, n, k);
        auto b = coinflow::testing::random_config(rng, m, n, k);
        SolveOptions opts;
        opts.use_oracle = false;
        auto o = solve(a, b, opts);
        auto truth = oracle_search(a, b).verdict;
        if (o.verdict == Verdict::Solved) {
            ++solved;
            check_solved(a, b, o);
            CHECK(truth == OracleVerdict::Reachable);
        }
        if (o.verdict == Verdict::Unsolvable) {
            ++unsolvable;
            CHECK(truth == OracleVerdict::Unreachable);
            REQUIRE(o.certificate);
            CHECK(check_certificate(a, b, *o.certificate));
        }
    }
    CHECK(solved > 0);
    CHECK(unsolvable > 0);
}
