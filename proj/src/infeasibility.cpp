#include "coinflow/infeasibility.hpp"

#include "coinflow/canonical.hpp"
#include "coinflow/oracle.hpp"
#include "coinflow/poking.hpp"
#include "coinflow/span.hpp"

namespace coinflow {

namespace {

Certificate necessary(std::string condition, std::string evidence) {
    Certificate c;
    c.kind = CertificateKind::NecessaryCondition;
    c.condition = std::move(condition);
    c.evidence = std::move(evidence);
    return c;
}

bool one_move_reaches(const Configuration& a, const Configuration& b) {
    for (auto [from, to] : legal_moves(a))
        if (a.without(from).with(to) == b) return true;
    return false;
}

std::optional<Position> isolated_remainder(const Configuration& b) {
    for (auto c : b)
        if (all_isolated(b.without(c))) return c;
    return std::nullopt;
}

bool split_apart(const Configuration& c, const Rectangle& r1, const Rectangle& r2) {
    if (c.empty()) return false;
    auto comps = span_components(c);
    std::optional<std::size_t> i1, i2;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps.rectangles[i].contains(r1)) i1 = i;
        if (comps.rectangles[i].contains(r2)) i2 = i;
    }
    return i1 && i2 && *i1 != *i2;
}

std::optional<std::size_t> holder(const SpanDecomposition& s, const Rectangle& r) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.rectangles[i].contains(r)) return i;
    return std::nullopt;
}

} // namespace

std::vector<Certificate> necessary_conditions(const Configuration& a, const Configuration& b) {
    std::vector<Certificate> out;
    if (a == b) return out;
    if (a.size() != b.size())
        out.push_back(necessary("CardinalityMismatch",
                                std::to_string(a.size()) + " start coins, " + std::to_string(b.size()) + " target coins"));
    if (!span(b).is_subset_of(span(a))) out.push_back(necessary("SpanNotContained", "target span leaves start span"));
    if (!find_extra_coins(a, b, 1)) out.push_back(necessary("NoExtraCoin", "every start coin is needed for the target span"));
    if (!find_redundant_coins(b, 1)) out.push_back(necessary("NoRedundantCoin", "no target coin has two neighbors"));
    if (auto c = isolated_remainder(b); c && !one_move_reaches(a, b))
        out.push_back(necessary("SingleMoveImpossible", "target minus " + to_string(*c) + " is isolated, no single move"));
    return out;
}

std::optional<SplitGeometry> split_geometry(const Rectangle& r1, const Rectangle& r2) {
    auto stacked = [](int a0, int a1, int b0, int b1, int c0, int c1, int d0, int d1) -> std::optional<int> {
        // [a0,a1] vs [b0,b1] must meet; [c0,c1] vs [d0,d1] must be apart
        if (std::max(a0, b0) > std::min(a1, b1)) return std::nullopt;
        if (c1 < d0) return d0 - c1 - 1;
        if (d1 < c0) return c0 - d1 - 1;
        return std::nullopt;
    };
    if (auto h = stacked(r1.x0, r1.x1(), r2.x0, r2.x1(), r1.y0, r1.y1(), r2.y0, r2.y1()); h && *h >= 2)
        return SplitGeometry{*h, false};
    if (auto h = stacked(r1.y0, r1.y1(), r2.y0, r2.y1(), r1.x0, r1.x1(), r2.x0, r2.x1()); h && *h >= 2)
        return SplitGeometry{*h, true};
    return std::nullopt;
}

Rational split_bound(const Rectangle& r1, const Rectangle& r2) {
    auto g = split_geometry(r1, r2);
    if (!g) throw Error("geometry_precondition", to_string(r1) + " and " + to_string(r2) + " are not stacked");
    return Rational(r1.m + r1.n + r2.m + r2.n + g->h - 1, 2);
}

Rational refined_split_bound(const Rectangle& r1, const Rectangle& r2) {
    auto g = split_geometry(r1, r2);
    if (!g) throw Error("geometry_precondition", to_string(r1) + " and " + to_string(r2) + " are not stacked");
    return Rational(r1.m + r1.n + r2.m + r2.n + g->h + 2, 2);
}

bool split_within_two_moves(const Configuration& a, const Rectangle& r1, const Rectangle& r2) {
    if (split_apart(a, r1, r2)) return true;
    for (auto [c1, p1] : legal_moves(a)) {
        auto a1 = a.without(c1).with(p1);
        if (split_apart(a1, r1, r2)) return true;
        for (auto [c2, p2] : legal_moves(a1))
            if (split_apart(a1.without(c2).with(p2), r1, r2)) return true;
    }
    return false;
}

std::optional<Certificate> prove_unsolvable_by_split(const Configuration& a, const Configuration& b) {
    if (a.empty() || b.empty() || a.size() != b.size() || a == b) return std::nullopt;
    auto sa = span_components(a);
    auto sb = span_components(b);
    const int coins = static_cast<int>(a.size());
    std::optional<Certificate> refined_candidate;
    for (std::size_t i = 0; i < sb.size(); ++i) {
        for (std::size_t j = i + 1; j < sb.size(); ++j) {
            const auto& r1 = sb.rectangles[i];
            const auto& r2 = sb.rectangles[j];
            auto h1 = holder(sa, r1);
            if (!h1 || holder(sa, r2) != h1) continue;
            auto g = split_geometry(r1, r2);
            if (!g) continue;
            Certificate c;
            c.kind = CertificateKind::SplitBound;
            c.r1 = r1;
            c.r2 = r2;
            c.h = g->h;
            c.transposed = g->transposed;
            c.coins = coins;
            c.bound = split_bound(r1, r2);
            if (Rational(coins) < c.bound) return c;
            if (!refined_candidate && Rational(coins) < refined_split_bound(r1, r2)) {
                c.refined = true;
                c.bound = refined_split_bound(r1, r2);
                c.case4_bound = Rational(r1.m + r1.n + r2.m + r2.n + g->h + 3, 2);
                refined_candidate = c;
            }
        }
    }
    if (refined_candidate && !split_within_two_moves(a, refined_candidate->r1, refined_candidate->r2))
        return refined_candidate;
    return std::nullopt;
}

bool check_certificate(const Configuration& a, const Configuration& b, const Certificate& cert, std::string* why) {
    auto reject = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    if (a == b) return reject("start equals target");
    switch (cert.kind) {
    case CertificateKind::NecessaryCondition: {
        const auto& n = cert.condition;
        if (n == "CardinalityMismatch") return a.size() != b.size() || reject("counts agree");
        if (n == "SpanNotContained") {
            auto sa = span(a);
            for (auto p : span(b))
                if (!sa.contains(p)) return true;
            return reject("target span is inside start span");
        }
        if (n == "NoExtraCoin") {
            auto target = span(b);
            for (auto c : a)
                if (target.is_subset_of(span(a.without(c)))) return reject(to_string(c) + " is an extra coin");
            return true;
        }
        if (n == "NoRedundantCoin") {
            for (auto c : b)
                if (b.occupied_neighbors(c) >= 2) return reject(to_string(c) + " is redundant");
            return true;
        }
        if (n == "SingleMoveImpossible") {
            bool isolated = false;
            for (auto c : b) isolated = isolated || all_isolated(b.without(c));
            if (!isolated) return reject("no coin leaves an isolated remainder");
            for (auto c : a)
                for (auto p : b) {
                    if (a.contains(p) || a.occupied_neighbors(p, c) < 2) continue;
                    if (a.without(c).with(p) == b) return reject("single move " + to_string(c) + " -> " + to_string(p));
                }
            return true;
        }
        return reject("unknown condition " + n);
    }
    case CertificateKind::SplitBound: {
        if (cert.coins != static_cast<int>(a.size()) || a.size() != b.size()) return reject("coin count mismatch");
        auto sa = span_components(a);
        auto sb = span_components(b);
        auto b1 = holder(sb, cert.r1);
        auto b2 = holder(sb, cert.r2);
        if (!b1 || !b2 || *b1 == *b2) return reject("rectangles are not in distinct target components");
        auto a1 = holder(sa, cert.r1);
        if (!a1 || holder(sa, cert.r2) != a1) return reject("rectangles are not in one start component");
        auto g = split_geometry(cert.r1, cert.r2);
        if (!g || g->h != cert.h || g->transposed != cert.transposed) return reject("geometry mismatch");
        Rational bound = cert.refined ? refined_split_bound(cert.r1, cert.r2) : split_bound(cert.r1, cert.r2);
        if (bound != cert.bound) return reject("bound mismatch");
        if (!(Rational(cert.coins) < bound)) return reject("coin count reaches the bound");
        if (cert.refined && split_within_two_moves(a, cert.r1, cert.r2)) return reject("split within two moves");
        return true;
    }
    case CertificateKind::PokingExhaustive: {
        auto r = min_plus1_unsolvable_by_search(a, b, 2'000'000);
        if (!r) return reject("poking search inconclusive");
        return *r || reject("poking search found a route");
    }
    case CertificateKind::OracleExhaustive: {
        auto r = oracle_search(a, b);
        if (r.verdict == OracleVerdict::Unreachable) return true;
        return reject(r.verdict == OracleVerdict::Reachable ? "oracle reached the target" : "oracle exhausted");
    }
    }
    return reject("unknown certificate kind");
}

std::pair<Configuration, Configuration> gen_counterexample(int n) {
    if (n < 9) throw Error("n_too_small", "family starts at n = 9");
    auto add_bottom = [](Configuration c, int width, int count) {
        for (int pass = 0; pass < 2 && count > 0; ++pass)
            for (int x = 0; x < width && count > 0; ++x) {
                Position p{x, 0};
                if (c.contains(p) || (pass == 0 && c.occupied_neighbors(p) > 0)) continue;
                c.insert(p);
                --count;
            }
        return c;
    };
    auto a = add_bottom(canonical_L(Rectangle(0, 0, n, n)), n, (n - 2) / 2);
    auto rows = set_union(canonical_L(Rectangle(0, n - 1, n, 1)), canonical_L(Rectangle(0, 0, n, 1)));
    auto b = add_bottom(rows, n, (n - 5) / 2);
    return {a, b};
}

} // namespace coinflow
