#pragma once

#include "coinflow/moves.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace coinflow {

// Exact fraction with positive denominator, always reduced.
class Rational {
public:
    Rational(std::int64_t num = 0, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    std::int64_t ceil() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);

private:
    std::int64_t num_;
    std::int64_t den_;
};

std::string to_string(const Rational& r);

enum class CertificateKind { NecessaryCondition, SplitBound, PokingExhaustive, OracleExhaustive };

std::string to_string(CertificateKind k);

struct Certificate {
    CertificateKind kind = CertificateKind::NecessaryCondition;
    // NecessaryCondition: CardinalityMismatch, SpanNotContained, NoExtraCoin,
    // NoRedundantCoin, SingleMoveImpossible.
    std::string condition;
    std::string evidence;

    // SplitBound. r1 and r2 are given in the original axes; transposed means
    // they are stacked horizontally, gap h between them.
    Rectangle r1;
    Rectangle r2;
    int h = 0;
    bool transposed = false;
    bool refined = false;
    Rational bound;
    int coins = 0;
    // Stronger value from the last case of the refined argument; metadata only.
    std::optional<Rational> case4_bound;

    // PokingExhaustive / OracleExhaustive
    std::size_t states = 0;
};

enum class Verdict { Solved, Unsolvable, Unknown };

std::string to_string(Verdict v);

struct SolveOutcome {
    Verdict verdict = Verdict::Unknown;
    ActionSequence moves;
    std::optional<Certificate> certificate;
    std::string reason;
    std::string method;

    static SolveOutcome solved(ActionSequence seq, std::string method) {
        return {Verdict::Solved, std::move(seq), std::nullopt, {}, std::move(method)};
    }
    static SolveOutcome unsolvable(Certificate c, std::string method) {
        return {Verdict::Unsolvable, {}, std::move(c), {}, std::move(method)};
    }
    static SolveOutcome unknown(std::string reason, std::string method) {
        return {Verdict::Unknown, {}, std::nullopt, std::move(reason), std::move(method)};
    }
};

} // namespace coinflow
