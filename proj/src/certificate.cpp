#include "coinflow/certificate.hpp"

#include <numeric>

namespace coinflow {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw Error("invalid_rational", "zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::int64_t Rational::ceil() const {
    auto q = num_ / den_;
    return (num_ % den_ != 0 && num_ > 0) ? q + 1 : q;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }

std::string to_string(const Rational& r) {
    if (r.den() == 1) return std::to_string(r.num());
    return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

std::string to_string(CertificateKind k) {
    switch (k) {
    case CertificateKind::NecessaryCondition: return "NecessaryCondition";
    case CertificateKind::SplitBound: return "SplitBound";
    case CertificateKind::PokingExhaustive: return "PokingExhaustive";
    case CertificateKind::OracleExhaustive: return "OracleExhaustive";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Solved: return "solved";
    case Verdict::Unsolvable: return "unsolvable";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

} // namespace coinflow
