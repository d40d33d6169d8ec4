#pragma once

// Quotients of polynomials.
//
// The denominator is kept as a product of monic factors with multiplicities,
// exactly as they arose (table entries, mostly). Sums use the least common
// multiple of the factor lists, and after every operation each factor is
// cancelled from the numerator as long as it divides exactly. No GCD is ever
// computed, so the result is not necessarily in lowest terms; equality is
// tested by cross-multiplication over the common multiple.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eqsc/polynomial.hpp"

namespace eqsc {

class RationalFunction {
public:
    struct Factor {
        Polynomial poly; // monic, non-constant
        unsigned power;
    };

    explicit RationalFunction(std::size_t arity = 0) : num_(arity) {}

    RationalFunction(Polynomial num) : num_(std::move(num)) {} // NOLINT(google-explicit-constructor)

    RationalFunction(Polynomial num, const Polynomial& den) : num_(std::move(num)) {
        num_.check_arity(den);
        if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
        multiply_denominator(den, 1);
        cancel();
    }

    std::size_t arity() const noexcept { return num_.arity(); }
    const Polynomial& numerator() const noexcept { return num_; }
    const std::vector<Factor>& denominator_factors() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.empty(); }

    Polynomial denominator() const {
        Polynomial d = Polynomial::constant(arity(), 1);
        for (const auto& f : den_) d *= pow(f.poly, f.power);
        return d;
    }

    // num / den as a polynomial when the division is exact.
    std::optional<Polynomial> to_polynomial() const {
        if (den_.empty()) return num_;
        return exact_div(num_, denominator());
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return b;
        const auto common = lcm(a.den_, b.den_);
        RationalFunction out(a.num_ * cofactor(a.arity(), common, a.den_) + b.num_ * cofactor(a.arity(), common, b.den_));
        out.den_ = common;
        out.cancel();
        return out;
    }

    friend RationalFunction operator-(RationalFunction a) {
        a.num_ = -a.num_;
        return a;
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        a.num_.check_arity(b.num_);
        if (a.is_zero() || b.is_zero()) return RationalFunction(a.arity());
        RationalFunction out(a.num_ * b.num_);
        out.den_ = a.den_;
        for (const auto& f : b.den_) out.multiply_denominator(f.poly, f.power);
        out.cancel();
        return out;
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by the zero rational function");
        a.num_.check_arity(b.num_);
        if (a.is_zero()) return RationalFunction(a.arity());
        RationalFunction out(a.num_ * b.denominator());
        out.den_ = a.den_;
        out.multiply_denominator(b.num_, 1);
        out.cancel();
        return out;
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        if (a.arity() != b.arity()) return false;
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        const auto common = lcm(a.den_, b.den_);
        return a.num_ * cofactor(a.arity(), common, a.den_) == b.num_ * cofactor(a.arity(), common, b.den_);
    }

    Rational evaluate(std::span<const Rational> point) const {
        Rational d = denominator().evaluate(point);
        if (d == 0) throw std::domain_error("rational function evaluated at a pole");
        return num_.evaluate(point) / d;
    }

private:
    using Factors = std::vector<Factor>;

    static std::optional<std::size_t> find(const Factors& fs, const Polynomial& p) {
        for (std::size_t i = 0; i < fs.size(); ++i)
            if (fs[i].poly == p) return i;
        return std::nullopt;
    }

    static Factors lcm(const Factors& a, const Factors& b) {
        Factors out = a;
        for (const auto& f : b) {
            if (auto i = find(out, f.poly)) {
                out[*i].power = std::max(out[*i].power, f.power);
            } else {
                out.push_back(f);
            }
        }
        return out;
    }

    // common / part, where part divides common factor-wise.
    static Polynomial cofactor(std::size_t arity, const Factors& common, const Factors& part) {
        Polynomial out = Polynomial::constant(arity, 1);
        for (const auto& f : common) {
            unsigned have = 0;
            if (auto i = find(part, f.poly)) have = part[*i].power;
            if (f.power > have) out *= pow(f.poly, f.power - have);
        }
        return out;
    }

    // Appends den^power, folding constants into the numerator and keeping factors monic.
    void multiply_denominator(const Polynomial& den, unsigned power) {
        if (den.is_constant()) {
            Rational c = den.constant_term();
            for (unsigned k = 0; k < power; ++k) num_ *= Rational(1) / c;
            return;
        }
        Polynomial monic = den;
        const Rational lc = den.leading_coefficient();
        if (lc != 1) {
            monic *= Rational(1) / lc;
            for (unsigned k = 0; k < power; ++k) num_ *= Rational(1) / lc;
        }
        if (auto i = find(den_, monic)) {
            den_[*i].power += power;
        } else {
            den_.push_back({std::move(monic), power});
        }
    }

    void cancel() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        for (auto& f : den_) {
            while (f.power > 0) {
                auto q = exact_div(num_, f.poly);
                if (!q) break;
                num_ = std::move(*q);
                --f.power;
            }
        }
        std::erase_if(den_, [](const Factor& f) { return f.power == 0; });
    }

    Polynomial num_;
    Factors den_;
};

enum class RfOp { add, sub, mul, div };

inline RationalFunction rf_arith(RfOp op, const RationalFunction& a, const RationalFunction& b) {
    switch (op) {
    case RfOp::add: return a + b;
    case RfOp::sub: return a - b;
    case RfOp::mul: return a * b;
    case RfOp::div: return a / b;
    }
    throw std::invalid_argument("unknown rational function operation");
}

} // namespace eqsc
