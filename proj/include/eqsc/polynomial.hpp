#pragma once

// Sparse multivariate polynomials over arbitrary-precision rationals.
//
// Terms are kept in a map ordered by graded lexicographic order (t0 > t1 > ...),
// largest monomial first, so the first term is always the leading term.
// Zero coefficients are never stored.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eqsc {

using Rational = mpq_class;

class Monomial {
public:
    using Exponent = std::pair<std::uint32_t, std::uint32_t>; // (variable, power)

    Monomial() = default;

    // Normalizes: merges repeated variables, drops zero powers, sorts by variable.
    explicit Monomial(std::vector<Exponent> exps) {
        std::sort(exps.begin(), exps.end());
        for (const auto& [var, pow] : exps) {
            if (pow == 0) continue;
            if (!exps_.empty() && exps_.back().first == var) {
                exps_.back().second += pow;
            } else {
                exps_.emplace_back(var, pow);
            }
            degree_ += pow;
        }
    }

    static Monomial variable(std::uint32_t var, std::uint32_t pow = 1) {
        return Monomial({{var, pow}});
    }

    std::uint32_t degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return exps_.empty(); }
    const std::vector<Exponent>& exponents() const noexcept { return exps_; }

    std::uint32_t exponent(std::uint32_t var) const noexcept {
        auto it = std::lower_bound(exps_.begin(), exps_.end(), Exponent{var, 0});
        return (it != exps_.end() && it->first == var) ? it->second : 0;
    }

    // One past the largest variable index mentioned (0 for the unit monomial).
    std::size_t min_arity() const noexcept { return exps_.empty() ? 0 : exps_.back().first + 1; }

    // True iff this monomial divides `other`.
    bool divides(const Monomial& other) const noexcept {
        if (degree_ > other.degree_) return false;
        auto it = other.exps_.begin();
        for (const auto& [var, pow] : exps_) {
            while (it != other.exps_.end() && it->first < var) ++it;
            if (it == other.exps_.end() || it->first != var || it->second < pow) return false;
        }
        return true;
    }

    // other / *this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const {
        Monomial out;
        auto mine = exps_.begin();
        for (const auto& [var, pow] : other.exps_) {
            std::uint32_t sub = 0;
            if (mine != exps_.end() && mine->first == var) sub = (mine++)->second;
            if (pow > sub) {
                out.exps_.emplace_back(var, pow - sub);
                out.degree_ += pow - sub;
            }
        }
        return out;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        out.exps_.reserve(a.exps_.size() + b.exps_.size());
        auto i = a.exps_.begin();
        auto j = b.exps_.begin();
        while (i != a.exps_.end() || j != b.exps_.end()) {
            if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first)) {
                out.exps_.push_back(*i++);
            } else if (i == a.exps_.end() || j->first < i->first) {
                out.exps_.push_back(*j++);
            } else {
                out.exps_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        out.degree_ = a.degree_ + b.degree_;
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
    std::uint32_t degree_ = 0;
};

// Strict "a comes before b" for graded lex with t0 > t1 > ...: higher total degree
// first, then the larger power of the lowest-indexed variable where they differ.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        const auto& ea = a.exponents();
        const auto& eb = b.exponents();
        std::size_t i = 0;
        for (; i < ea.size() && i < eb.size(); ++i) {
            if (ea[i] == eb[i]) continue;
            if (ea[i].first != eb[i].first) return ea[i].first < eb[i].first;
            return ea[i].second > eb[i].second;
        }
        return i < ea.size() && i == eb.size();
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}

    static Polynomial constant(std::size_t arity, const Rational& c) {
        Polynomial p(arity);
        p.add_term(Monomial{}, c);
        return p;
    }

    static Polynomial variable(std::size_t arity, std::uint32_t var) {
        if (var >= arity) throw std::out_of_range("variable index exceeds polynomial arity");
        Polynomial p(arity);
        p.add_term(Monomial::variable(var), Rational(1));
        return p;
    }

    std::size_t arity() const noexcept { return arity_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    // Constant term (zero if absent).
    Rational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const Monomial& leading_monomial() const { return nonzero_front().first; }
    const Rational& leading_coefficient() const { return nonzero_front().second; }

    // Adds c * m in place, keeping the canonical form.
    Polynomial& add_term(const Monomial& m, const Rational& c) {
        if (m.min_arity() > arity_) throw std::out_of_range("monomial variable exceeds polynomial arity");
        if (c == 0) return *this;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator-(Polynomial a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_arity(b);
        Polynomial out(a.arity_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // Term maps compared exactly; arity is part of the identity.
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    Rational evaluate(std::span<const Rational> point) const {
        if (point.size() != arity_) throw std::invalid_argument("evaluation point has wrong dimension");
        Rational sum = 0;
        for (const auto& [m, c] : terms_) {
            Rational term = c;
            for (const auto& [var, pow] : m.exponents())
                for (std::uint32_t k = 0; k < pow; ++k) term *= point[var];
            sum += term;
        }
        return sum;
    }

    void check_arity(const Polynomial& o) const {
        if (arity_ != o.arity_)
            throw std::invalid_argument("polynomial arity mismatch: " + std::to_string(arity_) + " vs " +
                                        std::to_string(o.arity_));
    }

private:
    const TermMap::value_type& nonzero_front() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
        return *terms_.begin();
    }

    std::size_t arity_;
    TermMap terms_;
};

inline Polynomial pow(Polynomial base, unsigned exp) {
    Polynomial out = Polynomial::constant(base.arity(), 1);
    while (exp) {
        if (exp & 1u) out *= base;
        exp >>= 1u;
        if (exp) base *= base;
    }
    return out;
}

// Exact quotient num / den, or nullopt when den does not divide num.
// Multivariate division by a single divisor in grlex order; a nonzero remainder
// shows up as a leading term the divisor's leading monomial cannot divide.
inline std::optional<Polynomial> exact_div(const Polynomial& num, const Polynomial& den) {
    num.check_arity(den);
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    const Monomial& lm = den.leading_monomial();
    const Rational& lc = den.leading_coefficient();
    if (den.size() == 1) {
        Polynomial q(num.arity());
        for (const auto& [m, c] : num.terms()) {
            if (!lm.divides(m)) return std::nullopt;
            q.add_term(lm.quotient_of(m), c / lc);
        }
        return q;
    }
    Polynomial rem = num;
    Polynomial quot(num.arity());
    while (!rem.is_zero()) {
        const Monomial& top = rem.leading_monomial();
        if (!lm.divides(top)) return std::nullopt;
        const Monomial qm = lm.quotient_of(top);
        const Rational qc = rem.leading_coefficient() / lc;
        quot.add_term(qm, qc);
        for (const auto& [m, c] : den.terms()) rem.add_term(m * qm, -(c * qc));
    }
    return quot;
}

enum class DegreeStatus { homogeneous, not_homogeneous, zero_polynomial };

struct HomogeneousDegree {
    DegreeStatus status;
    std::uint32_t degree = 0; // meaningful only when homogeneous

    bool ok() const noexcept { return status == DegreeStatus::homogeneous; }
    friend bool operator==(const HomogeneousDegree&, const HomogeneousDegree&) = default;
};

inline HomogeneousDegree homogeneous_degree(const Polynomial& p) {
    if (p.is_zero()) return {DegreeStatus::zero_polynomial};
    const std::uint32_t d = p.leading_monomial().degree();
    // Leading term has maximal degree and the last term minimal degree.
    if (p.terms().rbegin()->first.degree() != d) return {DegreeStatus::not_homogeneous};
    return {DegreeStatus::homogeneous, d};
}

} // namespace eqsc
