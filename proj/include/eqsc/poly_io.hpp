#pragma once

// Text form of polynomials.
//
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := rational | var | '(' expr ')' | '-' base
//   rational := int ('/' posint)?
//
// Whitespace is insignificant and there is no implicit multiplication. Unary
// minus binds tighter than '^', so "-t0^2" is (-t0)^2; format_poly never emits
// that shape.

#include <cctype>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqsc/polynomial.hpp"

namespace eqsc {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string message, std::vector<std::string> expected)
        : std::runtime_error(render(offset, message, expected)),
          offset_(offset),
          message_(std::move(message)),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& message() const noexcept { return message_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string render(std::size_t offset, const std::string& message, const std::vector<std::string>& expected) {
        std::string s = "at offset " + std::to_string(offset) + ": " + message;
        if (!expected.empty()) {
            s += " (expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
            s += ")";
        }
        return s;
    }

    std::size_t offset_;
    std::string message_;
    std::vector<std::string> expected_;
};

namespace detail {

inline constexpr std::uint32_t max_exponent = 1u << 16;

class PolyParser {
public:
    PolyParser(std::string_view src, std::span<const std::string> vars) : src_(src), vars_(vars) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected character", {"'+'", "'-'", "'*'", "'^'", "end of input"});
        return p;
    }

private:
    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc += term();
            } else if (peek() == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') return acc;
            ++pos_;
            acc *= factor();
        }
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (peek() != '^') return b;
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a natural number", {"natural number"});
        const std::size_t at = pos_;
        const std::string digits = take_digits();
        if (digits.size() > 6 || std::stoul(digits) > max_exponent) {
            pos_ = at;
            fail("exponent too large", {"natural number <= " + std::to_string(max_exponent)});
        }
        return pow(std::move(b), static_cast<unsigned>(std::stoul(digits)));
    }

    Polynomial base() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            skip_ws();
            if (peek() != ')') fail("unbalanced parentheses", {"')'"});
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -base();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(vars_.size(), rational());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t at = pos_;
            std::string name;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                name += src_[pos_++];
            for (std::size_t v = 0; v < vars_.size(); ++v)
                if (vars_[v] == name) return Polynomial::variable(vars_.size(), static_cast<std::uint32_t>(v));
            pos_ = at;
            fail("unknown identifier '" + name + "'", {"declared variable"});
        }
        fail(pos_ == src_.size() ? "unexpected end of input" : "unexpected character",
             {"number", "variable", "'('", "'-'"});
    }

    Rational rational() {
        Rational value(take_digits());
        skip_ws();
        if (peek() != '/') return value;
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed rational", {"positive integer"});
        const std::size_t at = pos_;
        mpz_class den(take_digits());
        if (den == 0) {
            pos_ = at;
            fail("malformed rational: zero denominator", {"positive integer"});
        }
        Rational out(value.get_num(), den);
        out.canonicalize();
        return out;
    }

    std::string take_digits() {
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits += src_[pos_++];
        return digits;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(std::string message, std::vector<std::string> expected) const {
        throw ParseError(pos_, std::move(message), std::move(expected));
    }

    std::string_view src_;
    std::span<const std::string> vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_poly(std::string_view src, std::span<const std::string> vars) {
    if (vars.empty()) throw std::invalid_argument("parse_poly needs at least one variable");
    return detail::PolyParser(src, vars).parse();
}

// Expanded form, terms in graded lex order, e.g. "t0*t1 - t0*t2 - t1*t2 + t2^2".
inline std::string format_poly(const Polynomial& p, std::span<const std::string> vars) {
    if (p.arity() != vars.size()) throw std::invalid_argument("format_poly: variable list does not match arity");
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        std::string mono;
        for (const auto& [var, pw] : m.exponents()) {
            if (!mono.empty()) mono += '*';
            mono += vars[var];
            if (pw > 1) mono += '^' + std::to_string(pw);
        }
        std::string body;
        if (mono.empty()) {
            body = mag.get_str();
        } else if (mag == 1) {
            body = mono;
        } else {
            body = mag.get_str() + "*" + mono;
        }
        if (first) {
            // A leading "-t^k" would parse as (-t)^k.
            if (negative && mag == 1 && !mono.empty() && m.exponents().front().second > 1) body = "1*" + body;
            out = (negative ? "-" : "") + body;
            first = false;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

} // namespace eqsc
