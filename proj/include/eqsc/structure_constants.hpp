#pragma once

// Equivariant structure constants c_{pq}^r, defined by
//
//     alpha_p * alpha_q = sum_r c_{pq}^r alpha_r.
//
// Two independent routes are provided:
//   * oracle_solve: localizes the identity at every fixed point and solves the
//     resulting triangular system level by level in lambda;
//   * closed forms for c_{pq}^r with lambda(r) - lambda(q) in {0, 1, 2, 3},
//     built only from table entries, valencies and shifted values.
//
// Everything here works over the fraction field. On tables that come from an
// actual space the results are polynomials; on formal tables they may not be.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "eqsc/moment_graph.hpp"
#include "eqsc/rational_function.hpp"

namespace eqsc {

struct StructureConstantSet {
    PointId p = 0;
    PointId q = 0;
    std::map<PointId, RationalFunction> coeffs; // nonzero entries only
    std::size_t arity = 0;

    RationalFunction at(PointId r) const {
        auto it = coeffs.find(r);
        return it == coeffs.end() ? RationalFunction(arity) : it->second;
    }
};

// Orders a pair so that lambda(p) <= lambda(q), ties broken by id.
inline std::pair<PointId, PointId> normalize_pair(const MomentGraph& g, PointId p, PointId q) {
    const int lp = g.lambda(p);
    const int lq = g.lambda(q);
    if (lp > lq || (lp == lq && p > q)) return {q, p};
    return {p, q};
}

namespace detail {

inline void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

inline void require_ordered(const MomentGraph& g, PointId p, PointId q) {
    require(g.lambda(p) <= g.lambda(q), "expected lambda(p) <= lambda(q)");
}

inline void require_offset(const MomentGraph& g, PointId q, PointId r, int offset) {
    require(g.lambda(r) == g.lambda(q) + offset,
            "expected lambda(" + g.table().name(r) + ") = lambda(" + g.table().name(q) + ") + " +
                std::to_string(offset));
}

inline RationalFunction rf(const Polynomial& p) { return RationalFunction(p); }

inline RationalFunction scalar(const MomentGraph& g, const Rational& c) {
    return RationalFunction(Polynomial::constant(g.table().arity(), c));
}

// alpha_p(t) * alpha_q(t) - alpha_p(q) * alpha_q(t): the part of the localized
// product not yet accounted for by the c^q term.
inline RationalFunction product_minus_base(const MomentGraph& g, PointId p, PointId q, PointId t) {
    const Polynomial& aqt = g.alpha(q, t);
    if (aqt.is_zero()) return RationalFunction(g.table().arity());
    return rf(aqt * (g.alpha(p, t) - g.alpha(p, q)));
}

} // namespace detail

// Triangular solve of the localization system. Processes fixed points s in
// non-decreasing lambda; at each s
//     c^s = [alpha_p(s) alpha_q(s) - sum_{lambda(r) < lambda(s)} c^r alpha_r(s)] / alpha_s(s).
inline StructureConstantSet oracle_solve(const MomentGraph& g, PointId p, PointId q) {
    std::tie(p, q) = normalize_pair(g, p, q);
    const std::size_t arity = g.table().arity();
    StructureConstantSet out{p, q, {}, arity};
    for (PointId s : g.graded_order()) {
        Polynomial known = g.alpha(p, s) * g.alpha(q, s);
        RationalFunction fractions(arity);
        for (const auto& [r, cr] : out.coeffs) {
            if (g.lambda(r) >= g.lambda(s)) continue;
            const Polynomial& ars = g.alpha(r, s);
            if (ars.is_zero()) continue;
            if (cr.is_polynomial()) {
                known -= cr.numerator() * ars;
            } else {
                fractions += cr * detail::rf(ars);
            }
        }
        const RationalFunction rhs = RationalFunction(std::move(known)) - fractions;
        RationalFunction cs = rhs / detail::rf(g.alpha(s, s));
        if (!cs.is_zero()) out.coeffs.emplace(s, std::move(cs));
    }
    return out;
}

// c_{pq}^q = alpha_p(q).
inline Polynomial cf_base(const MomentGraph& g, PointId p, PointId q) {
    detail::require_ordered(g, p, q);
    return g.alpha(p, q);
}

// lambda(z) = lambda(q) + 1:
//     c_{pq}^z = alpha_q(z) / alpha_z(z) * (alpha_p(z) - alpha_p(q)).
inline RationalFunction cf_offset1(const MomentGraph& g, PointId p, PointId q, PointId z) {
    detail::require_ordered(g, p, q);
    detail::require_offset(g, q, z, 1);
    return detail::product_minus_base(g, p, q, z) / detail::rf(g.alpha(z, z));
}

// s_z^y c_{pq}^z = alpha_q(y) / alpha_z(y) * (alpha_p(y) - alpha_p(q)), for z in V_y^-.
inline RationalFunction shift_offset1(const MomentGraph& g, PointId p, PointId q, PointId z, PointId y) {
    detail::require_ordered(g, p, q);
    detail::require_offset(g, q, z, 1);
    detail::require_offset(g, q, y, 2);
    detail::require(g.has_edge(z, y), "shift requires an edge " + g.table().name(z) + " -> " + g.table().name(y));
    return detail::product_minus_base(g, p, q, y) / detail::rf(g.alpha(z, y));
}

enum class Form { theorem, proof };

// lambda(y) = lambda(q) + 2.
//   theorem: sum_{z in V_y^-} alpha_z(y)/alpha_y(y) * (s_z^y c^z / |V_y^-| - c^z)
//   proof:   [alpha_p(y) alpha_q(y) - alpha_p(q) alpha_q(y) - sum_{z in V_y^-} c^z alpha_z(y)] / alpha_y(y)
// The theorem form is 0 when V_y^- is empty.
inline RationalFunction cf_offset2(const MomentGraph& g, PointId p, PointId q, PointId y, Form form = Form::theorem) {
    detail::require_ordered(g, p, q);
    detail::require_offset(g, q, y, 2);
    const auto& in = g.valency(y, Sign::minus);
    const RationalFunction ayy = detail::rf(g.alpha(y, y));
    if (form == Form::theorem) {
        RationalFunction sum(g.table().arity());
        if (in.empty()) return sum;
        const RationalFunction inv_m = detail::scalar(g, Rational(1) / Rational(static_cast<unsigned long>(in.size())));
        for (PointId z : in) {
            RationalFunction inner = inv_m * shift_offset1(g, p, q, z, y) - cf_offset1(g, p, q, z);
            sum += detail::rf(g.alpha(z, y)) / ayy * inner;
        }
        return sum;
    }
    RationalFunction numer = detail::product_minus_base(g, p, q, y);
    for (PointId z : in) numer -= cf_offset1(g, p, q, z) * detail::rf(g.alpha(z, y));
    return numer / ayy;
}

// s_y^x c_{pq}^y for y in V_x^-. Only the localization arguments move from y to
// x; the inner constants c_{pq}^z stay as they are:
//   [alpha_p(x) alpha_q(x) - alpha_p(q) alpha_q(x) - sum_{z in V_y^-} c^z alpha_z(x)] / alpha_y(x)
inline RationalFunction shift_offset2(const MomentGraph& g, PointId p, PointId q, PointId y, PointId x) {
    detail::require_ordered(g, p, q);
    detail::require_offset(g, q, y, 2);
    detail::require_offset(g, q, x, 3);
    detail::require(g.has_edge(y, x), "shift requires an edge " + g.table().name(y) + " -> " + g.table().name(x));
    RationalFunction numer = detail::product_minus_base(g, p, q, x);
    for (PointId z : g.valency(y, Sign::minus)) {
        const Polynomial& azx = g.alpha(z, x);
        if (!azx.is_zero()) numer -= cf_offset1(g, p, q, z) * detail::rf(azx);
    }
    return numer / detail::rf(g.alpha(y, x));
}

// lambda(x) = lambda(q) + 3.
//   theorem: sum_{y in V_x^-} alpha_y(x)/alpha_x(x) * (s_y^x c^y / |V_x^-| - c^y)
//            + sum_z (|V_z^+| - |V_x^-|) / |V_x^-| * alpha_z(x)/alpha_x(x) * c^z
//            with z over lambda(q) + 1; every other summand vanishes.
//   proof:   [alpha_p(x) alpha_q(x) - alpha_p(q) alpha_q(x) - sum_{z in V_q^+} c^z alpha_z(x)] / alpha_x(x)
//            - sum_{y in V_x^-} c^y alpha_y(x) / alpha_x(x)
// The theorem form is 0 when V_x^- is empty. It assumes every out-edge of each
// z in V_q^+ lands in V_x^-; elsewhere it can disagree with the oracle.
inline RationalFunction cf_offset3(const MomentGraph& g, PointId p, PointId q, PointId x, Form form = Form::theorem) {
    detail::require_ordered(g, p, q);
    detail::require_offset(g, q, x, 3);
    const auto& in = g.valency(x, Sign::minus);
    const RationalFunction axx = detail::rf(g.alpha(x, x));
    const std::size_t arity = g.table().arity();

    if (form == Form::theorem) {
        RationalFunction sum(arity);
        if (in.empty()) return sum;
        const Rational m(static_cast<unsigned long>(in.size()));
        const RationalFunction inv_m = detail::scalar(g, 1 / m);
        for (PointId y : in) {
            RationalFunction inner = inv_m * shift_offset2(g, p, q, y, x) - cf_offset2(g, p, q, y, Form::theorem);
            sum += detail::rf(g.alpha(y, x)) / axx * inner;
        }
        for (PointId z : g.points_at_level(g.lambda(q) + 1)) {
            const Polynomial& azx = g.alpha(z, x);
            if (azx.is_zero()) continue;
            const Rational weight = (Rational(static_cast<unsigned long>(g.valency(z, Sign::plus).size())) - m) / m;
            if (weight == 0) continue;
            sum += detail::scalar(g, weight) * detail::rf(azx) / axx * cf_offset1(g, p, q, z);
        }
        return sum;
    }

    RationalFunction numer = detail::product_minus_base(g, p, q, x);
    for (PointId z : g.valency(q, Sign::plus)) {
        const Polynomial& azx = g.alpha(z, x);
        if (!azx.is_zero()) numer -= cf_offset1(g, p, q, z) * detail::rf(azx);
    }
    RationalFunction result = numer / axx;
    for (PointId y : in) result -= cf_offset2(g, p, q, y, Form::proof) * detail::rf(g.alpha(y, x)) / axx;
    return result;
}

// The edge-counting assumption behind the offset-3 theorem form: every z in
// V_q^+ that still sees x (alpha_z(x) != 0) sends all of its out-edges into
// V_x^-. When it fails, the theorem form is off by
//     sum_z |V_z^+ \ V_x^-| / |V_x^-| * alpha_z(x) / alpha_x(x) * c^z.
inline bool offset3_edge_hypothesis(const MomentGraph& g, PointId q, PointId x) {
    const auto& in = g.valency(x, Sign::minus);
    for (PointId z : g.valency(q, Sign::plus)) {
        if (g.alpha(z, x).is_zero()) continue;
        for (PointId y : g.valency(z, Sign::plus))
            if (std::find(in.begin(), in.end(), y) == in.end()) return false;
    }
    return true;
}

enum class Position { forced_zero, is_alpha_pq, unconstrained };

// What the vanishing lemmas say about c_{pq}^r from positions alone.
inline Position vanishing_by_position(const MomentGraph& g, PointId p, PointId q, PointId r) {
    detail::require_ordered(g, p, q);
    const int lp = g.lambda(p);
    const int lq = g.lambda(q);
    const int lr = g.lambda(r);
    if (r == q) return Position::is_alpha_pq;
    if (lr < lp) return Position::forced_zero;
    if (r == p) return Position::forced_zero;
    if (lp <= lr && lr <= lq) return Position::forced_zero;
    return Position::unconstrained;
}

inline const char* to_string(Position pos) {
    switch (pos) {
    case Position::forced_zero: return "forced_zero";
    case Position::is_alpha_pq: return "is_alpha_pq";
    case Position::unconstrained: return "unconstrained";
    }
    return "?";
}

} // namespace eqsc
