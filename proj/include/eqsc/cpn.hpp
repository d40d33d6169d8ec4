#pragma once

// Complex projective space CP^n with the standard torus action.
//
// Fixed points p_0, ..., p_n with lambda(p_i) = i and canonical classes
//     alpha_{p_i}(p_k) = prod_{j < i} (t_j - t_k)   for i <= k, 0 otherwise.
// The moment graph is the chain p_0 -> p_1 -> ... -> p_n, and the structure
// constants obey the divided-difference recursion
//     c^{p_k} = (s_{p_{k-1}}^{p_k} c^{p_{k-1}} - c^{p_{k-1}}) / (t_{k-1} - t_k).

#include <stdexcept>
#include <string>
#include <vector>

#include "eqsc/generator_expr.hpp"
#include "eqsc/moment_graph.hpp"
#include "eqsc/structure_constants.hpp"

namespace eqsc {

struct CpnInstance {
    int n;
    MomentGraph graph;

    const CanonicalTable& table() const noexcept { return graph.table(); }
};

inline CanonicalTable cpn_table(int n) {
    if (n < 1) throw std::invalid_argument("CP^n needs n >= 1");
    std::vector<std::string> vars;
    std::vector<std::pair<std::string, int>> pts;
    for (int i = 0; i <= n; ++i) {
        vars.push_back("t" + std::to_string(i));
        pts.emplace_back("p" + std::to_string(i), i);
    }
    const std::size_t arity = vars.size();
    CanonicalTable table(vars, pts);
    for (int i = 0; i <= n; ++i) {
        for (int k = i; k <= n; ++k) {
            Polynomial prod = Polynomial::constant(arity, 1);
            for (int j = 0; j < i; ++j)
                prod *= Polynomial::variable(arity, j) - Polynomial::variable(arity, k);
            table.set(i, k, std::move(prod));
        }
    }
    return table;
}

inline CpnInstance generate_cpn(int n) { return {n, build_graph(cpn_table(n))}; }

// One divided-difference step: from the generator expression of c^{p_{k-1}},
// shift its localization arguments p_{k-1} -> p_k, subtract, and divide by
// t_{k-1} - t_k. The division is exact on CP^n; a remainder means a bug.
inline Polynomial dd_step(const CpnInstance& inst, const GeneratorExpr& c_prev, int k) {
    if (k < 1 || k > inst.n) throw std::out_of_range("dd_step level out of range");
    const auto from = static_cast<PointId>(k - 1);
    const auto to = static_cast<PointId>(k);
    const CanonicalTable& t = inst.table();
    const RationalFunction diff = c_prev.shift(from, to).evaluate(t) - c_prev.evaluate(t);
    const auto numer = diff.to_polynomial();
    if (!numer) throw std::logic_error("divided difference numerator is not a polynomial at level " + std::to_string(k));
    const Polynomial den = Polynomial::variable(t.arity(), k - 1) - Polynomial::variable(t.arity(), k);
    auto q = exact_div(*numer, den);
    if (!q) throw std::logic_error("divided difference is not exact at level " + std::to_string(k));
    return std::move(*q);
}

// Generator expressions for c_{p_i p_j}^{p_k}, k = j..n: the base atom
// alpha_{p_i}(p_j), then the localization identity at each higher level.
inline std::vector<GeneratorExpr> cpn_constant_exprs(const CpnInstance& inst, int i, int j) {
    if (i < 0 || i > j || j > inst.n) throw std::out_of_range("dd_table needs 0 <= i <= j <= n");
    std::vector<GeneratorExpr> exprs{GeneratorExpr::atom(i, j)};
    std::vector<std::pair<PointId, GeneratorExpr>> lower{{static_cast<PointId>(j), exprs.back()}};
    for (int k = j + 1; k <= inst.n; ++k) {
        exprs.push_back(localization_expr(i, j, k, lower));
        lower.emplace_back(k, exprs.back());
    }
    return exprs;
}

// All constants c_{p_i p_j}^{p_k}: base case at k = j, then dd_step upward.
inline StructureConstantSet dd_table(const CpnInstance& inst, int i, int j) {
    const auto exprs = cpn_constant_exprs(inst, i, j);
    StructureConstantSet out{static_cast<PointId>(i), static_cast<PointId>(j), {}, inst.table().arity()};
    const Polynomial& base = inst.table().alpha(i, j);
    if (!base.is_zero()) out.coeffs.emplace(j, base);
    for (int k = j + 1; k <= inst.n; ++k) {
        Polynomial c = dd_step(inst, exprs[k - j - 1], k);
        if (!c.is_zero()) out.coeffs.emplace(k, std::move(c));
    }
    return out;
}

} // namespace eqsc
