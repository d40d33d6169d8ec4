#pragma once

// Seeded generator of structurally valid canonical tables for property tests.
//
// Level i of `level_sizes` holds points with lambda = i. Besides the canonical
// class conditions, generated tables satisfy two properties that hold for
// tables coming from actual spaces:
//   * when there is a single lambda = 0 point its class is the unit (all ones);
//   * every point above the bottom level has at least one in-edge, and
//     alpha(p, q) = 0 whenever no path p -> q exists.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqsc/canonical_table.hpp"

namespace eqsc {

namespace detail {

inline Polynomial random_linear_form(std::size_t n_vars, std::mt19937_64& rng, int bound = 2) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    Polynomial form(n_vars);
    while (form.is_zero()) {
        for (std::uint32_t v = 0; v < n_vars; ++v)
            form.add_term(Monomial::variable(v), Rational(coeff(rng)));
    }
    return form;
}

inline void monomials_of_degree(std::size_t n_vars, std::uint32_t degree, std::uint32_t first,
                                std::vector<Monomial::Exponent>& acc, std::vector<Monomial>& out) {
    if (degree == 0) {
        out.emplace_back(acc);
        return;
    }
    for (std::uint32_t v = first; v < n_vars; ++v) {
        acc.emplace_back(v, 1);
        monomials_of_degree(n_vars, degree - 1, v, acc, out);
        acc.pop_back();
    }
}

inline Polynomial random_homogeneous(std::size_t n_vars, std::uint32_t degree, std::mt19937_64& rng) {
    std::vector<Monomial> basis;
    std::vector<Monomial::Exponent> acc;
    monomials_of_degree(n_vars, degree, 0, acc, basis);
    std::uniform_int_distribution<int> coeff(-3, 3);
    Polynomial p(n_vars);
    while (p.is_zero()) {
        for (const auto& m : basis)
            if (rng() % 2 == 0) p.add_term(m, Rational(coeff(rng)));
    }
    return p;
}

} // namespace detail

inline CanonicalTable random_valid_table(std::size_t n_vars, const std::vector<int>& level_sizes, std::uint64_t seed) {
    if (level_sizes.empty()) throw std::invalid_argument("level_sizes must be non-empty");
    if (n_vars == 0) throw std::invalid_argument("need at least one variable");
    for (int s : level_sizes)
        if (s < 1) throw std::invalid_argument("every level needs at least one point");

    std::vector<std::string> vars;
    for (std::size_t i = 0; i < n_vars; ++i) vars.push_back("t" + std::to_string(i));
    std::vector<std::pair<std::string, int>> pts;
    for (int level = 0; level < static_cast<int>(level_sizes.size()); ++level)
        for (int k = 0; k < level_sizes[level]; ++k) pts.emplace_back("p" + std::to_string(pts.size()), level);

    CanonicalTable table(vars, pts);
    std::mt19937_64 rng(seed);
    const std::size_t n = table.size();
    const bool unit_bottom = level_sizes[0] == 1;

    // Diagonal: products of lambda(p) pairwise distinct nonzero linear forms.
    for (PointId p = 0; p < n; ++p) {
        std::vector<Polynomial> forms;
        Polynomial diag = Polynomial::constant(n_vars, 1);
        int collisions = 0;
        while (forms.size() < static_cast<std::size_t>(table.lambda(p))) {
            // Few variables leave few small forms; widen the range on repeats.
            Polynomial f = detail::random_linear_form(n_vars, rng, 2 + collisions / 4);
            if (std::find(forms.begin(), forms.end(), f) != forms.end()) {
                ++collisions;
                continue;
            }
            diag *= f;
            forms.push_back(std::move(f));
        }
        table.set(p, p, std::move(diag));
    }

    // Strictly upper entries, about a third of them zero.
    for (PointId p = 0; p < n; ++p) {
        for (PointId q = 0; q < n; ++q) {
            if (table.lambda(q) <= table.lambda(p)) continue;
            if (unit_bottom && table.lambda(p) == 0) {
                table.set(p, q, Polynomial::constant(n_vars, 1));
                continue;
            }
            if (rng() % 3 == 0) continue;
            table.set(p, q, detail::random_homogeneous(n_vars, table.lambda(p), rng));
        }
    }

    // At least one in-edge for every point above the bottom level.
    for (PointId q = 0; q < n; ++q) {
        if (table.lambda(q) == 0) continue;
        std::vector<PointId> below;
        bool has_in_edge = false;
        for (PointId r = 0; r < n; ++r) {
            if (table.lambda(r) != table.lambda(q) - 1) continue;
            below.push_back(r);
            has_in_edge = has_in_edge || !table.alpha(r, q).is_zero();
        }
        if (!has_in_edge) {
            const PointId r = below[rng() % below.size()];
            table.set(r, q, detail::random_homogeneous(n_vars, table.lambda(r), rng));
        }
    }

    // Clear entries with no connecting path.
    const auto edges = derive_edges(table);
    const auto order = table.graded_order();
    for (PointId p = 0; p < n; ++p) {
        std::vector<bool> reach(n, false);
        reach[p] = true;
        for (PointId s : order) {
            if (!reach[s]) continue;
            for (auto it = edges.lower_bound({s, 0}); it != edges.end() && it->first == s; ++it)
                reach[it->second] = true;
        }
        for (PointId q = 0; q < n; ++q)
            if (!reach[q]) table.set(p, q, Polynomial(n_vars));
    }
    return table;
}

} // namespace eqsc
