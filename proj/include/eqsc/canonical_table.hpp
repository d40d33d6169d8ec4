#pragma once

// Restriction tables of canonical classes: for fixed points p, q the entry
// alpha(p, q) is the localization of the class at p to the point q.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eqsc/polynomial.hpp"

namespace eqsc {

using PointId = std::size_t;

struct FixedPoint {
    PointId id;
    std::string name;
    int lambda; // half the Morse index
};

class CanonicalTable {
public:
    CanonicalTable() = default;

    // Points get ids 0..n-1 in the order given.
    CanonicalTable(std::vector<std::string> variables, const std::vector<std::pair<std::string, int>>& points)
        : variables_(std::move(variables)), zero_(variables_.size()) {
        if (variables_.empty()) throw std::invalid_argument("a table needs at least one variable");
        std::set<std::string> seen(variables_.begin(), variables_.end());
        if (seen.size() != variables_.size()) throw std::invalid_argument("duplicate variable name");
        for (const auto& [name, lambda] : points) {
            if (lambda < 0) throw std::invalid_argument("negative index at point " + name);
            if (by_name_.count(name)) throw std::invalid_argument("duplicate point name " + name);
            by_name_.emplace(name, points_.size());
            points_.push_back({points_.size(), name, lambda});
        }
    }

    std::size_t arity() const noexcept { return variables_.size(); }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<FixedPoint>& points() const noexcept { return points_; }

    const FixedPoint& point(PointId id) const {
        if (id >= points_.size()) throw std::out_of_range("unknown point id " + std::to_string(id));
        return points_[id];
    }

    int lambda(PointId id) const { return point(id).lambda; }
    const std::string& name(PointId id) const { return point(id).name; }

    std::optional<PointId> find(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }

    // Sets alpha(p, q); zero erases the entry.
    void set(PointId p, PointId q, Polynomial value) {
        point(p);
        point(q);
        if (value.arity() != arity()) throw std::invalid_argument("entry arity does not match the table");
        if (value.is_zero()) {
            alpha_.erase({p, q});
        } else {
            alpha_.insert_or_assign({p, q}, std::move(value));
        }
    }

    const Polynomial& alpha(PointId p, PointId q) const {
        auto it = alpha_.find({p, q});
        return it == alpha_.end() ? zero_ : it->second;
    }

    // Nonzero entries keyed by (p, q).
    const std::map<std::pair<PointId, PointId>, Polynomial>& entries() const noexcept { return alpha_; }

    // Point ids sorted by (lambda, id).
    std::vector<PointId> graded_order() const {
        std::vector<PointId> order(points_.size());
        for (PointId i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](PointId a, PointId b) { return points_[a].lambda < points_[b].lambda; });
        return order;
    }

private:
    std::vector<std::string> variables_;
    std::vector<FixedPoint> points_;
    std::map<std::string, PointId> by_name_;
    std::map<std::pair<PointId, PointId>, Polynomial> alpha_;
    Polynomial zero_;
};

// Ordered pairs (r, r') with lambda(r') = lambda(r) + 1 and alpha(r, r') != 0.
inline std::set<std::pair<PointId, PointId>> derive_edges(const CanonicalTable& t) {
    std::set<std::pair<PointId, PointId>> edges;
    for (const auto& [key, value] : t.entries()) {
        const auto [r, s] = key;
        if (t.lambda(s) == t.lambda(r) + 1) edges.insert(key);
    }
    return edges;
}

enum class IssueKind {
    diagonal_zero,     // alpha(p, p) = 0
    not_vanishing,     // alpha(p, q) != 0 with q != p and lambda(q) <= lambda(p)
    not_homogeneous,   // alpha(p, q) not homogeneous of degree lambda(p)
    multiple_minima,   // warning: more than one point with lambda = 0
    minimum_not_unit,  // warning: a lambda = 0 class restricts to something other than 1
    unreachable_nonzero // warning: alpha(p, q) != 0 although no path p -> q exists
};

struct Issue {
    IssueKind kind;
    PointId p;
    PointId q;
    std::string message;
};

struct ValidationReport {
    std::vector<Issue> errors;
    std::vector<Issue> warnings;

    bool ok() const noexcept { return errors.empty(); }

    bool has_error(IssueKind kind, PointId p, PointId q) const {
        for (const auto& e : errors)
            if (e.kind == kind && e.p == p && e.q == q) return true;
        return false;
    }
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport report)
        : std::runtime_error(summarize(report)), report_(std::move(report)) {}

    const ValidationReport& report() const noexcept { return report_; }

private:
    static std::string summarize(const ValidationReport& r) {
        std::string s = "invalid canonical table";
        for (const auto& e : r.errors) s += "\n  " + e.message;
        return s;
    }

    ValidationReport report_;
};

inline ValidationReport validate_table(const CanonicalTable& t) {
    ValidationReport report;
    auto pair_name = [&](PointId p, PointId q) { return "(" + t.name(p) + ", " + t.name(q) + ")"; };

    for (PointId p = 0; p < t.size(); ++p) {
        for (PointId q = 0; q < t.size(); ++q) {
            const Polynomial& a = t.alpha(p, q);
            if (p == q && a.is_zero()) {
                report.errors.push_back({IssueKind::diagonal_zero, p, q,
                                         "diagonal entry alpha" + pair_name(p, q) + " is zero"});
            }
            if (a.is_zero()) continue;
            if (p != q && t.lambda(q) <= t.lambda(p)) {
                report.errors.push_back({IssueKind::not_vanishing, p, q,
                                         "alpha" + pair_name(p, q) + " must vanish since lambda(" + t.name(q) +
                                             ") <= lambda(" + t.name(p) + ")"});
            }
            const auto deg = homogeneous_degree(a);
            if (!deg.ok() || deg.degree != static_cast<std::uint32_t>(t.lambda(p))) {
                report.errors.push_back({IssueKind::not_homogeneous, p, q,
                                         "alpha" + pair_name(p, q) + " is not homogeneous of degree " +
                                             std::to_string(t.lambda(p))});
            }
        }
    }

    std::vector<PointId> minima;
    for (const auto& fp : t.points())
        if (fp.lambda == 0) minima.push_back(fp.id);
    if (minima.size() > 1) {
        report.warnings.push_back({IssueKind::multiple_minima, minima[0], minima[1],
                                   std::to_string(minima.size()) + " points have lambda = 0"});
    }
    const Polynomial one = Polynomial::constant(t.arity(), 1);
    for (PointId m : minima) {
        for (PointId q = 0; q < t.size(); ++q) {
            if (t.alpha(m, q) != one) {
                report.warnings.push_back({IssueKind::minimum_not_unit, m, q,
                                           "alpha" + pair_name(m, q) + " of a lambda = 0 class is not 1"});
            }
        }
    }

    // Reachability over derived edges, processed in graded order (edges raise lambda by one).
    const auto edges = derive_edges(t);
    const auto order = t.graded_order();
    std::vector<std::vector<bool>> reach(t.size(), std::vector<bool>(t.size(), false));
    for (PointId p = 0; p < t.size(); ++p) reach[p][p] = true;
    for (PointId p = 0; p < t.size(); ++p) {
        for (PointId s : order) {
            if (!reach[p][s]) continue;
            for (auto it = edges.lower_bound({s, 0}); it != edges.end() && it->first == s; ++it)
                reach[p][it->second] = true;
        }
    }
    for (const auto& [key, value] : t.entries()) {
        const auto [p, q] = key;
        if (!reach[p][q]) {
            report.warnings.push_back({IssueKind::unreachable_nonzero, p, q,
                                       "alpha" + pair_name(p, q) + " is nonzero but no path connects them"});
        }
    }
    return report;
}

} // namespace eqsc
