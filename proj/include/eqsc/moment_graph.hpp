#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "eqsc/canonical_table.hpp"

namespace eqsc {

enum class Sign { minus, plus };

using Path = std::vector<PointId>;

// Directed graph on the fixed points, derived from a validated table.
// Edges always raise lambda by exactly one, so the graph is a graded DAG.
class MomentGraph {
public:
    explicit MomentGraph(CanonicalTable table) : table_(std::make_shared<const CanonicalTable>(std::move(table))) {
        auto report = validate_table(*table_);
        if (!report.ok()) throw ValidationError(std::move(report));
        edges_ = derive_edges(*table_);
        in_.resize(table_->size());
        out_.resize(table_->size());
        for (const auto& [r, s] : edges_) {
            out_[r].push_back(s);
            in_[s].push_back(r);
        }
        order_ = table_->graded_order();
        reach_.assign(table_->size(), std::vector<bool>(table_->size(), false));
        for (PointId p = 0; p < table_->size(); ++p) {
            reach_[p][p] = true;
            for (PointId s : order_)
                if (reach_[p][s])
                    for (PointId t : out_[s]) reach_[p][t] = true;
        }
    }

    const CanonicalTable& table() const noexcept { return *table_; }
    std::size_t size() const noexcept { return table_->size(); }
    int lambda(PointId p) const { return table_->lambda(p); }
    const Polynomial& alpha(PointId p, PointId q) const { return table_->alpha(p, q); }
    const std::set<std::pair<PointId, PointId>>& edges() const noexcept { return edges_; }
    bool has_edge(PointId r, PointId s) const { return edges_.count({r, s}) != 0; }

    // Point ids sorted by (lambda, id).
    const std::vector<PointId>& graded_order() const noexcept { return order_; }

    // V_p^- (in-neighbours) or V_p^+ (out-neighbours), ascending by id.
    const std::vector<PointId>& valency(PointId p, Sign sign) const {
        table_->point(p);
        return sign == Sign::minus ? in_[p] : out_[p];
    }

    bool path_exists(PointId p, PointId q) const {
        table_->point(p);
        table_->point(q);
        return reach_[p][q];
    }

    // Every directed path p = r_0 -> ... -> r_k = q; {p} itself when p == q.
    std::vector<Path> paths(PointId p, PointId q) const {
        table_->point(p);
        table_->point(q);
        std::vector<Path> found;
        Path current{p};
        collect(q, current, found);
        return found;
    }

    std::vector<PointId> points_at_level(int lambda) const {
        std::vector<PointId> out;
        for (PointId p : order_)
            if (table_->lambda(p) == lambda) out.push_back(p);
        return out;
    }

private:
    void collect(PointId target, Path& current, std::vector<Path>& found) const {
        const PointId at = current.back();
        if (at == target) {
            found.push_back(current);
            return;
        }
        for (PointId next : out_[at]) {
            if (!reach_[next][target]) continue;
            current.push_back(next);
            collect(target, current, found);
            current.pop_back();
        }
    }

    std::shared_ptr<const CanonicalTable> table_;
    std::set<std::pair<PointId, PointId>> edges_;
    std::vector<std::vector<PointId>> in_;
    std::vector<std::vector<PointId>> out_;
    std::vector<PointId> order_;
    std::vector<std::vector<bool>> reach_;
};

// Validates and builds; throws ValidationError on an invalid table.
inline MomentGraph build_graph(CanonicalTable table) { return MomentGraph(std::move(table)); }

} // namespace eqsc
