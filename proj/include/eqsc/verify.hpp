#pragma once

// Cross-checks every closed form against the oracle solve.

#include <algorithm>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eqsc/poly_io.hpp"
#include "eqsc/structure_constants.hpp"

namespace eqsc {

struct VerifyRecord {
    PointId p;
    PointId q;
    PointId r;
    int offset;       // lambda(r) - lambda(q)
    std::string form; // vanishing, base, offset1, offset2-theorem, offset2-proof, offset3-theorem, offset3-proof
    RationalFunction oracle;
    RationalFunction closed;
    bool agree;
    bool divisible;         // oracle value is a polynomial
    bool hypothesis = true; // offset3-theorem only: offset3_edge_hypothesis(q, r)
};

struct VerifyReport {
    std::vector<VerifyRecord> records;

    std::size_t disagreements() const {
        return static_cast<std::size_t>(
            std::count_if(records.begin(), records.end(), [](const VerifyRecord& r) { return !r.agree; }));
    }

    bool all_agree() const { return disagreements() == 0; }
};

struct VerifyOptions {
    std::vector<std::pair<PointId, PointId>> pairs; // empty: every unordered pair
    unsigned threads = 1;
};

inline std::vector<std::pair<PointId, PointId>> all_pairs(const MomentGraph& g) {
    std::vector<std::pair<PointId, PointId>> pairs;
    const auto& order = g.graded_order();
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i; j < order.size(); ++j) pairs.push_back(normalize_pair(g, order[i], order[j]));
    return pairs;
}

inline std::vector<VerifyRecord> verify_pair(const MomentGraph& g, PointId p, PointId q) {
    std::tie(p, q) = normalize_pair(g, p, q);
    const StructureConstantSet oracle = oracle_solve(g, p, q);
    std::vector<VerifyRecord> out;
    auto record = [&](PointId r, std::string form, RationalFunction closed) {
        RationalFunction o = oracle.at(r);
        const bool agree = o == closed;
        const bool divisible = o.to_polynomial().has_value();
        out.push_back({p, q, r, g.lambda(r) - g.lambda(q), std::move(form), std::move(o), std::move(closed), agree,
                       divisible});
    };
    for (PointId r : g.graded_order()) {
        switch (vanishing_by_position(g, p, q, r)) {
        case Position::forced_zero: record(r, "vanishing", RationalFunction(g.table().arity())); continue;
        case Position::is_alpha_pq: record(r, "base", cf_base(g, p, q)); continue;
        case Position::unconstrained: break;
        }
        switch (g.lambda(r) - g.lambda(q)) {
        case 1: record(r, "offset1", cf_offset1(g, p, q, r)); break;
        case 2:
            record(r, "offset2-theorem", cf_offset2(g, p, q, r, Form::theorem));
            record(r, "offset2-proof", cf_offset2(g, p, q, r, Form::proof));
            break;
        case 3:
            record(r, "offset3-theorem", cf_offset3(g, p, q, r, Form::theorem));
            out.back().hypothesis = offset3_edge_hypothesis(g, q, r);
            record(r, "offset3-proof", cf_offset3(g, p, q, r, Form::proof));
            break;
        default: break; // no closed form beyond offset 3
        }
    }
    return out;
}

// Pairs are independent; with threads > 1 they are spread over worker threads
// and the records are still returned in pair order.
inline VerifyReport verify(const MomentGraph& g, const VerifyOptions& options = {}) {
    const auto pairs = options.pairs.empty() ? all_pairs(g) : options.pairs;
    std::vector<std::vector<VerifyRecord>> per_pair(pairs.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(pairs.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i) per_pair[i] = verify_pair(g, pairs[i].first, pairs[i].second);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < pairs.size(); i += workers)
                    per_pair[i] = verify_pair(g, pairs[i].first, pairs[i].second);
            });
        }
    }
    VerifyReport report;
    for (auto& recs : per_pair)
        for (auto& r : recs) report.records.push_back(std::move(r));
    return report;
}

inline std::string format_value(const RationalFunction& f, const std::vector<std::string>& vars) {
    if (auto poly = f.to_polynomial()) return format_poly(*poly, vars);
    return "(" + format_poly(f.numerator(), vars) + ") / (" + format_poly(f.denominator(), vars) + ")";
}

inline nlohmann::json report_to_json(const VerifyReport& report, const CanonicalTable& t) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) {
        records.push_back({{"p", t.name(r.p)},
                           {"q", t.name(r.q)},
                           {"r", t.name(r.r)},
                           {"offset", r.offset},
                           {"form", r.form},
                           {"oracle", format_value(r.oracle, t.variables())},
                           {"closed_form", format_value(r.closed, t.variables())},
                           {"agree", r.agree},
                           {"polynomial", r.divisible},
                           {"edge_hypothesis", r.hypothesis}});
    }
    return {{"records", records},
            {"total", report.records.size()},
            {"disagreements", report.disagreements()},
            {"all_agree", report.all_agree()}};
}

} // namespace eqsc
