#pragma once

// Command-line front end. Kept in a header so tests can drive it with string
// streams instead of spawning processes.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqsc/cpn.hpp"
#include "eqsc/graph_file.hpp"
#include "eqsc/verify.hpp"

namespace eqsc::cli {

enum ExitCode : int { ok = 0, usage = 1, io = 2, parse = 3, validation = 4, disagreement = 5 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_input(const std::string& file, std::istream& in) {
    if (file.empty() || file == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return read_text_file(file);
}

inline PointId resolve(const CanonicalTable& t, const std::string& name) {
    if (auto id = t.find(name)) return *id;
    throw UsageError("unknown point '" + name + "'");
}

inline const char* kind_name(IssueKind k) {
    switch (k) {
    case IssueKind::diagonal_zero: return "diagonal_zero";
    case IssueKind::not_vanishing: return "not_vanishing";
    case IssueKind::not_homogeneous: return "not_homogeneous";
    case IssueKind::multiple_minima: return "multiple_minima";
    case IssueKind::minimum_not_unit: return "minimum_not_unit";
    case IssueKind::unreachable_nonzero: return "unreachable_nonzero";
    }
    return "?";
}

inline nlohmann::json issues_json(const std::vector<Issue>& issues, const CanonicalTable& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& i : issues)
        arr.push_back({{"kind", kind_name(i.kind)}, {"p", t.name(i.p)}, {"q", t.name(i.q)}, {"message", i.message}});
    return arr;
}

inline std::string join_path(const Path& path, const CanonicalTable& t) {
    std::string s;
    for (std::size_t i = 0; i < path.size(); ++i) s += (i ? " -> " : "") + t.name(path[i]);
    return s;
}

inline std::vector<std::pair<PointId, PointId>> parse_pairs(const std::string& spec, const CanonicalTable& t) {
    std::vector<std::pair<PointId, PointId>> pairs;
    if (spec.empty() || spec == "all") return pairs;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("--pairs expects 'all' or A:B[,C:D...]");
        pairs.emplace_back(resolve(t, item.substr(0, colon)), resolve(t, item.substr(colon + 1)));
    }
    return pairs;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equivariant structure constants from canonical class tables"};
    app.footer("Exit codes: 0 success, 1 usage, 2 I/O, 3 parse/schema, 4 validation, 5 verification disagreement.");
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));

    std::string file = "-";
    auto* validate = app.add_subcommand("validate", "Check a graph file against the canonical class conditions");
    auto* edges = app.add_subcommand("edges", "List moment graph edges");
    auto* paths = app.add_subcommand("paths", "Enumerate directed paths between two points");
    auto* compute = app.add_subcommand("compute", "Structure constants c_{pq}^r by the triangular solve");
    auto* verify_cmd = app.add_subcommand("verify", "Check every closed form against the triangular solve");
    auto* cpn = app.add_subcommand("cpn", "Write the graph file of CP^n");
    for (auto* sub : {validate, edges, paths, compute, verify_cmd}) {
        sub->add_option("file", file, "Graph file ('-' or omitted: stdin)");
        sub->fallthrough();
    }
    cpn->fallthrough();

    std::string from, to, p_name, q_name, r_name, pairs_spec = "all";
    unsigned threads = 1;
    paths->add_option("--from", from, "Start point")->required();
    paths->add_option("--to", to, "End point")->required();
    compute->add_option("--p", p_name, "First class")->required();
    compute->add_option("--q", q_name, "Second class")->required();
    compute->add_option("--r", r_name, "Only report this coefficient");
    verify_cmd->add_option("--pairs", pairs_spec, "'all' or a list A:B[,C:D...]");
    verify_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
    int n = 0;
    std::string out_path;
    cpn->add_option("--n", n, "Dimension n >= 1")->required()->check(CLI::PositiveNumber);
    cpn->add_option("--out", out_path, "Output file (default: stdout)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    const bool json = format == "json";

    try {
        if (cpn->parsed()) {
            const CanonicalTable t = cpn_table(n);
            if (out_path.empty()) {
                out << table_to_json(t).dump(2) << '\n';
            } else {
                save_table(t, out_path);
            }
            return ok;
        }

        const CanonicalTable table = table_from_json(parse_json_text(detail::read_input(file, in)));

        if (validate->parsed()) {
            const ValidationReport report = validate_table(table);
            if (json) {
                out << nlohmann::json{{"valid", report.ok()},
                                      {"errors", detail::issues_json(report.errors, table)},
                                      {"warnings", detail::issues_json(report.warnings, table)}}
                           .dump(2)
                    << '\n';
            } else {
                for (const auto& e : report.errors) out << "error: " << e.message << '\n';
                for (const auto& w : report.warnings) out << "warning: " << w.message << '\n';
                if (report.ok())
                    out << "valid: " << table.size() << " points, " << table.entries().size() << " nonzero entries\n";
            }
            return report.ok() ? ok : validation;
        }

        const MomentGraph g = build_graph(table);
        const std::vector<std::string>& vars = table.variables();

        if (edges->parsed()) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& [a, b] : g.edges()) {
                if (json) {
                    arr.push_back({table.name(a), table.name(b)});
                } else {
                    out << table.name(a) << " -> " << table.name(b) << '\n';
                }
            }
            if (json) out << nlohmann::json{{"edges", arr}}.dump(2) << '\n';
            return ok;
        }

        if (paths->parsed()) {
            const auto found = g.paths(detail::resolve(table, from), detail::resolve(table, to));
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& path : found) {
                    nlohmann::json names = nlohmann::json::array();
                    for (PointId id : path) names.push_back(table.name(id));
                    arr.push_back(names);
                }
                out << nlohmann::json{{"from", from}, {"to", to}, {"paths", arr}}.dump(2) << '\n';
            } else if (found.empty()) {
                out << "no path from " << from << " to " << to << '\n';
            } else {
                for (const auto& path : found) out << detail::join_path(path, table) << '\n';
            }
            return ok;
        }

        if (compute->parsed()) {
            const PointId p = detail::resolve(table, p_name);
            const PointId q = detail::resolve(table, q_name);
            const StructureConstantSet c = oracle_solve(g, p, q);
            std::vector<PointId> targets;
            if (!r_name.empty()) {
                targets.push_back(detail::resolve(table, r_name));
            } else {
                for (PointId r : g.graded_order())
                    if (c.coeffs.count(r)) targets.push_back(r);
            }
            nlohmann::json arr = nlohmann::json::array();
            for (PointId r : targets) {
                const RationalFunction v = c.at(r);
                const bool poly = v.to_polynomial().has_value();
                if (json) {
                    arr.push_back({{"r", table.name(r)}, {"value", format_value(v, vars)}, {"polynomial", poly}});
                } else {
                    out << "c[" << table.name(r) << "] = " << format_value(v, vars) << (poly ? "" : "  NONPOLY") << '\n';
                }
            }
            if (json)
                out << nlohmann::json{{"p", table.name(c.p)}, {"q", table.name(c.q)}, {"coefficients", arr}}.dump(2)
                    << '\n';
            return ok;
        }

        if (verify_cmd->parsed()) {
            const VerifyReport report = verify(g, {detail::parse_pairs(pairs_spec, table), threads});
            if (json) {
                out << report_to_json(report, table).dump(2) << '\n';
            } else {
                for (const auto& r : report.records) {
                    out << "c_{" << table.name(r.p) << "," << table.name(r.q) << "}^" << table.name(r.r) << "  "
                        << r.form << "  " << (r.agree ? "agree" : "DISAGREE") << "  " << format_value(r.oracle, vars);
                    if (!r.agree) out << "  closed form: " << format_value(r.closed, vars);
                    if (!r.divisible) out << "  NONPOLY";
                    out << '\n';
                }
                out << report.records.size() << " checks, " << report.disagreements() << " disagreements\n";
            }
            return report.all_agree() ? ok : disagreement;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return io;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << '\n';
        return parse;
    } catch (const EntryParseError& e) {
        err << "error: " << e.what() << '\n';
        return parse;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return validation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

inline int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv + 1, argv + argc), in, out, err);
}

} // namespace eqsc::cli
