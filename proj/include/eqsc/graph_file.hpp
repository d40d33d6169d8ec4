#pragma once

// JSON graph files:
//
//   {
//     "variables": ["t0", "t1", "t2"],
//     "points": [{"name": "p0", "lambda": 0}, ...],
//     "alpha": [{"p": "p1", "q": "p2", "poly": "t0 - t2"}, ...]
//   }
//
// Absent alpha entries are zero. Polynomials use the poly_io grammar.

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "eqsc/moment_graph.hpp"
#include "eqsc/poly_io.hpp"

namespace eqsc {

class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SchemaError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A polynomial that failed to parse, with the table entry it came from.
class EntryParseError : public std::runtime_error {
public:
    EntryParseError(const std::string& where, const ParseError& inner)
        : std::runtime_error(where + ": " + inner.what()), offset_(inner.offset()) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

inline CanonicalTable table_from_json(const nlohmann::json& doc) {
    auto schema = [](const std::string& msg) { return SchemaError("graph file: " + msg); };
    if (!doc.is_object()) throw schema("top level must be an object");
    for (const char* key : {"variables", "points", "alpha"})
        if (!doc.contains(key) || !doc.at(key).is_array()) throw schema(std::string("missing array '") + key + "'");

    static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    std::vector<std::string> vars;
    for (const auto& v : doc.at("variables")) {
        if (!v.is_string()) throw schema("variable names must be strings");
        const auto name = v.get<std::string>();
        if (!std::regex_match(name, ident)) throw schema("invalid variable name '" + name + "'");
        vars.push_back(name);
    }
    if (vars.empty()) throw schema("at least one variable is required");
    if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size()) throw schema("duplicate variable name");

    std::vector<std::pair<std::string, int>> points;
    std::set<std::string> names;
    for (const auto& pt : doc.at("points")) {
        if (!pt.is_object() || !pt.contains("name") || !pt.at("name").is_string() || !pt.contains("lambda") ||
            !pt.at("lambda").is_number_integer())
            throw schema("each point needs a string 'name' and an integer 'lambda'");
        const auto name = pt.at("name").get<std::string>();
        const int lambda = pt.at("lambda").get<int>();
        if (lambda < 0) throw schema("point " + name + " has negative lambda");
        if (!names.insert(name).second) throw schema("duplicate point name " + name);
        points.emplace_back(name, lambda);
    }

    CanonicalTable table(vars, points);
    std::set<std::pair<PointId, PointId>> seen;
    std::size_t index = 0;
    for (const auto& entry : doc.at("alpha")) {
        const std::string where = "alpha[" + std::to_string(index++) + "]";
        if (!entry.is_object()) throw schema(where + " must be an object");
        for (const char* key : {"p", "q", "poly"})
            if (!entry.contains(key) || !entry.at(key).is_string())
                throw schema(where + " needs string field '" + key + "'");
        const auto pname = entry.at("p").get<std::string>();
        const auto qname = entry.at("q").get<std::string>();
        const auto p = table.find(pname);
        const auto q = table.find(qname);
        if (!p) throw schema(where + " refers to unknown point " + pname);
        if (!q) throw schema(where + " refers to unknown point " + qname);
        if (!seen.insert({*p, *q}).second) throw schema(where + " duplicates entry (" + pname + ", " + qname + ")");
        try {
            table.set(*p, *q, parse_poly(entry.at("poly").get<std::string>(), vars));
        } catch (const ParseError& e) {
            throw EntryParseError(where + " (" + pname + ", " + qname + ")", e);
        }
    }
    return table;
}

inline nlohmann::json table_to_json(const CanonicalTable& t) {
    nlohmann::json doc;
    doc["variables"] = t.variables();
    doc["points"] = nlohmann::json::array();
    for (const auto& fp : t.points()) doc["points"].push_back({{"name", fp.name}, {"lambda", fp.lambda}});
    doc["alpha"] = nlohmann::json::array();
    // Rows in point order, entries within a row in point order.
    for (const auto& [key, value] : t.entries()) {
        doc["alpha"].push_back(
            {{"p", t.name(key.first)}, {"q", t.name(key.second)}, {"poly", format_poly(value, t.variables())}});
    }
    return doc;
}

inline nlohmann::json parse_json_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path.string());
    return buf.str();
}

inline CanonicalTable load_table(const std::filesystem::path& path) {
    return table_from_json(parse_json_text(read_text_file(path)));
}

// Loads, validates and builds. Throws IoError, SchemaError, EntryParseError or ValidationError.
inline MomentGraph load_graph(const std::filesystem::path& path) { return build_graph(load_table(path)); }

inline void save_table(const CanonicalTable& t, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << table_to_json(t).dump(2) << '\n';
    if (!out) throw IoError("error writing " + path.string());
}

} // namespace eqsc
