#pragma once

// Formal expressions over the localization generators alpha_P(Q).
//
// The shifting operator s_a^b acts on these trees by leaf substitution: every
// atom alpha_P(a) becomes alpha_P(b). This is always well defined on formal
// expressions, whereas acting on evaluated polynomials would require the map to
// respect every relation among the generators.

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eqsc/canonical_table.hpp"
#include "eqsc/rational_function.hpp"

namespace eqsc {

class GeneratorExpr {
public:
    enum class Kind { atom, constant, add, sub, mul, div };

    GeneratorExpr() : GeneratorExpr(constant(0)) {}

    static GeneratorExpr atom(PointId cls, PointId at) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::atom;
        n->cls = cls;
        n->at = at;
        return GeneratorExpr(std::move(n));
    }

    static GeneratorExpr constant(const Rational& value) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::constant;
        n->value = value;
        return GeneratorExpr(std::move(n));
    }

    Kind kind() const noexcept { return node_->kind; }

    friend GeneratorExpr operator+(const GeneratorExpr& a, const GeneratorExpr& b) { return binary(Kind::add, a, b); }
    friend GeneratorExpr operator-(const GeneratorExpr& a, const GeneratorExpr& b) { return binary(Kind::sub, a, b); }
    friend GeneratorExpr operator*(const GeneratorExpr& a, const GeneratorExpr& b) { return binary(Kind::mul, a, b); }
    friend GeneratorExpr operator/(const GeneratorExpr& a, const GeneratorExpr& b) { return binary(Kind::div, a, b); }

    // s_from^to: replaces every atom alpha_P(from) by alpha_P(to). Untouched
    // subtrees are shared with the original.
    GeneratorExpr shift(PointId from, PointId to) const {
        std::unordered_map<const Node*, NodePtr> memo;
        return GeneratorExpr(shift_node(node_, from, to, memo));
    }

    // Evaluates against a table; shared subtrees are evaluated once.
    RationalFunction evaluate(const CanonicalTable& table) const {
        std::unordered_map<const Node*, RationalFunction> memo;
        return eval_node(*node_, table, memo);
    }

    std::string to_string(const CanonicalTable& table) const { return print(*node_, table); }

private:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Node {
        Kind kind = Kind::constant;
        Rational value;
        PointId cls = 0;
        PointId at = 0;
        NodePtr lhs;
        NodePtr rhs;
    };

    explicit GeneratorExpr(NodePtr node) : node_(std::move(node)) {}

    static GeneratorExpr binary(Kind kind, const GeneratorExpr& a, const GeneratorExpr& b) {
        auto n = std::make_shared<Node>();
        n->kind = kind;
        n->lhs = a.node_;
        n->rhs = b.node_;
        return GeneratorExpr(std::move(n));
    }

    static NodePtr shift_node(const NodePtr& n, PointId from, PointId to,
                              std::unordered_map<const Node*, NodePtr>& memo) {
        if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
        NodePtr out = n;
        if (n->kind == Kind::atom) {
            if (n->at == from) {
                auto m = std::make_shared<Node>(*n);
                m->at = to;
                out = std::move(m);
            }
        } else if (n->kind != Kind::constant) {
            NodePtr l = shift_node(n->lhs, from, to, memo);
            NodePtr r = shift_node(n->rhs, from, to, memo);
            if (l != n->lhs || r != n->rhs) {
                auto m = std::make_shared<Node>(*n);
                m->lhs = std::move(l);
                m->rhs = std::move(r);
                out = std::move(m);
            }
        }
        memo.emplace(n.get(), out);
        return out;
    }

    static RationalFunction eval_node(const Node& n, const CanonicalTable& table,
                                      std::unordered_map<const Node*, RationalFunction>& memo) {
        if (auto it = memo.find(&n); it != memo.end()) return it->second;
        RationalFunction out(table.arity());
        switch (n.kind) {
        case Kind::atom: out = RationalFunction(table.alpha(n.cls, n.at)); break;
        case Kind::constant: out = RationalFunction(Polynomial::constant(table.arity(), n.value)); break;
        case Kind::add: out = eval_node(*n.lhs, table, memo) + eval_node(*n.rhs, table, memo); break;
        case Kind::sub: out = eval_node(*n.lhs, table, memo) - eval_node(*n.rhs, table, memo); break;
        case Kind::mul: out = eval_node(*n.lhs, table, memo) * eval_node(*n.rhs, table, memo); break;
        case Kind::div: out = eval_node(*n.lhs, table, memo) / eval_node(*n.rhs, table, memo); break;
        }
        memo.emplace(&n, out);
        return out;
    }

    static std::string print(const Node& n, const CanonicalTable& table) {
        switch (n.kind) {
        case Kind::atom: return "a_" + table.name(n.cls) + "(" + table.name(n.at) + ")";
        case Kind::constant: return n.value.get_str();
        case Kind::add: return "(" + print(*n.lhs, table) + " + " + print(*n.rhs, table) + ")";
        case Kind::sub: return "(" + print(*n.lhs, table) + " - " + print(*n.rhs, table) + ")";
        case Kind::mul: return print(*n.lhs, table) + "*" + print(*n.rhs, table);
        case Kind::div: return "(" + print(*n.lhs, table) + ")/(" + print(*n.rhs, table) + ")";
        }
        return {};
    }

    NodePtr node_;
};

// The localization identity at `target`, solved for the coefficient there:
//   [alpha_p(target) alpha_q(target) - sum_r c^r alpha_r(target)] / alpha_target(target)
// where `lower` supplies the expressions c^r for every r below target that can
// contribute (including r = q).
inline GeneratorExpr localization_expr(PointId p, PointId q, PointId target,
                                       const std::vector<std::pair<PointId, GeneratorExpr>>& lower) {
    using G = GeneratorExpr;
    G numer = G::atom(p, target) * G::atom(q, target);
    for (const auto& [r, c] : lower) numer = numer - c * G::atom(r, target);
    return numer / G::atom(target, target);
}

} // namespace eqsc
