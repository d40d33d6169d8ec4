#include <random>

#include <gtest/gtest.h>

#include "eqsc/cpn.hpp"
#include "eqsc/random_table.hpp"
#include "eqsc/structure_constants.hpp"
#include "test_support.hpp"

namespace eqsc {
namespace {

using testing::P;

RationalFunction R(const std::string& src, std::size_t arity) { return RationalFunction(P(src, arity)); }

const MomentGraph& cp(int n) {
    static std::map<int, MomentGraph> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_graph(cpn_table(n))).first;
    return it->second;
}

// Checks every oracle entry against the dense point oracle at a few random points.
void expect_matches_point_oracle(const MomentGraph& g, PointId p, PointId q, std::uint64_t seed) {
    const auto c = oracle_solve(g, p, q);
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 3; ++trial) {
        const auto v = testing::random_point(rng, g.table().arity());
        const auto dense = testing::point_oracle(g.table(), p, q, v);
        if (!dense) continue;
        for (PointId r = 0; r < g.size(); ++r) {
            const auto cr = c.at(r);
            if (cr.denominator().evaluate(v) == 0) continue;
            EXPECT_TRUE(testing::matches_at(cr, v, (*dense)[r])) << "r = " << g.table().name(r);
        }
    }
}

TEST(OracleSolve, CP2SelfProductOfP1) {
    const auto c = oracle_solve(cp(2), 1, 1);
    EXPECT_EQ(c.coeffs.size(), 2u);
    EXPECT_EQ(c.at(1), R("t0 - t1", 3));
    EXPECT_EQ(c.at(2), R("1", 3));
    expect_matches_point_oracle(cp(2), 1, 1, 1);
}

TEST(OracleSolve, UnitClassIsIdentity) {
    for (int n = 1; n <= 4; ++n) {
        for (PointId q = 0; q <= static_cast<PointId>(n); ++q) {
            const auto c = oracle_solve(cp(n), 0, q);
            ASSERT_EQ(c.coeffs.size(), 1u);
            EXPECT_EQ(c.at(q), RationalFunction(Polynomial::constant(n + 1, 1)));
        }
    }
}

TEST(OracleSolve, CP3SelfProductOfP2) {
    const auto c = oracle_solve(cp(3), 2, 2);
    EXPECT_EQ(c.at(2), R("(t0 - t2)*(t1 - t2)", 4));
    EXPECT_EQ(c.at(3), R("t0 + t1 - t2 - t3", 4));
    EXPECT_EQ(c.coeffs.size(), 2u);
    expect_matches_point_oracle(cp(3), 2, 2, 2);
}

TEST(OracleSolve, AgreesWithDenseSolveOnRandomTables) {
    for (int seed = 0; seed < 20; ++seed) {
        const auto g = build_graph(random_valid_table(1 + seed % 3, {1, 2, 2, 1}, seed));
        for (const auto& [p, q] : all_pairs(g)) expect_matches_point_oracle(g, p, q, seed * 100 + p * 10 + q);
    }
}

TEST(ClosedForms, Base) {
    EXPECT_EQ(cf_base(cp(2), 1, 1), P("t0 - t1", 3));
    EXPECT_EQ(cf_base(cp(2), 1, 2), P("t0 - t2", 3));
    EXPECT_THROW(cf_base(cp(2), 2, 1), std::invalid_argument);
}

TEST(ClosedForms, OffsetOne) {
    EXPECT_EQ(cf_offset1(cp(2), 1, 1, 2), R("1", 3));
    EXPECT_EQ(cf_offset1(cp(3), 2, 2, 3), R("t0 + t1 - t2 - t3", 4));
    EXPECT_EQ(cf_offset1(cp(3), 1, 2, 3), R("1", 4));
    EXPECT_THROW(cf_offset1(cp(3), 1, 1, 3), std::invalid_argument);
}

TEST(ClosedForms, ShiftedOffsetOne) {
    EXPECT_EQ(shift_offset1(cp(4), 2, 2, 3, 4), R("t0 + t1 - t2 - t4", 5));
    EXPECT_EQ(shift_offset1(cp(3), 1, 1, 2, 3), R("1", 4));
    EXPECT_THROW(shift_offset1(cp(3), 1, 1, 2, 2), std::invalid_argument);
}

TEST(ClosedForms, OffsetTwo) {
    for (Form f : {Form::theorem, Form::proof}) {
        EXPECT_EQ(cf_offset2(cp(4), 2, 2, 4, f), R("1", 5));
        EXPECT_TRUE(cf_offset2(cp(3), 1, 1, 3, f).is_zero());
    }
}

TEST(ClosedForms, ShiftedOffsetTwo) {
    // On CP^4, (1,1) at y = p3 -> x = p4: the shifted value solves the
    // localization identity at p4 with c^{p3} as the unknown.
    const auto& g = cp(4);
    const auto shifted = shift_offset2(g, 1, 1, 3, 4);
    const auto oracle = oracle_solve(g, 1, 1);
    const RationalFunction lhs = RationalFunction(g.alpha(1, 4) * g.alpha(1, 4)) -
                                 RationalFunction(g.alpha(1, 1) * g.alpha(1, 4)) -
                                 oracle.at(2) * RationalFunction(g.alpha(2, 4));
    EXPECT_EQ(shifted * RationalFunction(g.alpha(3, 4)), lhs);
    EXPECT_THROW(shift_offset2(g, 1, 1, 3, 3), std::invalid_argument);
    EXPECT_THROW(shift_offset2(g, 1, 1, 4, 4), std::invalid_argument);
}

TEST(ClosedForms, CP5ProductOfP2P3AtTop) {
    // lambda(p5) - lambda(p3) = 2, so this is an offset-2 coefficient.
    EXPECT_EQ(oracle_solve(cp(5), 2, 3).at(5), R("1", 6));
    for (Form f : {Form::theorem, Form::proof}) EXPECT_EQ(cf_offset2(cp(5), 2, 3, 5, f), R("1", 6));
    EXPECT_THROW(cf_offset3(cp(5), 2, 3, 5), std::invalid_argument);
}

TEST(ClosedForms, OffsetThree) {
    for (Form f : {Form::theorem, Form::proof}) {
        EXPECT_EQ(cf_offset3(cp(6), 3, 3, 6, f), R("1", 7));
        EXPECT_TRUE(cf_offset3(cp(4), 1, 1, 4, f).is_zero());
        EXPECT_TRUE(cf_offset3(cp(5), 2, 2, 5, f).is_zero());
    }
    EXPECT_EQ(oracle_solve(cp(6), 3, 3).at(6), R("1", 7));
}

TEST(ClosedForms, CP4SelfProductOfP2AtP4) {
    EXPECT_EQ(oracle_solve(cp(4), 2, 2).at(4), R("1", 5));
}

TEST(ClosedForms, ShiftedOffsetTwoFeedsOffsetThree) {
    // With one in-edge, the theorem form is alpha_y(x)/alpha_x(x) (s c^y - c^y).
    const auto& g = cp(6);
    const auto shifted = shift_offset2(g, 3, 3, 5, 6);
    const auto c5 = cf_offset2(g, 3, 3, 5);
    EXPECT_EQ(RationalFunction(g.alpha(5, 6)) / RationalFunction(g.alpha(6, 6)) * (shifted - c5), R("1", 7));
}

TEST(Vanishing, ByPosition) {
    const auto& g = cp(4);
    EXPECT_EQ(vanishing_by_position(g, 2, 3, 1), Position::forced_zero);
    EXPECT_EQ(vanishing_by_position(g, 2, 3, 2), Position::forced_zero);
    EXPECT_EQ(vanishing_by_position(g, 2, 3, 3), Position::is_alpha_pq);
    EXPECT_EQ(vanishing_by_position(g, 2, 2, 2), Position::is_alpha_pq);
    EXPECT_EQ(vanishing_by_position(g, 2, 3, 4), Position::unconstrained);
    EXPECT_EQ(vanishing_by_position(g, 1, 3, 2), Position::forced_zero);
}

TEST(EmptyValency, TheoremFormsReturnZero) {
    // Point y at level 2 with no in-edges: all of its lower restrictions vanish.
    CanonicalTable t({"t0", "t1"}, {{"o", 0}, {"a", 1}, {"y", 2}});
    t.set(0, 0, P("1", 2));
    t.set(0, 1, P("1", 2));
    t.set(0, 2, P("1", 2));
    t.set(1, 1, P("t0", 2));
    t.set(2, 2, P("t0*t1", 2));
    const auto g = build_graph(t);
    ASSERT_TRUE(g.valency(2, Sign::minus).empty());
    EXPECT_TRUE(cf_offset2(g, 0, 0, 2, Form::theorem).is_zero());
    EXPECT_EQ(cf_offset2(g, 0, 0, 2, Form::proof), oracle_solve(g, 0, 0).at(2));
    EXPECT_TRUE(oracle_solve(g, 0, 0).at(2).is_zero());
}

TEST(OffsetThree, EdgeHypothesisHoldsOnChains) {
    for (int n = 3; n <= 6; ++n)
        for (PointId q = 0; q + 3 <= static_cast<PointId>(n); ++q) EXPECT_TRUE(offset3_edge_hypothesis(cp(n), q, q + 3));
}

// Invariants from the defining identity and the vanishing lemmas, on CP^n and random tables.
void check_invariants(const MomentGraph& g) {
    const std::size_t arity = g.table().arity();
    for (PointId p = 0; p < g.size(); ++p) {
        for (PointId q = 0; q < g.size(); ++q) {
            const auto c = oracle_solve(g, p, q);
            const auto swapped = oracle_solve(g, q, p);
            for (PointId r = 0; r < g.size(); ++r) EXPECT_EQ(c.at(r), swapped.at(r));

            for (PointId s = 0; s < g.size(); ++s) {
                RationalFunction sum(arity);
                for (const auto& [r, cr] : c.coeffs) sum += cr * RationalFunction(g.alpha(r, s));
                EXPECT_EQ(sum, RationalFunction(g.alpha(p, s) * g.alpha(q, s)));
            }
            for (PointId r = 0; r < g.size(); ++r) {
                switch (vanishing_by_position(g, c.p, c.q, r)) {
                case Position::forced_zero: EXPECT_TRUE(c.at(r).is_zero()); break;
                case Position::is_alpha_pq: EXPECT_EQ(c.at(r), RationalFunction(g.alpha(c.p, c.q))); break;
                case Position::unconstrained: break;
                }
            }
        }
    }
}

TEST(Invariants, CPn) {
    for (int n = 1; n <= 4; ++n) check_invariants(cp(n));
}

class RandomTables : public ::testing::TestWithParam<int> {};

TEST_P(RandomTables, InvariantsAndAgreement) {
    const int seed = GetParam();
    const std::vector<std::vector<int>> shapes = {{1, 2, 1}, {1, 2, 2, 1}, {1, 3, 2, 1}, {2, 2, 2}, {1, 1, 2, 2, 1}};
    const auto g = build_graph(random_valid_table(1 + seed % 4, shapes[seed % shapes.size()], seed));
    check_invariants(g);

    for (const auto& [p, q] : all_pairs(g)) {
        const auto c = oracle_solve(g, p, q);
        for (PointId r = 0; r < g.size(); ++r) {
            const int off = g.lambda(r) - g.lambda(q);
            if (off == 1) {
                EXPECT_EQ(cf_offset1(g, p, q, r), c.at(r));
                if (!g.has_edge(q, r)) EXPECT_TRUE(c.at(r).is_zero());
            } else if (off == 2) {
                EXPECT_EQ(cf_offset2(g, p, q, r, Form::theorem), c.at(r));
                EXPECT_EQ(cf_offset2(g, p, q, r, Form::proof), c.at(r));
                if (!g.path_exists(q, r)) EXPECT_TRUE(c.at(r).is_zero());
            } else if (off == 3) {
                EXPECT_EQ(cf_offset3(g, p, q, r, Form::proof), c.at(r));
                if (offset3_edge_hypothesis(g, q, r)) EXPECT_EQ(cf_offset3(g, p, q, r, Form::theorem), c.at(r));
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomTables, ::testing::Range(0, 30));

TEST(ShiftExpr, LeafSubstitutionReproducesShiftedClosedForms) {
    // s_z^y applied to the offset-1 localization expression equals shift_offset1,
    // and s_y^x applied to the offset-2 expression (with unshifted inner constants) equals shift_offset2.
    const auto& g = cp(4);
    using G = GeneratorExpr;
    const PointId p = 1, q = 1;
    const G base = G::atom(p, q);
    const G c2 = localization_expr(p, q, 2, {{q, base}});
    EXPECT_EQ(c2.evaluate(g.table()), cf_offset1(g, p, q, 2));
    EXPECT_EQ(c2.shift(2, 3).evaluate(g.table()), shift_offset1(g, p, q, 2, 3));

    // Freeze c^{p2} as a literal so the shift only moves localization arguments.
    const auto c2_value = cf_offset1(g, p, q, 2).to_polynomial();
    ASSERT_TRUE(c2_value.has_value());
    ASSERT_TRUE(c2_value->is_constant());
    const G c3 = localization_expr(p, q, 3, {{q, base}, {2, G::constant(c2_value->constant_term())}});
    EXPECT_EQ(c3.evaluate(g.table()), cf_offset2(g, p, q, 3, Form::proof));
    EXPECT_EQ(c3.shift(3, 4).evaluate(g.table()), shift_offset2(g, p, q, 3, 4));
}

TEST(ShiftExpr, SharesUntouchedSubtreesAndPrints) {
    CanonicalTable t = cpn_table(2);
    using G = GeneratorExpr;
    const G e = G::atom(1, 1) * G::atom(2, 2) + G::constant(Rational(1, 2));
    EXPECT_EQ(e.shift(1, 2).to_string(t), "(a_p1(p2)*a_p2(p2) + 1/2)");
    EXPECT_EQ(e.shift(0, 2).to_string(t), e.to_string(t));
    EXPECT_THROW((G::atom(1, 1) / G::atom(2, 1)).evaluate(t), std::domain_error);
}

} // namespace
} // namespace eqsc
