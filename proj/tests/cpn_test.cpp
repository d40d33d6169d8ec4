#include <gtest/gtest.h>

#include "eqsc/cpn.hpp"
#include "test_support.hpp"

namespace eqsc {
namespace {

using testing::P;

TEST(GenerateCpn, Entries) {
    const auto inst = generate_cpn(2);
    EXPECT_EQ(inst.table().alpha(1, 1), P("t0 - t1", 3));
    EXPECT_EQ(inst.table().alpha(1, 2), P("t0 - t2", 3));
    EXPECT_EQ(inst.table().alpha(2, 2), P("(t0 - t2)*(t1 - t2)", 3));
    EXPECT_TRUE(inst.table().alpha(2, 1).is_zero());
    EXPECT_EQ(generate_cpn(3).table().alpha(2, 3), P("(t0 - t3)*(t1 - t3)", 4));
    for (int n = 1; n <= 6; ++n) {
        const auto g = generate_cpn(n);
        for (PointId k = 0; k <= static_cast<PointId>(n); ++k)
            EXPECT_EQ(g.table().alpha(0, k), Polynomial::constant(n + 1, 1));
        EXPECT_TRUE(validate_table(g.table()).ok());
    }
    EXPECT_THROW(generate_cpn(0), std::invalid_argument);
}

TEST(DdStep, Examples) {
    const auto cp2 = generate_cpn(2);
    EXPECT_EQ(dd_step(cp2, GeneratorExpr::atom(1, 1), 2), P("1", 3));

    const auto cp3 = generate_cpn(3);
    EXPECT_EQ(dd_step(cp3, GeneratorExpr::atom(2, 2), 3), P("t0 + t1 - t2 - t3", 4));

    const auto cp4 = generate_cpn(4);
    const auto exprs = cpn_constant_exprs(cp4, 2, 2);
    EXPECT_EQ(exprs[1].evaluate(cp4.table()), RationalFunction(P("t0 + t1 - t2 - t3", 5)));
    EXPECT_EQ(exprs[1].shift(3, 4).evaluate(cp4.table()), RationalFunction(P("t0 + t1 - t2 - t4", 5)));
    EXPECT_EQ(dd_step(cp4, exprs[1], 4), P("1", 5));
    EXPECT_THROW(dd_step(cp4, exprs[1], 5), std::out_of_range);
}

TEST(DdTable, Examples) {
    const auto cp2 = generate_cpn(2);
    const auto c11 = dd_table(cp2, 1, 1);
    EXPECT_EQ(c11.coeffs.size(), 2u);
    EXPECT_EQ(c11.at(1), RationalFunction(P("t0 - t1", 3)));
    EXPECT_EQ(c11.at(2), RationalFunction(P("1", 3)));
    const auto c12 = dd_table(cp2, 1, 2);
    EXPECT_EQ(c12.coeffs.size(), 1u);
    EXPECT_EQ(c12.at(2), RationalFunction(P("t0 - t2", 3)));
    EXPECT_EQ(dd_table(generate_cpn(5), 2, 3).at(5), RationalFunction(P("1", 6)));
    EXPECT_THROW(dd_table(cp2, 2, 1), std::out_of_range);
}

class CpnByN : public ::testing::TestWithParam<int> {};

TEST_P(CpnByN, RecursionMatchesOracleAndClosedForms) {
    const int n = GetParam();
    const auto inst = generate_cpn(n);
    const auto& g = inst.graph;
    for (int i = 0; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const auto dd = dd_table(inst, i, j);
            const auto oracle = oracle_solve(g, i, j);
            for (PointId k = 0; k <= static_cast<PointId>(n); ++k) {
                const auto o = oracle.at(k);
                ASSERT_TRUE(o.to_polynomial().has_value());
                EXPECT_EQ(dd.at(k), o) << "c_{p" << i << ",p" << j << "}^p" << k;
                switch (static_cast<int>(k) - j) {
                case 0: EXPECT_EQ(RationalFunction(cf_base(g, i, j)), o); break;
                case 1: EXPECT_EQ(cf_offset1(g, i, j, k), o); break;
                case 2:
                    EXPECT_EQ(cf_offset2(g, i, j, k, Form::theorem), o);
                    EXPECT_EQ(cf_offset2(g, i, j, k, Form::proof), o);
                    break;
                case 3:
                    EXPECT_EQ(cf_offset3(g, i, j, k, Form::theorem), o);
                    EXPECT_EQ(cf_offset3(g, i, j, k, Form::proof), o);
                    break;
                default: break;
                }
            }
        }
    }
}

TEST_P(CpnByN, DegreeLaw) {
    const int n = GetParam();
    const auto inst = generate_cpn(n);
    for (int i = 0; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const auto c = dd_table(inst, i, j);
            for (int k = 0; k <= n; ++k) {
                const auto v = c.at(k).to_polynomial();
                ASSERT_TRUE(v.has_value());
                const int predicted = i + j - k;
                if (predicted < 0) {
                    EXPECT_TRUE(v->is_zero());
                } else if (!v->is_zero()) {
                    EXPECT_EQ(homogeneous_degree(*v), (HomogeneousDegree{DegreeStatus::homogeneous, predicted}));
                }
            }
        }
    }
}

TEST_P(CpnByN, NonEquivariantLimit) {
    // Setting every t to 0 leaves the classical truncated polynomial ring: sigma_i sigma_j = sigma_{i+j}.
    const int n = GetParam();
    const auto inst = generate_cpn(n);
    const std::vector<Rational> zero(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const auto c = dd_table(inst, i, j);
            for (int k = 0; k <= n; ++k) EXPECT_EQ(c.at(k).evaluate(zero), Rational(i + j == k ? 1 : 0));
        }
}

INSTANTIATE_TEST_SUITE_P(N, CpnByN, ::testing::Range(1, 7));

} // namespace
} // namespace eqsc
