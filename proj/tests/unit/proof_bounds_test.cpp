#include <gtest/gtest.h>

#include <cmath>

#include "chroma/criticality.hpp"
#include "chroma/proof_bounds.hpp"
#include "test_support.hpp"

using namespace chroma;
using namespace chroma::testing;

namespace {

bool has_pair(const LPSolution& s, int j0, int j1) {
    for (auto [a, b] : s.argmax)
        if (a == j0 && b == j1) return true;
    return false;
}

/// Direct search over a fine grid of feasible splits for the k = 4 objective.
K4Split k4_grid(int n, double budget, double step) {
    const double total = n - 4;
    K4Split best{};
    double best_value = -INFINITY;
    for (double s1 = 0; s1 <= total + 1e-12; s1 += step)
        for (double s2 = 0; s1 + s2 <= total + 1e-12; s2 += step) {
            const double s3 = std::max(0.0, total - s1 - s2);
            if (3 * s1 + s2 > budget + 1e-12) continue;
            const K4Split s{s1, s2, s3};
            if (k4_objective(s) > best_value) {
                best_value = k4_objective(s);
                best = s;
            }
        }
    return best;
}

}  // namespace

TEST(LP, ClosedFormExamples) {
    EXPECT_DOUBLE_EQ(lp_closed_form(LPInstance::make(4, 4, 6)), 3.0);
    EXPECT_DOUBLE_EQ(lp_closed_form(LPInstance::make(5, 5, 12)), 4.0);
    EXPECT_DOUBLE_EQ(lp_closed_form(LPInstance::make(4, 4, 3)), 2.5);
    EXPECT_THROW(LPInstance::make(3, 3, 3), std::invalid_argument);
    EXPECT_THROW(LPInstance::make(4, 5, 5), std::invalid_argument);
    EXPECT_THROW(LPInstance::make(4, 4, 2.9), std::invalid_argument);
    EXPECT_THROW(LPInstance::make(4, 4, 9.1), std::invalid_argument);
}

TEST(LP, BruteForceExamples) {
    const auto tie = lp_brute_force(LPInstance::make(4, 4, 6), 10);
    EXPECT_NEAR(tie.value, 3.0, 1e-12);
    EXPECT_TRUE(has_pair(tie, 1, 2));
    EXPECT_TRUE(has_pair(tie, 2, 3));

    const auto low = lp_brute_force(LPInstance::make(4, 4, 4.5), 10);
    EXPECT_NEAR(low.value, 2.75, 1e-12);
    EXPECT_EQ(low.j0, 1);
    EXPECT_EQ(low.j1, 2);
    ASSERT_EQ(low.argmax.size(), 1u);

    const auto high = lp_brute_force(LPInstance::make(5, 5, 12), 10);
    EXPECT_NEAR(high.value, 4.0, 1e-12);
    EXPECT_EQ(high.j0, 2);
    EXPECT_EQ(high.j1, 3);
    EXPECT_THROW(lp_brute_force(LPInstance::make(4, 4, 6), 2), std::invalid_argument);
}

TEST(LP, BasicSolutionIsFeasible) {
    for (int k = 4; k <= 9; ++k)
        for (double S = k - 1; S <= 3 * (k - 1); S += 0.37) {
            const auto inst = LPInstance::make(k + 2, k, S);
            const auto sol = lp_brute_force(inst);
            EXPECT_GE(sol.a0, -1e-12);
            EXPECT_GE(sol.a_j0, -1e-12);
            EXPECT_GE(sol.a_j1, -1e-12);
            EXPECT_NEAR(sol.a0 + sol.a_j0 + sol.a_j1, inst.x, 1e-9);
            EXPECT_NEAR(sol.j0 * sol.a_j0 + sol.j1 * sol.a_j1, k - 1, 1e-9);
            EXPECT_NEAR(sol.j0 * sol.j0 * sol.a_j0 + sol.j1 * sol.j1 * sol.a_j1, S, 1e-9);
            EXPECT_NEAR(sol.a0 + sol.a_j0 / (sol.j0 + 1) + sol.a_j1 / (sol.j1 + 1), sol.value, 1e-9);
        }
}

TEST(LP, MonotoneInSAndX) {
    // A larger S relaxes the second-moment constraint, so the optimum cannot drop.
    for (int k = 4; k <= 8; ++k) {
        double prev = -INFINITY;
        for (double S = k - 1; S <= 3 * (k - 1); S += 0.25) {
            const double v = lp_closed_form(LPInstance::make(k, k, S));
            EXPECT_GE(v, prev - 1e-12);
            prev = v;
            EXPECT_NEAR(lp_closed_form(LPInstance::make(k + 1, k, S)) - v, 1.0, 1e-12);
        }
    }
}

TEST(LP, EquivalenceSweep) {
    const auto r = sweep_lp_equivalence(4, 10);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks, 7u * 2u * 200u);
}

TEST(Radiant, TBound) {
    EXPECT_NEAR(radiant_T_bound(4), 2.213364, 1e-6);
    EXPECT_DOUBLE_EQ(radiant_T_bound(1), 1.0);
    EXPECT_NEAR(radiant_T_bound(5), 2.605171, 1e-6);
    EXPECT_THROW(radiant_T_bound(0), std::invalid_argument);
}

TEST(LargeOrder, SFor) {
    EXPECT_DOUBLE_EQ(s_for(9, 5), 10.75);
    EXPECT_NEAR(s_for(13, 4), 3 + 26.0 / 9, 1e-12);
    for (int k = 4; k <= 20; ++k) EXPECT_DOUBLE_EQ(s_for(2 * k, k), (k - 1) + 2 * (k - 2));
    EXPECT_THROW(s_for(4, 4), std::invalid_argument);
}

TEST(LargeOrder, Rhs) {
    EXPECT_NEAR(large_order_rhs(9, 5), 40.0 / 12 + 27.0 / 48, 1e-12);
    EXPECT_LT(large_order_rhs(9, 5), 4.0);
    EXPECT_NEAR(large_order_rhs(13, 4), 2.5 + 26.0 / 54, 1e-12);
    EXPECT_NEAR(large_order_rhs(12, 4), 3.0, 1e-12);
    EXPECT_THROW(large_order_rhs(8, 5), std::invalid_argument);
}

TEST(LargeOrder, EqualsLpAtClosedFormS) {
    for (int k = 4; k <= 30; ++k)
        for (int n = 2 * k - 1; n <= k * k + 10; ++n) {
            const double S = s_for(n, k);
            if (S > 3 * (k - 1)) continue;
            EXPECT_NEAR(large_order_rhs(n, k), lp_closed_form(LPInstance::make(k, k, S)), 1e-12) << k << " " << n;
        }
}

TEST(Sweeps, LargeOrder) {
    EXPECT_TRUE(sweep_large_order(100).passed());
    EXPECT_TRUE(sweep_large_order(5).passed());
    const auto with4 = sweep_large_order(6, 4);
    ASSERT_FALSE(with4.passed());
    for (const auto& v : with4.violations) {
        EXPECT_EQ(v.k, 4);
        EXPECT_LE(v.n, 12);
    }
    EXPECT_EQ(with4.violations.size(), 6u);  // n = 7..12
    EXPECT_THROW(sweep_large_order(3, 3), std::invalid_argument);
}

TEST(Sweeps, EdgeCount) {
    EXPECT_TRUE(sweep_edge_count(100).passed());
    // Direct arithmetic at the documented points.
    auto f = [](long n, long k) { return n * n + (1 - 3 * k) * n + 2 * k * k - k + 1; };
    EXPECT_EQ(f(6, 4), -1);
    EXPECT_EQ(f(8, 5), 64 - 112 + 46);
}

TEST(K4, Classes) {
    EXPECT_EQ(k4_class_of(ColorProfile{{3, 0, 0, 0}}), K4Class::S1);
    EXPECT_EQ(k4_class_of(ColorProfile{{0, 1, 2, 0}}), K4Class::S2);
    EXPECT_EQ(k4_class_of(ColorProfile{{1, 1, 0, 1}}), K4Class::S3);
    EXPECT_THROW(k4_class_of(ColorProfile{{1, 1, 1, 1}}), std::invalid_argument);
    EXPECT_NEAR(k4_tstar(K4Class::S1), 3.223710, 1e-6);
    EXPECT_NEAR(k4_tstar(K4Class::S2), std::pow(4.0, 0.25) * std::pow(3.0, 1.0 / 3) * std::pow(2.0, 5.0 / 12), 1e-12);
    EXPECT_NEAR(k4_tstar(K4Class::S2), 2.722605, 1e-6);
    EXPECT_NEAR(k4_tstar(K4Class::S3), std::pow(24.0, 0.25), 1e-12);
    for (auto cls : {K4Class::S1, K4Class::S2, K4Class::S3}) {
        EXPECT_EQ(k4_class_of(k4_representative(cls)), cls);
        EXPECT_NEAR(k4_tstar(cls), t_exact(k4_representative(cls), 4), 1e-12);
    }
}

TEST(K4, SplitLp) {
    const auto s8 = k4_s_lp(8);
    EXPECT_NEAR(s8.s1, 2, 1e-12);
    EXPECT_NEAR(s8.s2, 2, 1e-12);
    EXPECT_NEAR(s8.s3, 0, 1e-12);
    const auto s6 = k4_s_lp(6);
    EXPECT_NEAR(s6.s1, 2, 1e-12);
    EXPECT_NEAR(s6.s2, 0, 1e-12);
    EXPECT_THROW(k4_s_lp(3), std::invalid_argument);
}

TEST(K4, SplitLpMatchesGrid) {
    for (int n = 6; n <= 14; ++n) {
        const auto lp = k4_s_lp(n);
        const auto grid = k4_grid(n, n, 0.01);
        EXPECT_GE(k4_objective(lp), k4_objective(grid) - 1e-9) << n;
        EXPECT_NEAR(k4_objective(lp), k4_objective(grid), 1e-6) << n;
    }
    for (double budget : {2.5, 5.0, 7.25}) {
        const auto lp = k4_s_lp(9, budget);
        EXPECT_NEAR(k4_objective(lp), k4_objective(k4_grid(9, budget, 0.01)), 0.02);
        EXPECT_LE(3 * lp.s1 + lp.s2, budget + 1e-9);
    }
}

TEST(K4, FinalBound) {
    EXPECT_NEAR(k4_final_bound(8), 24 * std::pow(3.0, 13.0 / 6) * std::pow(2.0, 17.0 / 6), 1e-9);
    EXPECT_LT(k4_final_bound(8), 24.0 * 81);
    EXPECT_TRUE(k4_final_below_tomescu(8));
    EXPECT_FALSE(k4_final_below_tomescu(7));
    EXPECT_TRUE(k4_final_below_tomescu(12));
    EXPECT_NEAR(k4_final_bound(7) / 24, std::pow(3.0, 11.0 / 6) * std::pow(2.0, 23.0 / 12), 1e-9);
    EXPECT_GT(k4_final_bound(7) / 24, 27.0);
    EXPECT_THROW(k4_final_bound(5), std::invalid_argument);
    // Agrees with 4! exp(objective of the optimal split).
    for (int n = 6; n <= 40; ++n)
        EXPECT_NEAR(k4_final_log_bound(n), std::log(24.0) + k4_objective(k4_s_lp(n)), 1e-9) << n;
}

TEST(K4, FinalSweep) {
    EXPECT_TRUE(sweep_k4_final(6, 1000).passed());
    EXPECT_TRUE(sweep_k4_final(8, 1000).passed());
}

TEST(BoundChain, K4) {
    const auto r = bound_chain(complete_graph(4), 4);
    EXPECT_EQ(r.exact, BigCount{24});
    EXPECT_TRUE(r.equality_case);
    EXPECT_TRUE(r.core_is_clique);
    for (const auto& s : r.stages)
        if (s.certified) EXPECT_NEAR(s.value, 24.0, 1e-9) << s.name;
}

TEST(BoundChain, MoserAndMycielskian) {
    const auto moser = bound_chain(moser_edges(), 4);
    EXPECT_EQ(moser.exact, BigCount{384});
    EXPECT_EQ(moser.tomescu_rhs, BigCount{648});
    EXPECT_FALSE(moser.equality_case);
    int certified = 0;
    for (const auto& s : moser.stages)
        if (s.certified) {
            ++certified;
            EXPECT_GE(s.value, 384 * (1 - 1e-9)) << s.name;
            EXPECT_LE(s.value, 648.0) << s.name;
        }
    EXPECT_EQ(certified, 4 + 2);
    ASSERT_TRUE(moser.star.has_value());
    double a_sum = 0, j_sum = 0;
    for (std::size_t j = 0; j < moser.star->a.size(); ++j) {
        a_sum += moser.star->a[j];
        j_sum += static_cast<double>(j) * moser.star->a[j];
    }
    EXPECT_NEAR(a_sum, 4.0, 1e-9);
    EXPECT_NEAR(j_sum, 3.0, 1e-9);

    const auto myc = bound_chain(construct_mycielskian_triangle(), 4);
    EXPECT_EQ(myc.exact, BigCount{312});
    for (const auto& s : myc.stages)
        if (s.certified) EXPECT_GE(s.value, 312 * (1 - 1e-9)) << s.name;
}

TEST(BoundChain, StageOrderAndDeterminism) {
    BoundChainOptions o;
    o.pi_samples = 2;
    o.seed = 5;
    const auto a = bound_chain(moser_edges(), 4, o, "x");
    const auto b = bound_chain(moser_edges(), 4, o, "x");
    ASSERT_EQ(a.stages.size(), b.stages.size());
    for (std::size_t i = 0; i < a.stages.size(); ++i) EXPECT_EQ(a.stages[i].value, b.stages[i].value);
    std::vector<std::string> names;
    for (const auto& s : a.stages) names.push_back(s.name);
    EXPECT_EQ(names, (std::vector<std::string>{"overprediction[0]", "overprediction[1]", "global_T", "radiant_split",
                                               "w_star_lp", "k4_table"}));
    EXPECT_THROW(bound_chain(moser_edges(), 5), std::invalid_argument);
}

TEST(BoundChain, LowDegreeGraphsStillCertified) {
    // A pendant vertex makes N* undefined there; the certified stages must still hold.
    const Graph g = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    const auto r = bound_chain(g, 4);
    EXPECT_FALSE(r.star.has_value());
    for (const auto& s : r.stages)
        if (s.certified) EXPECT_GE(s.value, 72 * (1 - 1e-9)) << s.name;
}
