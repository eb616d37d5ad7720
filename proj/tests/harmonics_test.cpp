#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "trigspline/harmonics.hpp"

using namespace trigspline;

TEST(Harmonics, ConstantData) {
    for (GridKind kind : {GridKind::Aligned, GridKind::Staggered}) {
        const auto c = dft_coeffs(SampleSet(std::vector<double>(9, 2.5), GridSpec(9, kind)));
        EXPECT_DOUBLE_EQ(c.a0, 5.0);
        for (int k = 0; k < 4; ++k) {
            EXPECT_NEAR(c.a[k], 0.0, 1e-15);
            EXPECT_NEAR(c.b[k], 0.0, 1e-15);
        }
        for (double t : {0.0, 0.3, 4.0}) EXPECT_NEAR(trig_poly_eval(c, t), 2.5, 1e-14);
    }
}

TEST(Harmonics, CosineData) {
    for (int n : {3, 5, 9, 21}) {
        for (GridKind kind : {GridKind::Aligned, GridKind::Staggered}) {
            const GridSpec grid(n, kind);
            std::vector<double> f;
            for (double t : grid.nodes()) f.push_back(std::cos(t));
            const auto c = dft_coeffs(SampleSet(f, grid));
            EXPECT_NEAR(c.a0, 0.0, 1e-12);
            for (int k = 1; k <= grid.harmonics(); ++k) {
                EXPECT_NEAR(c.a[k - 1], k == 1 ? 1.0 : 0.0, 1e-12);
                EXPECT_NEAR(c.b[k - 1], 0.0, 1e-12);
            }
        }
    }
}

TEST(Harmonics, ExampleDataMean) {
    const auto c = dft_coeffs(SampleSet(support::kExampleData, GridSpec(9, GridKind::Aligned)));
    EXPECT_NEAR(c.a0, 40.0 / 9.0, 1e-14);
    EXPECT_EQ(c.a.size(), 4u);
    EXPECT_EQ(c.b.size(), 4u);
}

TEST(Harmonics, ExampleDataMatchesLinearSystemSolve) {
    // Unknowns (a0/2, a1..a4, b1..b4) fixed by the nine interpolation conditions.
    for (GridKind kind : {GridKind::Aligned, GridKind::Staggered}) {
        const GridSpec grid(9, kind);
        std::vector<std::vector<double>> a(9, std::vector<double>(9));
        for (int j = 0; j < 9; ++j) {
            const double t = grid.node(j);
            a[j][0] = 1.0;
            for (int k = 1; k <= 4; ++k) {
                a[j][k] = std::cos(k * t);
                a[j][4 + k] = std::sin(k * t);
            }
        }
        const auto x = support::dense_solve(a, support::kExampleData);
        const auto c = dft_coeffs(SampleSet(support::kExampleData, grid));
        EXPECT_NEAR(c.a0, 2 * x[0], 1e-12);
        for (int k = 1; k <= 4; ++k) {
            EXPECT_NEAR(c.a[k - 1], x[k], 1e-12);
            EXPECT_NEAR(c.b[k - 1], x[4 + k], 1e-12);
        }
        for (int j = 0; j < 9; ++j) EXPECT_NEAR(trig_poly_eval(c, grid.node(j)), support::kExampleData[j], 1e-10);
    }
}

TEST(Harmonics, ZeroCoefficientsEvaluateToZero) {
    HarmonicCoeffs c{0.0, std::vector<double>(4, 0.0), std::vector<double>(4, 0.0)};
    for (double t : {0.0, 1.0, -3.0}) EXPECT_EQ(trig_poly_eval(c, t), 0.0);
}

TEST(Harmonics, RoundTripProperty) {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<int> half(1, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 * half(rng) + 1;
        const GridSpec grid(n, trial % 2 ? GridKind::Staggered : GridKind::Aligned);
        const auto f = support::random_values(rng, n, -1000.0, 1000.0);
        const auto c = dft_coeffs(SampleSet(f, grid));
        for (int j = 0; j < n; ++j) ASSERT_NEAR(trig_poly_eval(c, grid.node(j)), f[j], 1e-10) << "N=" << n;
    }
}

TEST(Harmonics, LinearInData) {
    std::mt19937_64 rng(7);
    const GridSpec grid(21, GridKind::Staggered);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = support::random_values(rng, 21);
        const auto g = support::random_values(rng, 21);
        const double alpha = 1.7;
        std::vector<double> h(21);
        for (int j = 0; j < 21; ++j) h[j] = f[j] + alpha * g[j];
        const auto cf = dft_coeffs(SampleSet(f, grid));
        const auto cg = dft_coeffs(SampleSet(g, grid));
        const auto ch = dft_coeffs(SampleSet(h, grid));
        EXPECT_NEAR(ch.a0, cf.a0 + alpha * cg.a0, 1e-12);
        for (int k = 0; k < 10; ++k) {
            EXPECT_NEAR(ch.a[k], cf.a[k] + alpha * cg.a[k], 1e-12);
            EXPECT_NEAR(ch.b[k], cf.b[k] + alpha * cg.b[k], 1e-12);
        }
    }
}

TEST(Harmonics, LengthMismatchRejected) {
    EXPECT_THROW(SampleSet({1.0, 2.0}, GridSpec(3, GridKind::Aligned)), Error);
}
