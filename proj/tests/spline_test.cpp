#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "trigspline/analog.hpp"
#include "trigspline/spline.hpp"

using namespace trigspline;

namespace {

constexpr double kPi = std::numbers::pi;
const GridKind kKinds[] = {GridKind::Aligned, GridKind::Staggered};

bool degenerate(const SplineSpec& spec) {
    const auto raw = raw_interp_factors(spec.family, spec.signs, spec.crosslink, spec.interpolation, spec.n_nodes,
                                        spec.policy);
    for (std::size_t i = 0; i < raw.hc.size(); ++i) {
        const double vk = spec.family.series_value(static_cast<long>(i + 1));
        if (is_degenerate(raw.hc[i], vk) || is_degenerate(raw.hs[i], vk)) return true;
    }
    return false;
}

} // namespace

TEST(Spline, BuildsOnTheWorkedExample) {
    const auto model = build(support::kExampleData, SplineSpec::sinc_power(1, 9));
    EXPECT_EQ(model.coeffs().harmonics(), 4);
    EXPECT_EQ(model.source().grid().kind(), GridKind::Aligned);
    EXPECT_LT(model.verify_interpolation().max_deviation, 1e-8);
}

TEST(Spline, CoefficientGridFollowsInterpolationIndex) {
    const auto model =
        build(support::kExampleData, SplineSpec::sinc_power(1, 9, "A1", GridKind::Aligned, GridKind::Staggered));
    EXPECT_EQ(model.source().grid().kind(), GridKind::Staggered);
}

TEST(Spline, RejectsWrongLength) {
    EXPECT_THROW(build({1.0, 2.0, 3.0}, SplineSpec::sinc_power(1, 9)), Error);
    EXPECT_THROW(SplineSpec::sinc_power(1, 8), Error);
}

TEST(Spline, InterpolatesForEveryVariant) {
    std::mt19937_64 rng(99);
    int built = 0;
    int skipped = 0;
    for (int n : {3, 5, 9, 21}) {
        for (int r : {1, 2, 3}) {
            for (const auto& s : enumerate_signs()) {
                for (GridKind i1 : kKinds) {
                    for (GridKind i2 : kKinds) {
                        const auto spec = SplineSpec::sinc_power(r, n, s.name, i1, i2);
                        if (degenerate(spec)) {
                            EXPECT_THROW(build(support::random_values(rng, n), spec), Error);
                            ++skipped;
                            continue;
                        }
                        const auto model = build(support::random_values(rng, n), spec);
                        ASSERT_LT(model.verify_interpolation().max_deviation, 1e-7)
                            << s.name << " N=" << n << " r=" << r << " (" << index_of(i1) << "," << index_of(i2) << ")";
                        ++built;
                    }
                }
            }
        }
    }
    EXPECT_GT(built, 0);
    RecordProperty("degenerate_variants", skipped);
}

TEST(Spline, ConstantDataGivesConstant) {
    for (int r : {1, 2, 3}) {
        for (const auto& s : enumerate_signs()) {
            const auto spec = SplineSpec::sinc_power(r, 9, s.name, GridKind::Staggered, GridKind::Aligned);
            if (degenerate(spec)) continue;
            const auto model = build(std::vector<double>(9, -3.25), spec);
            for (double t : {0.0, 0.4, 2.2, 5.9}) EXPECT_NEAR(model.eval(t), -3.25, 1e-12);
            EXPECT_LT(model.verify_interpolation().max_deviation, 1e-12);
        }
    }
}

TEST(Spline, MidpointsAreMeansForR1) {
    const auto model = build(support::kExampleData, SplineSpec::sinc_power(1, 9));
    const double h = 2 * kPi / 9;
    for (int j = 0; j < 9; ++j) {
        const double mean = (support::kExampleData[j] + support::kExampleData[(j + 1) % 9]) / 2;
        EXPECT_NEAR(model.eval((j + 0.5) * h), mean, 1e-6);
    }
}

TEST(Spline, SamplesAtNodesReturnData) {
    const auto model = build(support::kExampleData, SplineSpec::sinc_power(3, 9));
    const auto samples = model.sample(9);
    ASSERT_EQ(samples.size(), 9u);
    for (int j = 0; j < 9; ++j) {
        EXPECT_NEAR(samples[j].first, 2 * kPi * j / 9, 1e-15);
        EXPECT_NEAR(samples[j].second, support::kExampleData[j], 1e-8);
    }
    EXPECT_THROW(model.sample(1), Error);
}

TEST(Spline, DoubledSamplingKeepsEarlierPoints) {
    const auto model = build(support::kExampleData, SplineSpec::sinc_power(1, 9));
    const auto coarse = model.sample(64);
    const auto fine = model.sample(128);
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        EXPECT_EQ(coarse[i].first, fine[2 * i].first);
        EXPECT_NEAR(coarse[i].second, fine[2 * i].second, 1e-12);
    }
}

TEST(Spline, R3FollowsPeriodicCubic) {
    const auto model = build(support::kExampleData, SplineSpec::sinc_power(3, 9));
    const auto cubic = fit_periodic_cubic(support::kExampleData, GridSpec(9, GridKind::Aligned));
    for (const auto& [t, value] : model.sample(512)) EXPECT_NEAR(value, cubic.eval(t), 1e-5);
}

TEST(Spline, ScaleInvariant) {
    std::mt19937_64 rng(5);
    const auto data = support::random_values(rng, 9);
    for (int r : {1, 2, 3}) {
        for (const char* sign : {"A1", "C2"}) {
            auto spec = SplineSpec::sinc_power(r, 9, sign, GridKind::Aligned, GridKind::Staggered);
            if (degenerate(spec)) continue;
            const auto base = build(data, spec);
            for (double c : {1e-3, 7.5, 1e3}) {
                auto scaled = spec;
                scaled.family = spec.family.scaled(c);
                const auto model = build(data, scaled);
                for (double t : {0.0, 0.9, 3.1, 4.7}) {
                    EXPECT_NEAR(model.eval(t), base.eval(t), 1e-12 * std::max(1.0, std::abs(base.eval(t))));
                }
            }
        }
    }
}

TEST(Spline, LinearInData) {
    std::mt19937_64 rng(11);
    for (int r : {1, 2, 3}) {
        for (GridKind i1 : kKinds) {
            const auto spec = SplineSpec::sinc_power(r, 9, "A1", i1, GridKind::Aligned);
            for (int trial = 0; trial < 3; ++trial) {
                const auto f = support::random_values(rng, 9);
                const auto g = support::random_values(rng, 9);
                std::vector<double> h(9);
                for (int j = 0; j < 9; ++j) h[j] = 2.0 * f[j] - 0.5 * g[j];
                const auto mf = build(f, spec);
                const auto mg = build(g, spec);
                const auto mh = build(h, spec);
                for (double t : {0.13, 1.7, 3.9, 6.0}) {
                    EXPECT_NEAR(mh.eval(t), 2.0 * mf.eval(t) - 0.5 * mg.eval(t), 1e-9);
                }
            }
        }
    }
}

TEST(Spline, Periodic) {
    std::mt19937_64 rng(3);
    for (int r : {1, 2, 3}) {
        const auto model = build(support::random_values(rng, 9), SplineSpec::sinc_power(r, 9, "A3"));
        for (double t : {0.0, 1.0, 2.5}) EXPECT_NEAR(model.eval(t), model.eval(t + 2 * kPi), 1e-10);
    }
}

TEST(Spline, CosineDataUsesOnlyTheFirstChannel) {
    for (int r : {1, 3}) {
        for (GridKind i1 : kKinds) {
            for (GridKind i2 : kKinds) {
                const auto spec = SplineSpec::sinc_power(r, 9, "A1", i1, i2);
                const GridSpec grid(9, i2);
                std::vector<double> data;
                for (double t : grid.nodes()) data.push_back(std::cos(t));
                const auto model = build(data, spec);
                const double hc1 = model.factors().hc[0];
                for (double t : {0.2, 1.4, 2.8, 5.0}) {
                    EXPECT_NEAR(model.eval(t), basis_cos(spec.family, spec.signs, i1, 9, 1, t) / hc1, 1e-9);
                }
            }
        }
    }
}

TEST(Spline, RZeroFixedTruncationReportsResiduals) {
    auto spec = SplineSpec::sinc_power(0, 9);
    EXPECT_THROW(build(support::kExampleData, spec), Error);
    spec.policy = TruncationPolicy::fixed();
    const auto report = build(support::kExampleData, spec).verify_interpolation();
    EXPECT_EQ(report.residuals.size(), 9u);
    EXPECT_TRUE(std::isfinite(report.max_deviation));
}
