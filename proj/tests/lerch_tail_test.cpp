#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "trigspline/detail/lerch_tail.hpp"
#include "trigspline/factors.hpp"
#include "test_support.hpp"

using namespace trigspline;
using trigspline::detail::lerch_tail;
using trigspline::detail::sine_cosine_integrals;

TEST(SineCosineIntegrals, KnownValues) {
    // Reference values from 30-digit arbitrary-precision evaluation.
    struct Case { double x, si, ci; };
    const Case cases[] = {
        {0.5, 0.493107418043066689, -0.177784078806612901},
        {1.0, 0.946083070367183015, 0.337403922900968135},
        {2.0, 1.605412976802694849, 0.422980828774864996},
        {3.0, 1.848652527999468256, 0.119629786008000328},
        {10.0, 1.658347594218874049, -0.045456433004455373},
        {100.0, 1.562225466889056293, -0.005148825142610492},
    };
    for (const auto& c : cases) {
        const auto r = sine_cosine_integrals(c.x);
        EXPECT_NEAR(r.si, c.si, 5e-15) << c.x;
        EXPECT_NEAR(r.ci, c.ci, 5e-15) << c.x;
    }
}

TEST(LerchTail, MatchesLongBruteForceSums) {
    // Frozen from direct summation of 2e7-4e7 terms (tail error < 1e-13).
    struct Case { double theta, shift; int power; long first; double re, im, tol; };
    const Case cases[] = {
        {0.3, 0.25, 2, 130, -0.00017667197576272706, 8.988999871818699e-05, 2e-14},
        {std::numbers::pi, -0.2, 3, 129, -2.3672845614161476e-07, 0.0, 1e-20},
        {0.01, -0.3, 2, 129, -0.0017900721295053764, 0.0030530147715019484, 2e-13},
        {-2.5, 0.4, 4, 129, -1.372043209802479e-09, -1.3261772950206075e-09, 1e-20},
    };
    for (const auto& c : cases) {
        const std::complex<double> z = lerch_tail(c.theta, c.shift, c.power, c.first);
        EXPECT_NEAR(z.real(), c.re, c.tol) << c.theta;
        EXPECT_NEAR(z.imag(), c.im, c.tol) << c.theta;
    }
}

TEST(LerchTail, NonOscillatingCaseMatchesIntegralComparison) {
    // sum_{m>=200} (m + 0.1)^-2, brute force over 1e7 terms plus the
    // integral estimate of what remains.
    long double sum = 0.0L;
    const long last = 200 + 10000000;
    for (long m = 200; m < last; ++m) sum += 1.0L / ((m + 0.1L) * (m + 0.1L));
    sum += 1.0L / (last + 0.1L - 0.5L);
    EXPECT_NEAR(lerch_tail(0.0, 0.1, 2, 200).real(), static_cast<double>(sum), 1e-15);
}

TEST(LerchTail, PeriodicInTheta) {
    const auto a = lerch_tail(0.7, 0.2, 3, 150);
    const auto b = lerch_tail(0.7 + 2 * std::numbers::pi, 0.2, 3, 150);
    EXPECT_NEAR(std::abs(a - b), 0.0, 1e-18);
}

TEST(AnalyticRemainder, MatchesExplicitContinuation) {
    // The closed-form remainder from M+1 must equal explicit terms M+1..M2 plus
    // the closed-form remainder from M2+1.
    const int n = 9;
    for (int r : {1, 2, 3}) {
        const auto family = FactorFamily::sinc_power(r, 0.9); // non-default alpha on purpose
        for (int offset : {2, -2}) {
            for (double t : {0.0, 0.4, 2.1}) {
                for (int alt : {0, 1}) {
                    std::complex<long double> explicit_sum = 0.0L;
                    for (long m = 129; m <= 2000; ++m) {
                        const long j = m * n + offset;
                        long double v = support::sinc_power_ld(r, 0.9L, j);
                        if (alt == 1 && m % 2 == 1) v = -v;
                        explicit_sum += v * std::polar<long double>(1.0L, j * static_cast<long double>(t));
                    }
                    const auto lhs = family.analytic_remainder(n, offset, t, alt, 129);
                    const auto rhs = std::complex<double>(explicit_sum) + family.analytic_remainder(n, offset, t, alt, 2001);
                    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-16 + 1e-12 * std::abs(lhs))
                        << "r=" << r << " offset=" << offset << " t=" << t << " alt=" << alt;
                }
            }
        }
    }
}

TEST(AnalyticRemainder, UnavailableForRZero) {
    EXPECT_FALSE(FactorFamily::sinc_power_for_nodes(0, 9).has_analytic_remainder());
    EXPECT_THROW(FactorFamily::sinc_power_for_nodes(0, 9).analytic_remainder(9, 1, 0.0, 0, 10), Error);
}
