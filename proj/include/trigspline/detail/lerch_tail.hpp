#pragma once

// Remainders of slowly convergent aliasing series in closed asymptotic form.
//
// The remainder of a series sum_{m >= a} e^{i m theta} (m + c)^{-s} is
// evaluated by the Euler-Maclaurin formula applied to the smooth function
// y -> e^{i theta y} y^{-s}. With theta reduced to [-pi, pi] the correction
// terms shrink roughly like (theta / 2pi)^{2p}, so a few dozen terms give
// full double precision once a is moderately large.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

namespace trigspline::detail {

inline constexpr int kMaxEulerMaclaurinTerms = 40;

struct SineCosineIntegrals {
    double si;
    double ci;
};

/// Si(x) and Ci(x) for x > 0: power series below 2, continued fraction for
/// E1(ix) above.
inline SineCosineIntegrals sine_cosine_integrals(double x) {
    constexpr double kEuler = 0.57721566490153286061;
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    constexpr int kMaxIterations = 500;

    if (x < 2.0) {
        double si = 0.0;
        double ci = 0.0;
        double term = x; // x^(2k+1) / (2k+1)!
        for (int k = 0; k < kMaxIterations; ++k) {
            const double si_term = term / (2 * k + 1);
            si += (k % 2 == 0) ? si_term : -si_term;
            term *= x / (2 * k + 2);
            // term is now x^(2k+2) / (2k+2)!
            const double ci_term = term / (2 * k + 2);
            ci += (k % 2 == 0) ? -ci_term : ci_term;
            term *= x / (2 * k + 3);
            if (std::abs(si_term) <= kEps * std::abs(si) &&
                std::abs(ci_term) <= kEps * std::max(std::abs(ci), 1e-300))
                break;
        }
        return {si, kEuler + std::log(x) + ci};
    }

    // Modified Lentz evaluation of the continued fraction for E1(ix).
    constexpr double kTiny = 1e-300;
    std::complex<double> b(1.0, x);
    std::complex<double> c = 1.0 / kTiny;
    std::complex<double> d = 1.0 / b;
    std::complex<double> h = d;
    for (int i = 2; i <= kMaxIterations; ++i) {
        const double a = -static_cast<double>(i - 1) * (i - 1);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const std::complex<double> del = c * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
    }
    h *= std::complex<double>(std::cos(x), -std::sin(x));
    return {std::numbers::pi / 2 + h.imag(), -h.real()};
}

/// Generalised exponential integral E_n(z) = integral_1^inf e^{-zt} t^{-n} dt by
/// its continued fraction; valid for Re z >= 0 with |z| well above 1.
inline std::complex<double> exponential_integral_cf(int n, std::complex<double> z) {
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    constexpr double kTiny = 1e-300;
    constexpr int kMaxIterations = 1000;
    std::complex<double> b = z + static_cast<double>(n);
    std::complex<double> c = 1.0 / kTiny;
    std::complex<double> d = 1.0 / b;
    std::complex<double> h = d;
    for (int i = 1; i <= kMaxIterations; ++i) {
        const double a = -static_cast<double>(i) * (n - 1 + i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const std::complex<double> del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h * std::exp(-z);
}

/// integral_b^inf e^{i theta y} y^{-s} dy for integer s >= 2, b > 0.
inline std::complex<double> oscillatory_power_integral(double theta, double b, int s) {
    if (theta == 0.0) return std::pow(b, 1 - s) / (s - 1);

    const double x = std::abs(theta) * b;
    if (x > 2.0) {
        // Upward recurrence from s = 1 cancels badly here; use b^{1-s} E_s(-i theta b).
        return std::pow(b, 1 - s) * exponential_integral_cf(s, std::complex<double>(0.0, -theta * b));
    }

    const auto [si, ci] = sine_cosine_integrals(x);
    const double sign = theta > 0 ? 1.0 : -1.0;
    // integral_b^inf e^{i theta y} / y dy
    std::complex<double> integral(-ci, sign * (std::numbers::pi / 2 - si));

    const std::complex<double> phase = std::polar(1.0, theta * b);
    const std::complex<double> i_theta(0.0, theta);
    double b_power = 1.0; // b^{1-n}
    for (int n = 2; n <= s; ++n) {
        b_power /= b;
        integral = (b_power * phase + i_theta * integral) / static_cast<double>(n - 1);
    }
    return integral;
}

/// Reduce an angle to (-pi, pi].
inline double wrap_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(theta, two_pi);
    if (r <= -std::numbers::pi) r += two_pi;
    return r;
}

/// sum_{m >= first} e^{i m theta} (m + shift)^{-power}, power >= 2, first + shift > 0.
///
/// Intended for first of order a hundred or more; accuracy degrades when
/// first + shift is small compared with power + 2 * kMaxEulerMaclaurinTerms / 2pi.
inline std::complex<double> lerch_tail(double theta, double shift, int power, long first) {
    theta = wrap_angle(theta);
    const double b = static_cast<double>(first) + shift;

    std::complex<double> total = oscillatory_power_integral(theta, b, power);
    const std::complex<double> phase = std::polar(1.0, theta * b);
    const double b_pow = std::pow(b, -power);
    total += 0.5 * phase * b_pow;

    // d_l = (-1)^l (power)_l b^{-power-l}: derivatives of y^{-power} at b.
    constexpr int kMaxOrder = 2 * kMaxEulerMaclaurinTerms;
    std::array<double, kMaxOrder> deriv{};
    deriv[0] = b_pow;
    for (int l = 1; l < kMaxOrder; ++l) deriv[l] = -deriv[l - 1] * (power + l - 1) / b;

    std::array<std::complex<double>, kMaxOrder> i_theta_pow{};
    i_theta_pow[0] = 1.0;
    for (int l = 1; l < kMaxOrder; ++l) i_theta_pow[l] = i_theta_pow[l - 1] * std::complex<double>(0.0, theta);

    double previous = std::numeric_limits<double>::infinity();
    for (int p = 1; p <= kMaxEulerMaclaurinTerms - 1; ++p) {
        const int order = 2 * p - 1;
        // Leibniz rule for the (2p-1)-th derivative of e^{i theta y} y^{-power}.
        std::complex<double> derivative = 0.0;
        double binom = 1.0;
        for (int l = 0; l <= order; ++l) {
            derivative += binom * i_theta_pow[order - l] * deriv[l];
            binom = binom * (order - l) / (l + 1);
        }
        const double coefficient = boost::math::bernoulli_b2n<double>(p) /
                                   boost::math::factorial<double>(static_cast<unsigned>(2 * p));
        const std::complex<double> term = coefficient * phase * derivative;
        const double size = std::abs(term);
        if (size > previous) break; // asymptotic regime exhausted
        total -= term;
        previous = size;
        if (size <= std::numeric_limits<double>::epsilon() * 1e-2 * std::abs(total)) break;
    }
    return std::polar(1.0, -shift * theta) * total;
}

} // namespace trigspline::detail
