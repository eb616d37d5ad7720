#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "trigspline/detail/summation.hpp"
#include "trigspline/error.hpp"
#include "trigspline/factors.hpp"
#include "trigspline/grid.hpp"
#include "trigspline/signs.hpp"

namespace trigspline {

/// How the infinite aliasing sums over m are cut off.
///
/// Adaptive: sum explicitly up to the smallest M >= m_min whose tail bound is
/// below tol, capped at m_max. When the factor family has a closed-form
/// remainder (sinc power, r >= 1) and analytic_remainder is set, the explicit
/// part always stops at kAnalyticStart (clamped to [m_min, m_max]) and the
/// remainder is added in closed form. Families with no tail bound
/// (r = 0, tables without a decay exponent) fail with TruncationNotConverged.
///
/// Fixed: exactly fixed_m explicit terms, no remainder. Required for r = 0,
/// where the series does not converge uniformly; results then carry no
/// accuracy guarantee.
struct TruncationPolicy {
    enum class Mode { Adaptive, Fixed };

    static constexpr long kAnalyticStart = 128;
    static constexpr long kDefaultFixedTerms = 10000;

    Mode mode = Mode::Adaptive;
    double tol = 1e-10;
    long m_min = 4;
    long m_max = 20000;
    long fixed_m = kDefaultFixedTerms;
    bool analytic_remainder = true;

    static TruncationPolicy fixed(long terms = kDefaultFixedTerms) {
        TruncationPolicy p;
        p.mode = Mode::Fixed;
        p.fixed_m = terms;
        return p;
    }

    void validate() const {
        if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "truncation tolerance must be positive");
        if (m_min < 1 || m_min > m_max)
            throw Error(ErrorCode::InvalidArgument, "truncation bounds must satisfy 1 <= m_min <= m_max");
        if (mode == Mode::Fixed && fixed_m < 1)
            throw Error(ErrorCode::InvalidArgument, "fixed term count must be >= 1");
    }
};

/// Resolved cut-off for one harmonic.
struct SeriesPlan {
    long explicit_terms;
    bool analytic_remainder;
};

inline SeriesPlan plan_series(const FactorFamily& family, int n_nodes, int k, const TruncationPolicy& policy) {
    policy.validate();
    if (policy.mode == TruncationPolicy::Mode::Fixed) return {policy.fixed_m, false};

    const bool analytic = policy.analytic_remainder && family.has_analytic_remainder();
    const long analytic_terms = std::clamp(TruncationPolicy::kAnalyticStart, policy.m_min, policy.m_max);

    // The analytic remainder is accurate to rounding, so a fixed explicit head
    // keeps the result independent of the factor scale.
    if (analytic) return {analytic_terms, true};

    const auto converged = [&](long m) { return family.tail_bound(n_nodes, k, m) < policy.tol; };
    if (converged(policy.m_max)) {
        // Bound is nonincreasing in M: bisect for the first converged M.
        long lo = policy.m_min;
        long hi = policy.m_max;
        while (lo < hi) {
            const long mid = lo + (hi - lo) / 2;
            if (converged(mid)) hi = mid; else lo = mid + 1;
        }
        return {lo, false};
    }
    if (std::isinf(family.tail_bound(n_nodes, k, policy.m_max))) {
        throw Error(ErrorCode::TruncationNotConverged,
                    "no tail bound for this factor family (r = " + std::to_string(family.r()) +
                        "); request fixed-M truncation");
    }
    return {policy.m_max, false};
}

/// sum_{m >= 1} (-1)^{m alternation} v_{mN+offset} e^{i (mN+offset) t}, cut off per plan.
inline std::complex<double> aliasing_series(const FactorFamily& family, int n_nodes, int offset, double t,
                                            int alternation, const SeriesPlan& plan) {
    detail::CompensatedComplexSum sum;
    const long extent = family.extent();
    const double n = n_nodes;
    long last = plan.explicit_terms;
    if (extent != std::numeric_limits<long>::max()) last = std::min(last, (extent - offset) / n_nodes);

    // Phase rotations advance e^{i(mN+offset)t} and the sinc argument by one
    // m per step; both are resynchronised periodically to bound drift.
    constexpr long kResync = 32;
    const bool sinc = family.kind() == FactorKind::SincPower;
    const int power = 1 + family.r();
    const double half_alpha = family.alpha() / 2.0;
    const std::complex<double> phase_step = std::polar(1.0, n * t);
    const std::complex<double> sinc_step = std::polar(1.0, half_alpha * n);
    std::complex<double> phase;
    std::complex<double> sinc_phase;
    for (long m = 1; m <= last; ++m) {
        const double j = static_cast<double>(m) * n + offset;
        if ((m - 1) % kResync == 0) {
            phase = std::polar(1.0, j * t);
            sinc_phase = std::polar(1.0, half_alpha * j);
        } else {
            phase *= phase_step;
            sinc_phase *= sinc_step;
        }
        double v;
        if (sinc) {
            const double base = sinc_phase.imag() / j;
            v = base;
            for (int i = 1; i < power; ++i) v *= base;
            v *= family.scale();
        } else {
            v = family.series_value(static_cast<long>(j));
        }
        if (alternation != 0 && (m % 2 == 1)) v = -v;
        sum.add(v * phase);
    }
    std::complex<double> result = sum.value();
    if (plan.analytic_remainder) {
        result += family.analytic_remainder(n_nodes, offset, t, alternation, plan.explicit_terms + 1);
    }
    return result;
}

namespace detail {

inline void check_basis_args(int n_nodes, int k, int crosslink) {
    validate_node_count(n_nodes);
    if (k < 1 || k > (n_nodes - 1) / 2)
        throw Error(ErrorCode::InvalidArgument, "harmonic k must lie in [1, (N-1)/2]");
    if (crosslink != 0 && crosslink != 1)
        throw Error(ErrorCode::InvalidArgument, "grid index must be 0 or 1");
}

} // namespace detail

/// Both basis functions c_k and s_k at t; they share the two aliasing series.
struct BasisPair {
    double cos_part;
    double sin_part;
};

inline BasisPair basis_pair(const FactorFamily& family, const SignMatrix& signs, GridKind crosslink, int n_nodes,
                            int k, double t, const TruncationPolicy& policy) {
    const int alternation = index_of(crosslink);
    detail::check_basis_args(n_nodes, k, alternation);
    const SeriesPlan plan = plan_series(family, n_nodes, k, policy);
    const std::complex<double> upper = aliasing_series(family, n_nodes, +k, t, alternation, plan);
    const std::complex<double> lower = aliasing_series(family, n_nodes, -k, t, alternation, plan);
    const double vk = family.series_value(k);
    return {
        vk * std::cos(k * t) + signs.cos_outer * (upper.real() + signs.cos_inner * lower.real()),
        vk * std::sin(k * t) + signs.sin_outer * (upper.imag() + signs.sin_inner * lower.imag()),
    };
}

/// c_k(t) = v_k cos kt + cos_outer sum_m (-1)^{m I1} [v_{mN+k} cos(mN+k)t + cos_inner v_{mN-k} cos(mN-k)t]
inline double basis_cos(const FactorFamily& family, const SignMatrix& signs, GridKind crosslink, int n_nodes, int k,
                        double t, const TruncationPolicy& policy = {}) {
    return basis_pair(family, signs, crosslink, n_nodes, k, t, policy).cos_part;
}

/// s_k(t) = v_k sin kt + sin_outer sum_m (-1)^{m I1} [v_{mN+k} sin(mN+k)t + sin_inner v_{mN-k} sin(mN-k)t]
inline double basis_sin(const FactorFamily& family, const SignMatrix& signs, GridKind crosslink, int n_nodes, int k,
                        double t, const TruncationPolicy& policy = {}) {
    return basis_pair(family, signs, crosslink, n_nodes, k, t, policy).sin_part;
}

} // namespace trigspline
