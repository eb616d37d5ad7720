#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "trigspline/error.hpp"

namespace trigspline {

/// Periodic tridiagonal system
///   lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i],  indices mod n.
/// lower[0] couples row 0 to x[n-1] and upper[n-1] couples row n-1 to x[0].
template <typename Real>
struct CyclicTridiagonal {
    std::vector<Real> lower;
    std::vector<Real> diag;
    std::vector<Real> upper;

    std::size_t size() const noexcept { return diag.size(); }

    std::vector<Real> apply(std::span<const Real> x) const {
        const std::size_t n = size();
        std::vector<Real> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = lower[i] * x[(i + n - 1) % n] + diag[i] * x[i] + upper[i] * x[(i + 1) % n];
        }
        return y;
    }

    Real max_residual(std::span<const Real> x, std::span<const Real> rhs) const {
        const std::vector<Real> y = apply(x);
        Real worst = 0;
        for (std::size_t i = 0; i < y.size(); ++i) worst = std::max(worst, std::abs(y[i] - rhs[i]));
        return worst;
    }
};

namespace detail {

/// Thomas algorithm for a non-periodic tridiagonal system; lower[0] and
/// upper[n-1] are ignored.
template <typename Real>
std::vector<Real> solve_tridiagonal(std::span<const Real> lower, std::span<const Real> diag,
                                    std::span<const Real> upper, std::span<const Real> rhs) {
    const std::size_t n = diag.size();
    std::vector<Real> c(n);
    std::vector<Real> x(n);
    Real pivot = diag[0];
    if (pivot == Real(0)) throw Error(ErrorCode::SolverFailure, "zero pivot in tridiagonal solve");
    x[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        c[i] = upper[i - 1] / pivot;
        pivot = diag[i] - lower[i] * c[i];
        if (pivot == Real(0)) throw Error(ErrorCode::SolverFailure, "zero pivot in tridiagonal solve");
        x[i] = (rhs[i] - lower[i] * x[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i + 1] * x[i + 1];
    return x;
}

} // namespace detail

/// Solves a cyclic tridiagonal system (n >= 3) by a rank-one (Sherman-Morrison)
/// correction of the corner entries, reducing it to two ordinary tridiagonal
/// solves.
template <typename Real>
std::vector<Real> solve_cyclic_tridiagonal(const CyclicTridiagonal<Real>& system, std::span<const Real> rhs) {
    const std::size_t n = system.size();
    if (n < 3 || system.lower.size() != n || system.upper.size() != n || rhs.size() != n)
        throw Error(ErrorCode::InvalidArgument, "cyclic tridiagonal system needs n >= 3 and matching sizes");

    const Real alpha = system.upper[n - 1]; // row n-1, column 0
    const Real beta = system.lower[0];      // row 0, column n-1
    const Real gamma = -system.diag[0];

    std::vector<Real> diag(system.diag);
    diag[0] -= gamma;
    diag[n - 1] -= alpha * beta / gamma;

    const std::vector<Real> x = detail::solve_tridiagonal<Real>(system.lower, diag, system.upper, rhs);
    std::vector<Real> u(n, Real(0));
    u[0] = gamma;
    u[n - 1] = alpha;
    const std::vector<Real> z = detail::solve_tridiagonal<Real>(system.lower, diag, system.upper, u);

    const Real denominator = Real(1) + z[0] + beta * z[n - 1] / gamma;
    if (denominator == Real(0)) throw Error(ErrorCode::SolverFailure, "singular cyclic tridiagonal system");
    const Real fact = (x[0] + beta * x[n - 1] / gamma) / denominator;

    std::vector<Real> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - fact * z[i];
    return out;
}

} // namespace trigspline
