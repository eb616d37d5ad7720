#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "trigspline/cyclic_tridiagonal.hpp"
#include "trigspline/error.hpp"
#include "trigspline/grid.hpp"
#include "trigspline/spline.hpp"

namespace trigspline {

enum class AnalogKind { BrokenLine, Quadratic, Cubic };

inline constexpr double kSolverResidualLimit = 1e-10;

/// Periodic polynomial spline on uniform knots, used as an independent
/// reference for the trigonometric splines.
///
///  BrokenLine, Cubic: knots are the data nodes; coefficients hold the data
///                     (broken line) or the second derivatives m_j (cubic).
///  Quadratic:         data sit midway between knots, so knots form the
///                     complementary grid; coefficients are B-spline weights.
class PeriodicPolySpline {
public:
    AnalogKind kind() const noexcept { return kind_; }
    const GridSpec& knots() const noexcept { return knots_; }
    std::span<const double> values() const noexcept { return values_; }
    std::span<const double> coefficients() const noexcept { return coefficients_; }
    /// Residual of the linear system solved during the fit (0 for broken line).
    double solver_residual() const noexcept { return solver_residual_; }

    double eval(double t) const {
        const int n = knots_.n_nodes();
        const double h = knots_.spacing();
        double x = std::fmod(t - knots_.offset(), 2.0 * std::numbers::pi);
        if (x < 0) x += 2.0 * std::numbers::pi;
        int j = static_cast<int>(std::floor(x / h));
        if (j >= n) j = n - 1;
        const double u = x / h - j; // position within [x_j, x_{j+1}]
        const auto at = [&](std::span<const double> s, int i) { return s[static_cast<std::size_t>(((i % n) + n) % n)]; };

        switch (kind_) {
        case AnalogKind::BrokenLine:
            return (1.0 - u) * at(values_, j) + u * at(values_, j + 1);
        case AnalogKind::Cubic: {
            const double w = 1.0 - u;
            const double mj = at(coefficients_, j);
            const double mk = at(coefficients_, j + 1);
            return (mj * w * w * w + mk * u * u * u) * h * h / 6.0 + (at(values_, j) - mj * h * h / 6.0) * w +
                   (at(values_, j + 1) - mk * h * h / 6.0) * u;
        }
        case AnalogKind::Quadratic:
            return at(coefficients_, j - 1) * (1.0 - u) * (1.0 - u) / 2.0 +
                   at(coefficients_, j) * (-2.0 * u * u + 2.0 * u + 1.0) / 2.0 +
                   at(coefficients_, j + 1) * u * u / 2.0;
        }
        return 0.0;
    }

    double operator()(double t) const { return eval(t); }

    static PeriodicPolySpline broken_line(std::vector<double> values, const GridSpec& grid) {
        check_length(values, grid);
        return PeriodicPolySpline(AnalogKind::BrokenLine, grid, std::move(values), {}, 0.0);
    }

    static PeriodicPolySpline cubic(std::vector<double> values, const GridSpec& grid) {
        check_length(values, grid);
        const std::size_t n = values.size();
        const double h = grid.spacing();
        CyclicTridiagonal<double> system{std::vector<double>(n, 1.0), std::vector<double>(n, 4.0),
                                         std::vector<double>(n, 1.0)};
        std::vector<double> rhs(n);
        for (std::size_t j = 0; j < n; ++j) {
            rhs[j] = 6.0 / (h * h) * (values[(j + n - 1) % n] - 2.0 * values[j] + values[(j + 1) % n]);
        }
        std::vector<double> m = solve_cyclic_tridiagonal<double>(system, rhs);
        const double residual = system.max_residual(m, rhs);
        check_residual(residual);
        return PeriodicPolySpline(AnalogKind::Cubic, grid, std::move(values), std::move(m), residual);
    }

    /// Quadratic spline with knots on the grid of kind knot_kind, interpolating
    /// at the nodes of data_grid. The data grid may be the knot grid itself or
    /// its complement (data at knot-interval midpoints).
    static PeriodicPolySpline quadratic(std::vector<double> values, const GridSpec& data_grid, GridKind knot_kind) {
        check_length(values, data_grid);
        const std::size_t n = values.size();
        const GridSpec knots(data_grid.n_nodes(), knot_kind);
        // Weight j multiplies the B-spline centred on the midpoint of knot
        // interval j; it takes the values 1/8, 3/4, 1/8 at interval midpoints
        // and 1/2, 1/2 at the knots.
        CyclicTridiagonal<double> system;
        std::size_t shift = 0; // data node i sits in (or starts) interval i + shift
        if (knot_kind == data_grid.kind()) {
            system = {std::vector<double>(n, 0.5), std::vector<double>(n, 0.5), std::vector<double>(n, 0.0)};
        } else {
            system = {std::vector<double>(n, 0.125), std::vector<double>(n, 0.75), std::vector<double>(n, 0.125)};
            // Aligned data node i is the midpoint of staggered interval i - 1.
            shift = data_grid.kind() == GridKind::Aligned ? n - 1 : 0;
        }
        std::vector<double> c = solve_cyclic_tridiagonal<double>(system, values);
        const double residual = system.max_residual(c, values);
        check_residual(residual);
        std::vector<double> weights(n);
        for (std::size_t i = 0; i < n; ++i) weights[(i + shift) % n] = c[i];
        return PeriodicPolySpline(AnalogKind::Quadratic, knots, std::move(values), std::move(weights), residual);
    }

private:
    PeriodicPolySpline(AnalogKind kind, GridSpec knots, std::vector<double> values, std::vector<double> coefficients,
                       double residual)
        : kind_(kind), knots_(knots), values_(std::move(values)), coefficients_(std::move(coefficients)),
          solver_residual_(residual) {}

    static void check_length(const std::vector<double>& values, const GridSpec& grid) {
        if (values.size() != static_cast<std::size_t>(grid.n_nodes()))
            throw Error(ErrorCode::InvalidArgument, "value count does not match the grid");
    }

    static void check_residual(double residual) {
        if (!(residual < kSolverResidualLimit))
            throw Error(ErrorCode::SolverFailure, "cyclic solve residual " + std::to_string(residual));
    }

    AnalogKind kind_;
    GridSpec knots_;
    std::vector<double> values_;
    std::vector<double> coefficients_;
    double solver_residual_;
};

inline PeriodicPolySpline fit_broken_line(std::vector<double> values, const GridSpec& grid) {
    return PeriodicPolySpline::broken_line(std::move(values), grid);
}

inline PeriodicPolySpline fit_periodic_cubic(std::vector<double> values, const GridSpec& grid) {
    return PeriodicPolySpline::cubic(std::move(values), grid);
}

inline PeriodicPolySpline fit_periodic_quadratic(std::vector<double> values, const GridSpec& data_grid,
                                                 GridKind knot_kind) {
    return PeriodicPolySpline::quadratic(std::move(values), data_grid, knot_kind);
}

/// max |f(t_i) - g(t_i)| over t_i = 2pi i / samples.
template <typename F, typename G>
double max_deviation(const F& f, const G& g, int samples) {
    if (samples < 1) throw Error(ErrorCode::InvalidArgument, "sample count must be >= 1");
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * std::numbers::pi * i / samples;
        worst = std::max(worst, std::abs(f(t) - g(t)));
    }
    return worst;
}

/// The polynomial analog of a spline model, if this library knows one: odd r
/// (1 or 3) with coinciding grids gives the broken line or cubic spline on the
/// data grid; r = 2 with distinct grids gives the quadratic spline knotted on
/// the crosslink grid.
inline PeriodicPolySpline analog_for(const SplineModel& model) {
    const SplineSpec& spec = model.spec();
    const GridSpec& grid = model.source().grid();
    std::vector<double> values(model.source().values().begin(), model.source().values().end());
    const bool same_grid = spec.crosslink == spec.interpolation;
    if (spec.family.kind() == FactorKind::SincPower) {
        if (spec.r() == 1 && same_grid) return fit_broken_line(std::move(values), grid);
        if (spec.r() == 3 && same_grid) return fit_periodic_cubic(std::move(values), grid);
        if (spec.r() == 2) return fit_periodic_quadratic(std::move(values), grid, complement(spec.crosslink));
    }
    throw Error(ErrorCode::NoAnalog, "no polynomial analog for r = " + std::to_string(spec.r()) + " with grids (" +
                                         std::to_string(index_of(spec.crosslink)) + "," +
                                         std::to_string(index_of(spec.interpolation)) + ")");
}

} // namespace trigspline
