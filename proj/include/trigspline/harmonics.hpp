#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "trigspline/detail/summation.hpp"
#include "trigspline/error.hpp"
#include "trigspline/grid.hpp"

namespace trigspline {

/// Data values f_j sampled at the nodes of one grid.
class SampleSet {
public:
    SampleSet(std::vector<double> values, GridSpec grid) : values_(std::move(values)), grid_(grid) {
        if (values_.size() != static_cast<std::size_t>(grid_.n_nodes())) {
            throw Error(ErrorCode::InvalidArgument,
                        "expected " + std::to_string(grid_.n_nodes()) + " values, got " +
                            std::to_string(values_.size()));
        }
    }

    std::span<const double> values() const noexcept { return values_; }
    const GridSpec& grid() const noexcept { return grid_; }

private:
    std::vector<double> values_;
    GridSpec grid_;
};

/// Coefficients of a0/2 + sum_{k=1}^{n} (a_k cos kt + b_k sin kt); a[k-1] holds a_k.
struct HarmonicCoeffs {
    double a0 = 0.0;
    std::vector<double> a;
    std::vector<double> b;

    int harmonics() const noexcept { return static_cast<int>(a.size()); }
};

/// Discrete Fourier coefficients with the 2/N normalisation, so that the
/// resulting trigonometric polynomial reproduces the data at the nodes.
inline HarmonicCoeffs dft_coeffs(const SampleSet& samples) {
    const GridSpec& grid = samples.grid();
    const int n_nodes = grid.n_nodes();
    const int n = grid.harmonics();
    const auto values = samples.values();

    detail::CompensatedSum total;
    for (double f : values) total.add(f);
    const double mean = total.value() / n_nodes;

    // Harmonics k >= 1 sum to zero over the grid, so centring the data does
    // not change a_k, b_k but removes rounding noise for near-constant data.
    HarmonicCoeffs out;
    out.a0 = 2.0 * mean;
    out.a.resize(static_cast<std::size_t>(n));
    out.b.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        detail::CompensatedSum ak;
        detail::CompensatedSum bk;
        for (int i = 0; i < n_nodes; ++i) {
            const double t = grid.node(i);
            const double centred = values[static_cast<std::size_t>(i)] - mean;
            ak.add(centred * std::cos(k * t));
            bk.add(centred * std::sin(k * t));
        }
        out.a[static_cast<std::size_t>(k - 1)] = 2.0 * ak.value() / n_nodes;
        out.b[static_cast<std::size_t>(k - 1)] = 2.0 * bk.value() / n_nodes;
    }
    return out;
}

inline double trig_poly_eval(const HarmonicCoeffs& coeffs, double t) {
    detail::CompensatedSum sum;
    sum.add(coeffs.a0 / 2.0);
    for (int k = 1; k <= coeffs.harmonics(); ++k) {
        sum.add(coeffs.a[static_cast<std::size_t>(k - 1)] * std::cos(k * t));
        sum.add(coeffs.b[static_cast<std::size_t>(k - 1)] * std::sin(k * t));
    }
    return sum.value();
}

} // namespace trigspline
