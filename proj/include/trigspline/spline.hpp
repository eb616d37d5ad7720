#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trigspline/basis.hpp"
#include "trigspline/detail/summation.hpp"
#include "trigspline/error.hpp"
#include "trigspline/factors.hpp"
#include "trigspline/grid.hpp"
#include "trigspline/harmonics.hpp"
#include "trigspline/interp_factors.hpp"
#include "trigspline/signs.hpp"

namespace trigspline {

/// A point of the classification St^(I1,I2)(v, E, r, N, t): factor family v
/// (which carries r), sign element E, node count N, crosslink grid I1 and
/// interpolation grid I2.
struct SplineSpec {
    FactorFamily family;
    SignMatrix signs;
    int n_nodes;
    GridKind crosslink = GridKind::Aligned;
    GridKind interpolation = GridKind::Aligned;
    TruncationPolicy policy{};

    int r() const noexcept { return family.r(); }

    /// Default family for N nodes: A1 with v_k = [sin(pi k/N)/k]^(1+r).
    static SplineSpec sinc_power(int r, int n_nodes, std::string_view sign = "A1",
                                 GridKind crosslink = GridKind::Aligned,
                                 GridKind interpolation = GridKind::Aligned) {
        validate_node_count(n_nodes);
        return {FactorFamily::sinc_power_for_nodes(r, n_nodes), lookup_sign(sign), n_nodes, crosslink,
                interpolation, {}};
    }
};

struct InterpolationReport {
    double max_deviation = 0.0;
    std::vector<double> residuals; // eval(t_j) - f_j on the interpolation grid
};

class SplineModel {
public:
    static SplineModel build(std::vector<double> values, SplineSpec spec) {
        validate_node_count(spec.n_nodes);
        spec.policy.validate();
        if (values.size() != static_cast<std::size_t>(spec.n_nodes)) {
            throw Error(ErrorCode::InvalidArgument,
                        "expected " + std::to_string(spec.n_nodes) + " values, got " + std::to_string(values.size()));
        }
        SampleSet source(std::move(values), GridSpec(spec.n_nodes, spec.interpolation));
        HarmonicCoeffs coeffs = dft_coeffs(source);
        FactorPair factors =
            interp_factors(spec.family, spec.signs, spec.crosslink, spec.interpolation, spec.n_nodes, spec.policy);

        std::vector<SeriesPlan> plans;
        std::vector<double> vk;
        for (int k = 1; k <= coeffs.harmonics(); ++k) {
            plans.push_back(plan_series(spec.family, spec.n_nodes, k, spec.policy));
            vk.push_back(spec.family.series_value(k));
        }
        return SplineModel(std::move(spec), std::move(source), std::move(coeffs), std::move(factors),
                           std::move(plans), std::move(vk));
    }

    const SplineSpec& spec() const noexcept { return spec_; }
    const SampleSet& source() const noexcept { return source_; }
    const HarmonicCoeffs& coeffs() const noexcept { return coeffs_; }
    const FactorPair& factors() const noexcept { return factors_; }

    /// a0/2 + sum_k [a_k c_k(t) / hc_k + b_k s_k(t) / hs_k]
    double eval(double t) const {
        const int n_nodes = spec_.n_nodes;
        const int alternation = index_of(spec_.crosslink);
        const SignMatrix& signs = spec_.signs;
        detail::CompensatedSum sum;
        sum.add(coeffs_.a0 / 2.0);
        for (int k = 1; k <= coeffs_.harmonics(); ++k) {
            const auto i = static_cast<std::size_t>(k - 1);
            const std::complex<double> upper = aliasing_series(spec_.family, n_nodes, +k, t, alternation, plans_[i]);
            const std::complex<double> lower = aliasing_series(spec_.family, n_nodes, -k, t, alternation, plans_[i]);
            const double ck = vk_[i] * std::cos(k * t) + signs.cos_outer * (upper.real() + signs.cos_inner * lower.real());
            const double sk = vk_[i] * std::sin(k * t) + signs.sin_outer * (upper.imag() + signs.sin_inner * lower.imag());
            sum.add(coeffs_.a[i] * ck / factors_.hc[i]);
            sum.add(coeffs_.b[i] * sk / factors_.hs[i]);
        }
        return sum.value();
    }

    double operator()(double t) const { return eval(t); }

    /// count equispaced points t_i = 2pi i / count on [0, 2pi).
    std::vector<std::pair<double, double>> sample(int count) const {
        if (count < 2) throw Error(ErrorCode::InvalidArgument, "sample count must be >= 2");
        std::vector<std::pair<double, double>> out;
        out.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            const double t = 2.0 * std::numbers::pi * i / count;
            out.emplace_back(t, eval(t));
        }
        return out;
    }

    InterpolationReport verify_interpolation() const {
        InterpolationReport report;
        const GridSpec& grid = source_.grid();
        const auto values = source_.values();
        for (int i = 0; i < grid.n_nodes(); ++i) {
            const double residual = eval(grid.node(i)) - values[static_cast<std::size_t>(i)];
            report.residuals.push_back(residual);
            report.max_deviation = std::max(report.max_deviation, std::abs(residual));
        }
        return report;
    }

private:
    SplineModel(SplineSpec spec, SampleSet source, HarmonicCoeffs coeffs, FactorPair factors,
                std::vector<SeriesPlan> plans, std::vector<double> vk)
        : spec_(std::move(spec)), source_(std::move(source)), coeffs_(std::move(coeffs)),
          factors_(std::move(factors)), plans_(std::move(plans)), vk_(std::move(vk)) {}

    SplineSpec spec_;
    SampleSet source_;
    HarmonicCoeffs coeffs_;
    FactorPair factors_;
    std::vector<SeriesPlan> plans_;
    std::vector<double> vk_;
};

inline SplineModel build(std::vector<double> values, SplineSpec spec) {
    return SplineModel::build(std::move(values), std::move(spec));
}

} // namespace trigspline
