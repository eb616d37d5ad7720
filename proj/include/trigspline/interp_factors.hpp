#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "trigspline/basis.hpp"
#include "trigspline/error.hpp"
#include "trigspline/factors.hpp"
#include "trigspline/grid.hpp"
#include "trigspline/signs.hpp"

namespace trigspline {

/// Per-harmonic interpolation factors; hc[k-1] holds hc_k.
struct FactorPair {
    std::vector<double> hc;
    std::vector<double> hs;
};

/// Relative threshold below which a factor makes a variant undefined.
inline constexpr double kDegeneracyThreshold = 1e-10;

inline bool is_degenerate(double factor, double vk) noexcept {
    return std::abs(factor) < kDegeneracyThreshold * std::abs(vk) || factor == 0.0;
}

/// Interpolation factors without the degeneracy check, used by sweeps that
/// want to report degenerate variants rather than fail on them.
///
/// At a node of the interpolation grid every aliased harmonic collapses onto
/// harmonic k:
///   cos((mN +- k) t_j) = (-1)^{m I2} cos(k t_j)
///   sin((mN +- k) t_j) = +-(-1)^{m I2} sin(k t_j)
/// so with J = I1 xor I2
///   hc_k = v_k + cos_outer sum_m (-1)^{mJ} (v_{mN+k} + cos_inner v_{mN-k})
///   hs_k = v_k + sin_outer sum_m (-1)^{mJ} (v_{mN+k} - sin_inner v_{mN-k}).
inline FactorPair raw_interp_factors(const FactorFamily& family, const SignMatrix& signs, GridKind crosslink,
                                     GridKind interpolation, int n_nodes, const TruncationPolicy& policy = {}) {
    validate_node_count(n_nodes);
    const int alternation = index_of(crosslink) ^ index_of(interpolation);
    const int n = (n_nodes - 1) / 2;
    FactorPair out;
    out.hc.resize(static_cast<std::size_t>(n));
    out.hs.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const SeriesPlan plan = plan_series(family, n_nodes, k, policy);
        const double upper = aliasing_series(family, n_nodes, +k, 0.0, alternation, plan).real();
        const double lower = aliasing_series(family, n_nodes, -k, 0.0, alternation, plan).real();
        const double vk = family.series_value(k);
        out.hc[static_cast<std::size_t>(k - 1)] = vk + signs.cos_outer * (upper + signs.cos_inner * lower);
        out.hs[static_cast<std::size_t>(k - 1)] = vk + signs.sin_outer * (upper - signs.sin_inner * lower);
    }
    return out;
}

/// Interpolation factors; throws DegenerateVariant if some hc_k or hs_k
/// vanishes relative to v_k, in which case this variant is undefined.
inline FactorPair interp_factors(const FactorFamily& family, const SignMatrix& signs, GridKind crosslink,
                                 GridKind interpolation, int n_nodes, const TruncationPolicy& policy = {}) {
    FactorPair out = raw_interp_factors(family, signs, crosslink, interpolation, n_nodes, policy);
    for (std::size_t i = 0; i < out.hc.size(); ++i) {
        const int k = static_cast<int>(i + 1);
        const double vk = family.series_value(k);
        for (const auto& [value, which] : {std::pair{out.hc[i], "hc"}, std::pair{out.hs[i], "hs"}}) {
            if (is_degenerate(value, vk)) {
                throw Error(ErrorCode::DegenerateVariant,
                            std::string(signs.name) + " (" + std::to_string(index_of(crosslink)) + "," +
                                std::to_string(index_of(interpolation)) + "): " + which + "_" +
                                std::to_string(k) + " vanishes");
            }
        }
    }
    return out;
}

struct NodalFactors {
    double hc;
    double hs;
};

/// Recovers hc_k and hs_k from their defining property: on the interpolation
/// grid, c_k(t_j) = hc_k cos(k t_j) and s_k(t_j) = hs_k sin(k t_j). Uses the
/// node where the reference harmonic is largest.
inline NodalFactors nodal_factor_oracle(const FactorFamily& family, const SignMatrix& signs, GridKind crosslink,
                                        const GridSpec& interpolation_grid, int k,
                                        const TruncationPolicy& policy = {}) {
    constexpr double kMinHarmonic = 1e-3;
    const int n_nodes = interpolation_grid.n_nodes();
    int best_cos = -1;
    int best_sin = -1;
    for (int i = 0; i < n_nodes; ++i) {
        const double t = interpolation_grid.node(i);
        if (best_cos < 0 || std::abs(std::cos(k * t)) > std::abs(std::cos(k * interpolation_grid.node(best_cos))))
            best_cos = i;
        if (best_sin < 0 || std::abs(std::sin(k * t)) > std::abs(std::sin(k * interpolation_grid.node(best_sin))))
            best_sin = i;
    }
    const double t_cos = interpolation_grid.node(best_cos);
    const double t_sin = interpolation_grid.node(best_sin);
    if (std::abs(std::cos(k * t_cos)) < kMinHarmonic || std::abs(std::sin(k * t_sin)) < kMinHarmonic) {
        throw Error(ErrorCode::NoUsableNode, "every node makes harmonic " + std::to_string(k) + " vanish");
    }
    const double hc = basis_cos(family, signs, crosslink, n_nodes, k, t_cos, policy) / std::cos(k * t_cos);
    const double hs = basis_sin(family, signs, crosslink, n_nodes, k, t_sin, policy) / std::sin(k * t_sin);
    return {hc, hs};
}

} // namespace trigspline
