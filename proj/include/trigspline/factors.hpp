#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <boost/math/special_functions/binomial.hpp>

#include "trigspline/detail/lerch_tail.hpp"
#include "trigspline/error.hpp"

namespace trigspline {

enum class FactorKind { SincPower, CustomTable };

/// A convergence-factor family v_k, k = 1, 2, ..., decaying like k^-(1+r).
///
/// SincPower:   v_k = scale * [sin(alpha k / 2) / k]^(1+r), alpha defaulting to 2pi/N.
/// CustomTable: v_k = table[k-1] for k up to the table length. Inside the
///              aliasing series entries past the end count as zero; direct
///              lookups past the end are rejected. A declared decay exponent
///              p > 1 (|v_k| <= C k^-p) makes tolerance-driven truncation
///              possible; without one only fixed-M truncation is allowed.
class FactorFamily {
public:
    static FactorFamily sinc_power(int r, double alpha, double scale = 1.0) {
        if (r < 0) throw Error(ErrorCode::InvalidArgument, "smoothness r must be >= 0");
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw Error(ErrorCode::InvalidArgument, "alpha must be a positive finite number");
        if (!(scale > 0.0) || !std::isfinite(scale))
            throw Error(ErrorCode::InvalidArgument, "scale must be a positive finite number");
        FactorFamily f;
        f.kind_ = FactorKind::SincPower;
        f.r_ = r;
        f.alpha_ = alpha;
        f.scale_ = scale;
        return f;
    }

    /// SincPower with the default alpha = 2pi/N.
    static FactorFamily sinc_power_for_nodes(int r, int n_nodes) {
        return sinc_power(r, 2.0 * std::numbers::pi / n_nodes);
    }

    static FactorFamily custom_table(std::vector<double> table, int r,
                                     std::optional<double> decay_exponent = std::nullopt) {
        if (r < 0) throw Error(ErrorCode::InvalidArgument, "smoothness r must be >= 0");
        if (table.empty()) throw Error(ErrorCode::InvalidArgument, "factor table is empty");
        for (double v : table) {
            if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "factor table holds a non-finite value");
        }
        if (decay_exponent && !(*decay_exponent > 1.0))
            throw Error(ErrorCode::InvalidArgument, "declared decay exponent must exceed 1");
        FactorFamily f;
        f.kind_ = FactorKind::CustomTable;
        f.r_ = r;
        f.table_ = std::move(table);
        f.decay_exponent_ = decay_exponent;
        if (decay_exponent) {
            for (std::size_t i = 0; i < f.table_.size(); ++i) {
                const double k = static_cast<double>(i + 1);
                f.decay_constant_ = std::max(f.decay_constant_, std::abs(f.table_[i]) * std::pow(k, *decay_exponent));
            }
        }
        return f;
    }

    FactorKind kind() const noexcept { return kind_; }
    int r() const noexcept { return r_; }
    double alpha() const noexcept { return alpha_; }
    double scale() const noexcept { return scale_; }
    const std::vector<double>& table() const noexcept { return table_; }
    std::optional<double> decay_exponent() const noexcept { return decay_exponent_; }

    /// Same family with every v_k multiplied by c > 0.
    FactorFamily scaled(double c) const {
        if (!(c > 0.0) || !std::isfinite(c))
            throw Error(ErrorCode::InvalidArgument, "scale factor must be a positive finite number");
        FactorFamily f = *this;
        f.scale_ *= c;
        for (double& v : f.table_) v *= c;
        f.decay_constant_ *= c;
        return f;
    }

    /// Largest index that can carry a nonzero value.
    long extent() const noexcept {
        if (kind_ == FactorKind::CustomTable) return static_cast<long>(table_.size());
        return std::numeric_limits<long>::max();
    }

    /// v_k for k >= 1.
    double at(long k) const {
        if (k < 1) throw Error(ErrorCode::InvalidArgument, "factor index must be >= 1");
        if (kind_ == FactorKind::CustomTable) {
            if (k > extent())
                throw Error(ErrorCode::IndexOutOfTable,
                            "factor index " + std::to_string(k) + " beyond table of length " +
                                std::to_string(table_.size()));
            return table_[static_cast<std::size_t>(k - 1)];
        }
        return sinc_value(k);
    }

    /// v_k inside an aliasing series: zero past the end of a table.
    double series_value(long k) const noexcept {
        if (kind_ == FactorKind::CustomTable)
            return k > extent() ? 0.0 : table_[static_cast<std::size_t>(k - 1)];
        return sinc_value(k);
    }

    /// Upper bound on sum_{m > M} (|v_{mN+k}| + |v_{mN-k}|); +infinity when no
    /// bound is available.
    double tail_bound(int n_nodes, int k, long m) const {
        if (m < 1) throw Error(ErrorCode::InvalidArgument, "tail start must be >= 1");
        const double n = n_nodes;
        const double lowest = static_cast<double>(m + 1) * n - k;
        if (kind_ == FactorKind::CustomTable && lowest > static_cast<double>(extent())) return 0.0;

        double exponent = 0.0;
        double constant = 0.0;
        if (kind_ == FactorKind::SincPower) {
            if (r_ == 0) return std::numeric_limits<double>::infinity();
            exponent = 1.0 + r_;
            constant = scale_;
        } else {
            if (!decay_exponent_) return std::numeric_limits<double>::infinity();
            exponent = *decay_exponent_;
            constant = decay_constant_;
        }
        // Terms decrease in m, so the tail is below the integral from M.
        const double mm = static_cast<double>(m);
        return constant * (std::pow(mm * n + k, 1.0 - exponent) + std::pow(mm * n - k, 1.0 - exponent)) /
               (n * (exponent - 1.0));
    }

    bool has_analytic_remainder() const noexcept { return kind_ == FactorKind::SincPower && r_ >= 1; }

    /// sum_{m >= first} (-1)^{m alternation} v_{mN+offset} e^{i (mN+offset) t}
    /// in closed asymptotic form. Only available when has_analytic_remainder().
    std::complex<double> analytic_remainder(int n_nodes, int offset, double t, int alternation,
                                            long first) const {
        if (!has_analytic_remainder())
            throw Error(ErrorCode::TruncationNotConverged, "no analytic remainder for this factor family");
        // sin^s(x) = (2i)^-s sum_q C(s,q) (-1)^q e^{i(s-2q)x} turns every term into
        // a phase e^{i m theta_q} times (m + offset/N)^-s.
        const int s = 1 + r_;
        const double n = n_nodes;
        const double shift = offset / n;
        std::complex<double> total = 0.0;
        for (int q = 0; q <= s; ++q) {
            const double harmonic = (s - 2 * q) * alpha_ / 2.0;
            const double theta = alternation * std::numbers::pi + n * t + harmonic * n;
            const double weight = boost::math::binomial_coefficient<double>(static_cast<unsigned>(s),
                                                                           static_cast<unsigned>(q)) *
                                  ((q % 2 == 0) ? 1.0 : -1.0);
            total += weight * std::polar(1.0, offset * (t + harmonic)) *
                     detail::lerch_tail(theta, shift, s, first);
        }
        const std::complex<double> two_i_pow = std::pow(std::complex<double>(0.0, 2.0), s);
        return scale_ * std::pow(n, -s) * total / two_i_pow;
    }

private:
    FactorFamily() = default;

    double sinc_value(long k) const noexcept {
        const double kk = static_cast<double>(k);
        const double base = std::sin(alpha_ * kk / 2.0) / kk;
        double value = base;
        for (int i = 0; i < r_; ++i) value *= base;
        return scale_ * value;
    }

    FactorKind kind_ = FactorKind::SincPower;
    int r_ = 1;
    double alpha_ = 1.0;
    double scale_ = 1.0;
    std::vector<double> table_;
    std::optional<double> decay_exponent_;
    double decay_constant_ = 0.0;
};

inline double factor_at(const FactorFamily& family, long k) { return family.at(k); }

inline double tail_bound(const FactorFamily& family, int n_nodes, int k, long m) {
    return family.tail_bound(n_nodes, k, m);
}

} // namespace trigspline
