#pragma once

#include <array>
#include <string>
#include <string_view>

#include "trigspline/error.hpp"

namespace trigspline {

/// One element of the 4x4 sign-distribution table. Row one of each 2x2
/// element drives the cosine series, row two the sine series; within a row
/// the first sign stands before the aliasing sum and the second before the
/// v_{mN-k} term inside it. Under this reading A1 is the classical pair
///   c_k = v_k cos kt + sum [v_{mN+k} cos(mN+k)t + v_{mN-k} cos(mN-k)t]
///   s_k = v_k sin kt + sum [v_{mN+k} sin(mN+k)t - v_{mN-k} sin(mN-k)t].
struct SignMatrix {
    std::string_view name;
    int cos_outer;
    int cos_inner;
    int sin_outer;
    int sin_inner;

    friend bool operator==(const SignMatrix&, const SignMatrix&) = default;
};

namespace detail {

// Row-major order of the table: A1 A2 A3 A4 / B1 ... / D1 ... D4.
inline constexpr std::array<SignMatrix, 16> kSignTable{{
    {"A1", +1, +1, +1, -1}, {"A2", +1, +1, +1, +1}, {"A3", +1, -1, +1, +1}, {"A4", +1, -1, +1, -1},
    {"B1", -1, +1, +1, -1}, {"B2", -1, +1, +1, +1}, {"B3", -1, -1, +1, +1}, {"B4", -1, -1, +1, -1},
    {"C1", -1, +1, -1, -1}, {"C2", -1, +1, -1, +1}, {"C3", -1, -1, -1, +1}, {"C4", -1, -1, -1, -1},
    {"D1", +1, +1, -1, -1}, {"D2", +1, +1, -1, +1}, {"D3", +1, -1, -1, +1}, {"D4", +1, -1, -1, -1},
}};

} // namespace detail

inline SignMatrix lookup_sign(std::string_view name) {
    for (const auto& element : detail::kSignTable) {
        if (element.name == name) return element;
    }
    throw Error(ErrorCode::UnknownElement, "unknown sign element '" + std::string(name) + "'");
}

inline const std::array<SignMatrix, 16>& enumerate_signs() noexcept { return detail::kSignTable; }

} // namespace trigspline
