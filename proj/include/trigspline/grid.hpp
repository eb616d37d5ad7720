#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "trigspline/error.hpp"

namespace trigspline {

/// Which of the two uniform grids on [0, 2pi) is meant.
///   Aligned   (index 0): t_j = 2pi (j-1) / N
///   Staggered (index 1): t_j = pi (2j-1) / N, the midpoints of the aligned grid
/// Node numbers j are 1-based in formulas; every container in this library is
/// 0-based, so element i holds node j = i + 1.
enum class GridKind : int { Aligned = 0, Staggered = 1 };

constexpr int index_of(GridKind kind) noexcept { return static_cast<int>(kind); }

inline GridKind grid_kind_from_index(int index) {
    if (index == 0) return GridKind::Aligned;
    if (index == 1) return GridKind::Staggered;
    throw Error(ErrorCode::InvalidArgument,
                "grid index must be 0 or 1, got " + std::to_string(index));
}

/// The other grid of the pair.
constexpr GridKind complement(GridKind kind) noexcept {
    return kind == GridKind::Aligned ? GridKind::Staggered : GridKind::Aligned;
}

inline void validate_node_count(int n_nodes) {
    if (n_nodes < 3 || n_nodes % 2 == 0) {
        throw Error(ErrorCode::InvalidGrid,
                    "node count must be odd and >= 3, got " + std::to_string(n_nodes));
    }
}

class GridSpec {
public:
    GridSpec(int n_nodes, GridKind kind) : n_nodes_(n_nodes), kind_(kind) {
        validate_node_count(n_nodes);
    }

    int n_nodes() const noexcept { return n_nodes_; }
    GridKind kind() const noexcept { return kind_; }
    /// Number of harmonics n with N = 2n + 1.
    int harmonics() const noexcept { return (n_nodes_ - 1) / 2; }
    double spacing() const noexcept { return 2.0 * std::numbers::pi / n_nodes_; }
    /// Position of the first node.
    double offset() const noexcept {
        return kind_ == GridKind::Aligned ? 0.0 : std::numbers::pi / n_nodes_;
    }

    /// Node with 0-based index i.
    double node(int i) const noexcept {
        if (kind_ == GridKind::Aligned) return 2.0 * std::numbers::pi * i / n_nodes_;
        return std::numbers::pi * (2 * i + 1) / n_nodes_;
    }

    std::vector<double> nodes() const {
        std::vector<double> out(static_cast<std::size_t>(n_nodes_));
        for (int i = 0; i < n_nodes_; ++i) out[static_cast<std::size_t>(i)] = node(i);
        return out;
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    int n_nodes_;
    GridKind kind_;
};

inline std::vector<double> nodes(const GridSpec& spec) { return spec.nodes(); }

} // namespace trigspline
