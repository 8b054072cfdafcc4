#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace spdual {

using Point = std::array<double, 2>;  // (x, y); y is 0 in one dimension

struct AxisExtent {
    double lo = 0.0;
    double hi = 1.0;
};

/// Uniform tensor grid on an interval (1-D) or axis-aligned rectangle (2-D)
/// with trapezoidal quadrature weights. Interior and boundary nodes
/// partition the node set; weights sum to the domain volume. Immutable
/// after construction.
struct Grid {
    int dimension = 1;
    std::array<AxisExtent, 2> extents{};
    std::array<int, 2> nodes_per_axis{1, 1};
    std::array<double, 2> spacing{0.0, 0.0};

    std::vector<Point> node_coordinates;
    std::vector<std::uint8_t> interior_mask;   // 1 = interior, 0 = boundary
    std::vector<double> quadrature_weight;

    int num_nodes() const { return static_cast<int>(node_coordinates.size()); }

    int index(int ix, int iy = 0) const { return iy * nodes_per_axis[0] + ix; }

    bool is_interior(int node) const { return interior_mask[static_cast<std::size_t>(node)] != 0; }

    double volume() const;
};

/// Builds a uniform tensor grid. extents has one entry per axis and
/// nodes_per_axis at least 3 entries-wise (so every axis has an interior
/// node). Throws std::invalid_argument on degenerate extents or too few
/// nodes.
Grid build_grid(int dimension, std::span<const AxisExtent> extents,
                std::span<const int> nodes_per_axis);

/// Convenience builders.
Grid build_interval_grid(double lo, double hi, int nodes);
Grid build_rectangle_grid(AxisExtent x, AxisExtent y, int nx, int ny);

}  // namespace spdual
