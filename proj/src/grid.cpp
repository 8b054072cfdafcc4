#include "spdual/grid.hpp"

#include <stdexcept>
#include <string>

namespace spdual {

double Grid::volume() const {
    double v = extents[0].hi - extents[0].lo;
    if (dimension == 2) v *= extents[1].hi - extents[1].lo;
    return v;
}

Grid build_grid(int dimension, std::span<const AxisExtent> extents,
                std::span<const int> nodes_per_axis) {
    if (dimension != 1 && dimension != 2) {
        throw std::invalid_argument("build_grid: dimension must be 1 or 2");
    }
    if (extents.size() < static_cast<std::size_t>(dimension) ||
        nodes_per_axis.size() < static_cast<std::size_t>(dimension)) {
        throw std::invalid_argument("build_grid: missing per-axis extents or node counts");
    }

    Grid g;
    g.dimension = dimension;
    for (int d = 0; d < dimension; ++d) {
        const AxisExtent e = extents[static_cast<std::size_t>(d)];
        const int n = nodes_per_axis[static_cast<std::size_t>(d)];
        if (!(e.lo < e.hi)) {
            throw std::invalid_argument("build_grid: degenerate extent on axis " + std::to_string(d));
        }
        if (n < 3) {
            throw std::invalid_argument("build_grid: need at least 3 nodes on axis " + std::to_string(d));
        }
        g.extents[static_cast<std::size_t>(d)] = e;
        g.nodes_per_axis[static_cast<std::size_t>(d)] = n;
        g.spacing[static_cast<std::size_t>(d)] = (e.hi - e.lo) / static_cast<double>(n - 1);
    }
    if (dimension == 1) {
        g.nodes_per_axis[1] = 1;
        g.spacing[1] = 0.0;
    }

    const int nx = g.nodes_per_axis[0];
    const int ny = g.nodes_per_axis[1];
    const int total = nx * ny;
    g.node_coordinates.resize(static_cast<std::size_t>(total));
    g.interior_mask.resize(static_cast<std::size_t>(total));
    g.quadrature_weight.resize(static_cast<std::size_t>(total));

    auto axis_weight = [](int i, int n, double h) {
        return (i == 0 || i == n - 1) ? 0.5 * h : h;
    };

    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const int j = g.index(ix, iy);
            const double x = g.extents[0].lo + ix * g.spacing[0];
            const double y = (dimension == 2) ? g.extents[1].lo + iy * g.spacing[1] : 0.0;
            g.node_coordinates[static_cast<std::size_t>(j)] = {x, y};
            bool interior = ix > 0 && ix < nx - 1;
            if (dimension == 2) interior = interior && iy > 0 && iy < ny - 1;
            g.interior_mask[static_cast<std::size_t>(j)] = interior ? 1 : 0;
            double w = axis_weight(ix, nx, g.spacing[0]);
            if (dimension == 2) w *= axis_weight(iy, ny, g.spacing[1]);
            g.quadrature_weight[static_cast<std::size_t>(j)] = w;
        }
    }
    return g;
}

Grid build_interval_grid(double lo, double hi, int nodes) {
    const AxisExtent e{lo, hi};
    const int n = nodes;
    return build_grid(1, std::span<const AxisExtent>(&e, 1), std::span<const int>(&n, 1));
}

Grid build_rectangle_grid(AxisExtent x, AxisExtent y, int nx, int ny) {
    const std::array<AxisExtent, 2> e{x, y};
    const std::array<int, 2> n{nx, ny};
    return build_grid(2, e, n);
}

}  // namespace spdual
