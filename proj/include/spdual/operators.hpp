#pragma once

#include <Eigen/Sparse>
#include <functional>
#include <span>
#include <vector>

#include "spdual/grid.hpp"

namespace spdual {

/// Per-node coefficients of the second-order operator
///   (A f)(x) = sum_ij a_ij(x) d2f/dxi dxj + sum_i b_i(x) df/dxi.
/// a is stored as its upper triangle (a_xy covers both off-diagonal
/// entries), so symmetry holds by construction; nonnegative definiteness
/// is checked at assembly.
struct OperatorCoefficients {
    int dimension = 1;
    std::vector<double> a_xx;
    std::vector<double> a_xy;  // 2-D only
    std::vector<double> a_yy;  // 2-D only
    std::vector<double> b_x;
    std::vector<double> b_y;   // 2-D only

    static OperatorCoefficients constant(const Grid& grid, double axx, double bx);
    static OperatorCoefficients constant2d(const Grid& grid, double axx, double axy,
                                           double ayy, double bx, double by);
    /// a = kappa * I, b = 0 (heat operator kappa * Laplacian).
    static OperatorCoefficients isotropic(const Grid& grid, double kappa);
    static OperatorCoefficients from_fields(
        const Grid& grid, const std::function<double(const Point&)>& axx,
        const std::function<double(const Point&)>& axy,
        const std::function<double(const Point&)>& ayy,
        const std::function<double(const Point&)>& bx,
        const std::function<double(const Point&)>& by);
};

/// Central-difference discretization of the operator together with its
/// discrete adjoint. The adjoint's interior block is exactly the transpose
/// of the forward interior block; rows at boundary nodes of both maps are
/// identity, so boundary values pass through unchanged. This makes the
/// discrete Green identity hold to machine precision for interior-supported
/// fields, which the duality functionals rely on.
struct DiscreteOperatorPair {
    Eigen::SparseMatrix<double> forward;
    Eigen::SparseMatrix<double> adjoint;
    int num_nodes = 0;
    int grid_dimension = 1;
};

DiscreteOperatorPair assemble_operators(const Grid& grid, const OperatorCoefficients& coeffs);

/// y = forward * field (boundary rows return the boundary values unchanged).
std::vector<double> apply_forward(const DiscreteOperatorPair& pair, std::span<const double> field);
std::vector<double> apply_adjoint(const DiscreteOperatorPair& pair, std::span<const double> field);

void apply_forward_into(const DiscreteOperatorPair& pair, std::span<const double> field,
                        std::span<double> out);
void apply_adjoint_into(const DiscreteOperatorPair& pair, std::span<const double> field,
                        std::span<double> out);

/// <A X, p> - <X, A* p> over interior nodes with quadrature weights.
/// Zero to roundoff for interior-supported fields by the transpose
/// construction.
double green_residual(const Grid& grid, const DiscreteOperatorPair& pair,
                      std::span<const double> x_field, std::span<const double> p_field);

}  // namespace spdual
