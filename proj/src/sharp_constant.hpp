#pragma once

#include <cstddef>

#include "holoframe/types.hpp"

namespace holoframe::detail {

/// Bounds on C = max_j sup { |G_j c| : max_i |E_i c| <= 1 }, the sharp
/// constant in max_j |(G c)_j| <= C max_i |(E c)_i|. E must have full column rank.
struct SharpBounds {
    double lower = 0.0;       // attained by an explicit coefficient vector
    double upper = 0.0;       // certified
    double pinv_bound = 0.0;  // max_j ||G_j E^+||_1
    std::size_t rows_solved = 0;
};

SharpBounds sharp_sup_constant(const Matrix& e, const Matrix& g, double rtol = 1e-9);

/// Value of sup { Re(g c) : max_i |E_i c| <= 1 } for one row, with the
/// maximizer c. Interval [lower, upper] from the barrier duality gap.
struct RowSolution {
    double lower = 0.0;
    double upper = 0.0;
    Vector c;
    RealVector multipliers;  // proportional to |y_i| of the optimal l1 representation
};

RowSolution solve_row(const Matrix& e, const Eigen::RowVectorXcd& g, double rtol);

}  // namespace holoframe::detail
