#pragma once

// Dense complex linear algebra used by every other module.

#include "holoframe/types.hpp"

namespace holoframe::numkernel {

/// Thin singular value decomposition M = U * diag(s) * V^*.
/// Singular values are nonnegative and sorted in descending order.
struct Svd {
    Matrix U;
    RealVector singular_values;
    Matrix V;

    double sigma_max() const { return singular_values.size() ? singular_values(0) : 0.0; }
    double sigma_min() const {
        return singular_values.size() ? singular_values(singular_values.size() - 1) : 0.0;
    }
    /// Number of singular values above rel_threshold * sigma_max.
    Eigen::Index rank(double rel_threshold) const;
};

/// Throws ArgumentError on empty or non-finite input.
Svd svd(const Matrix& m);

/// Like svd() but V is the full cols x cols unitary factor, so that the
/// trailing columns span the null space when rows < cols.
Svd svd_full_v(const Matrix& m);

/// Minimizer of ||A x - b||^2 + ridge ||x||^2 by SVD filtering s / (s^2 + ridge).
/// Singular values below rcond * sigma_max are discarded.
Vector least_squares(const Matrix& a, const Vector& b, double ridge, double rcond = 1e-12);

/// Moore-Penrose pseudo-inverse with relative cutoff rcond.
Matrix pseudo_inverse(const Matrix& m, double rcond = 1e-14);

/// Eigenvalues (descending) of D^{-1/2} M D^{-1/2}, D = diag(d), for a
/// Hermitian positive semidefinite M. Values in (-1e-12, 0) are clipped to 0.
RealVector hermitian_gen_eig(const Matrix& m, const RealVector& d);

bool all_finite(const Matrix& m);

}  // namespace holoframe::numkernel
