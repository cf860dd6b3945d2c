#include "holoframe/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "holoframe/errors.hpp"

namespace holoframe::numkernel {

namespace {

void check_input(const Matrix& m, const char* op) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw ArgumentError(std::string(op) + ": matrix must have at least one row and column");
    }
    if (!all_finite(m)) {
        throw ArgumentError(std::string(op) + ": matrix has non-finite entries");
    }
}

template <int Options>
Svd run_svd(const Matrix& m) {
    Eigen::JacobiSVD<Matrix, Eigen::ColPivHouseholderQRPreconditioner> solver(m, Options);
    return Svd{solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

}  // namespace

Eigen::Index Svd::rank(double rel_threshold) const {
    const double cut = rel_threshold * sigma_max();
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < singular_values.size(); ++i) {
        if (singular_values(i) > cut) ++r;
    }
    return r;
}

bool all_finite(const Matrix& m) {
    return m.allFinite();
}

Svd svd(const Matrix& m) {
    check_input(m, "svd");
    return run_svd<Eigen::ComputeThinU | Eigen::ComputeThinV>(m);
}

Svd svd_full_v(const Matrix& m) {
    check_input(m, "svd");
    return run_svd<Eigen::ComputeThinU | Eigen::ComputeFullV>(m);
}

Vector least_squares(const Matrix& a, const Vector& b, double ridge, double rcond) {
    if (a.rows() != b.size()) {
        throw ArgumentError("least_squares: rows(A) = " + std::to_string(a.rows()) +
                            " but length(b) = " + std::to_string(b.size()));
    }
    if (!(ridge >= 0.0)) throw ArgumentError("least_squares: ridge must be nonnegative");
    const Svd d = svd(a);
    const double cut = rcond * d.sigma_max();
    Vector ub = d.U.adjoint() * b;
    for (Eigen::Index i = 0; i < ub.size(); ++i) {
        const double s = d.singular_values(i);
        ub(i) *= (s > cut && s > 0.0) ? s / (s * s + ridge) : 0.0;
    }
    return d.V * ub;
}

Matrix pseudo_inverse(const Matrix& m, double rcond) {
    const Svd d = svd(m);
    const double cut = rcond * d.sigma_max();
    RealVector inv(d.singular_values.size());
    for (Eigen::Index i = 0; i < inv.size(); ++i) {
        const double s = d.singular_values(i);
        inv(i) = (s > cut && s > 0.0) ? 1.0 / s : 0.0;
    }
    return d.V * inv.asDiagonal() * d.U.adjoint();
}

RealVector hermitian_gen_eig(const Matrix& m, const RealVector& d) {
    check_input(m, "hermitian_gen_eig");
    if (m.rows() != m.cols() || m.rows() != d.size()) {
        throw ArgumentError("hermitian_gen_eig: M must be square with size = length(d)");
    }
    if ((d.array() <= 0.0).any() || !d.allFinite()) {
        throw ArgumentError("hermitian_gen_eig: d must be strictly positive");
    }
    const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
        throw ArgumentError("hermitian_gen_eig: M is not Hermitian");
    }
    const RealVector inv_sqrt = d.cwiseSqrt().cwiseInverse();
    Matrix scaled = inv_sqrt.asDiagonal() * m * inv_sqrt.asDiagonal();
    scaled = 0.5 * (scaled + scaled.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(scaled, Eigen::EigenvaluesOnly);
    RealVector ev = eig.eigenvalues().reverse();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < 0.0 && ev(i) > -1e-12) ev(i) = 0.0;
    }
    return ev;
}

}  // namespace holoframe::numkernel
