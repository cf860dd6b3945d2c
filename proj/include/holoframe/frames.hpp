#pragma once

// Analysis operators of weighted point-evaluation families, frame bounds,
// dual-frame synthesis, and Schauder-frame diagnostics.

#include <limits>
#include <optional>
#include <vector>

#include "holoframe/funcspace.hpp"
#include "holoframe/types.hpp"
#include "holoframe/weights.hpp"

namespace holoframe {

/// Matrix of the analysis operator c -> (nu_i f(z_i))_i on polynomials of
/// degree <= D: entries(i, k) = nu_i z_i^k.
struct AnalysisMatrix {
    Matrix entries;
    RealVector row_weights;
    PointList points;
    int degree = 0;
    Domain domain = Domain::plane;

    Eigen::Index rows() const { return entries.rows(); }
    Eigen::Index cols() const { return entries.cols(); }
};

/// Builds the matrix for explicitly given row weights.
AnalysisMatrix analysis_matrix(const PointList& points, const RealVector& row_weights, int degree,
                               Domain domain = Domain::plane);

/// Row weights nu_i = v_n(z_i) from a weight family.
AnalysisMatrix analysis_matrix(const PointList& points, const WeightFamily& family, int n, int degree);

struct FrameEstimate {
    double lower = 0.0;  // A
    double upper = 0.0;  // B
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    int rank = 0;
    std::optional<RealVector> gram_diagonal_used;

    double ratio() const { return lower > 0.0 ? upper / lower : std::numeric_limits<double>::infinity(); }
};

/// Sharp constants A, B with A sum |c_k|^2 d_k <= ||U c||^2 <= B sum |c_k|^2 d_k.
/// Without a Gram diagonal d = 1 and A, B are the extreme squared singular values.
FrameEstimate frame_bounds(const Matrix& u, const std::optional<RealVector>& gram_diagonal = std::nullopt);
FrameEstimate frame_bounds(const AnalysisMatrix& u, const std::optional<RealVector>& gram_diagonal = std::nullopt);

/// Gram diagonal of the Fock norm: d_k = pi k! / gamma^{k+1}, k = 0..degree.
RealVector fock_gram_diagonal(int degree, double gamma);

inline constexpr double default_rank_threshold = 1e-10;

/// Left inverse S of U (pseudo-inverse). Its columns are the coefficient
/// vectors of the dual functions f_i, so that f = sum_i (U f)_i f_i.
struct SynthesisMatrix {
    Matrix entries;
    AnalysisMatrix source;
    double truncation_threshold = default_rank_threshold;
    double condition = 1.0;

    /// f_i = S(e_i) as functions.
    std::vector<TruncatedFunction> dual_functions() const;
};

/// Throws NoFrameError when sigma_min <= threshold * sigma_max.
SynthesisMatrix dual_frame(const AnalysisMatrix& u, double threshold = default_rank_threshold);

TruncatedFunction reconstruct(const SynthesisMatrix& s, const Vector& samples);

/// Rows alternate: even rows (0-based) from the Bessel part, odd rows from
/// the frame part. Leftover rows of the longer input are appended.
AnalysisMatrix interleave(const AnalysisMatrix& bessel, const AnalysisMatrix& frame);

/// Drops the rows whose sample point is a zero of the polynomial q
/// (|q(z_i)| <= 1e-12 sum_k |q_k| |z_i|^k). Other rows are unchanged.
AnalysisMatrix multiplier_prune(const AnalysisMatrix& u, const Vector& q);

/// Restriction of a function to the analysis rows: (nu_i f(z_i))_i.
Vector analyze(const AnalysisMatrix& u, const TruncatedFunction& f);

// Linear functionals on polynomials of degree <= D are stored as rows phi with
// phi(f) = sum_k phi_k c_k.

Eigen::RowVectorXcd point_functional(Complex z, double weight, int degree);
Eigen::RowVectorXcd taylor_functional(int k, int degree);

/// q(alpha) = max_m || sum_{i <= m} alpha_i x_i || in the grid sup-norm of weight v_n.
double schauder_seminorm(const std::vector<TruncatedFunction>& x_vectors, const Vector& alpha,
                         const WeightFamily& family, int n, const GridSpec& grid);

struct SchauderReport {
    double max_residual = 0.0;
    bool pass = false;
    std::vector<double> residuals;
};

/// For each test function x: residual = || x - sum_i x_i'(x) x_i || on the grid.
SchauderReport verify_schauder_frame(const Matrix& functionals, const std::vector<TruncatedFunction>& x_vectors,
                                     const std::vector<TruncatedFunction>& test_set, const GridSpec& grid,
                                     const WeightFamily& family, int n, double tol);

}  // namespace holoframe
