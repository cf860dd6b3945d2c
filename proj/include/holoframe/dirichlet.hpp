#pragma once

// Exponential systems e^{lambda z}: Dirichlet-series expansions by regularized
// least squares, coefficient decay fits, non-uniqueness witnesses, and the
// Weierstrass sigma function of a rectangular lattice.

#include <functional>
#include <utility>
#include <vector>

#include "holoframe/funcspace.hpp"
#include "holoframe/types.hpp"

namespace holoframe {

class FrequencySet {
public:
    enum class Generator { square, explicit_list };

    /// n + i m for |n|, |m| <= N in row-major (n, m) order: (2N+1)^2 entries.
    static FrequencySet square(int n);
    /// Pairwise distinct (to 1e-12), nonempty.
    static FrequencySet explicit_list(PointList lambdas);

    const PointList& lambdas() const noexcept { return lambdas_; }
    std::size_t size() const noexcept { return lambdas_.size(); }
    Generator generator() const noexcept { return generator_; }
    int half_width() const noexcept { return half_width_; }

private:
    FrequencySet() = default;

    PointList lambdas_;
    Generator generator_ = Generator::explicit_list;
    int half_width_ = 0;
};

/// Largest |Re(lambda z)| accepted before exp overflows.
inline constexpr double exp_argument_limit = 700.0;

/// M(j, k) = exp(lambda_k z_j). Throws RangeError past the overflow guard.
Matrix exp_matrix(const FrequencySet& freqs, const PointList& grid_points);

/// Expansion grid: 16 geometric radii over [1e-3, radius] with 32 angles.
GridSpec dirichlet_grid(double radius = 1.5);

inline constexpr double default_ridge = 1e-10;
inline constexpr double expansion_rcond = 1e-12;

struct DirichletExpansion {
    FrequencySet freqs;
    Vector coeffs;
    double residual_sup = 0.0;
    GridSpec grid;
    double ridge = 0.0;
    double sigma_min = 0.0;  // of the exponential matrix
    double sigma_max = 0.0;
};

/// Coefficients minimizing sum_j |f(z_j) - sum_k a_k e^{lambda_k z_j}|^2 + ridge sum |a_k|^2.
DirichletExpansion expand(const Vector& samples, const FrequencySet& freqs, const GridSpec& grid, double ridge);
DirichletExpansion expand(const TruncatedFunction& f, const FrequencySet& freqs, const GridSpec& grid, double ridge);
DirichletExpansion expand(const std::function<Complex(Complex)>& f, const FrequencySet& freqs, const GridSpec& grid,
                          double ridge);

struct DecayFit {
    double b = 0.0;
    double epsilon = 0.0;
    double c = 0.0;
    double r_squared = 0.0;
    std::size_t points_used = 0;
};

/// Least squares of log|a_k| against -|lambda_k|^b, i.e. |a_{n,m}| ~ C exp(-eps (n^2+m^2)^{b/2}).
/// Coefficients with |a_k| <= drop_threshold are left out.
DecayFit decay_check(const DirichletExpansion& expansion, double b, double drop_threshold);

struct NullspaceWitness {
    Vector coeffs;  // unit l2 norm
    double residual_sup = 0.0;
    double sigma_min = 0.0;
};

/// Unit coefficient vector whose exponential sum is smallest on the grid
/// (right singular vector of the smallest singular value).
NullspaceWitness nullspace_witness(const FrequencySet& freqs, const GridSpec& grid);

/// sum_k |a_k| (1 + |lambda_k|)^{-n} e^{|lambda_k|}, the truncated coefficient-growth sum.
double coefficient_growth_sum(const DirichletExpansion& expansion, int n);

struct SigmaOptions {
    /// Adds the lattice-sum remainder of the omitted factors |omega| > R_trunc.
    bool tail_correction = true;
};

/// Weierstrass sigma of the lattice alpha Z + i beta Z from the paired product
/// over 0 < |omega| <= r_trunc. Requires r_trunc >= 10 |z|; exact 0 on lattice points.
Complex weierstrass_sigma(Complex z, double alpha, double beta, double r_trunc, SigmaOptions options = {});

/// Eisenstein sums G_{2k} = sum' omega^{-2k}, k = 2..7, of the lattice (index 2k).
std::vector<Complex> lattice_eisenstein(double alpha, double beta);

/// max over n_angles points (j + 1/2) 2 pi / n_angles on the circle |z| = r of |sigma(z)|.
double sigma_max_modulus(double r, double alpha, double beta, double r_trunc, int n_angles = 64,
                         SigmaOptions options = {});

struct GrowthOrder {
    double order = 0.0;
    double log_type = 0.0;
    std::size_t points_used = 0;
};

/// Fit of log log M(r) = order log r + log_type from (r, M(r)) samples; M <= 1 is dropped.
GrowthOrder growth_order_estimate(const std::vector<std::pair<double, double>>& samples);

}  // namespace holoframe
