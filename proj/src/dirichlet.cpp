#include "holoframe/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "holoframe/errors.hpp"
#include "holoframe/numkernel.hpp"

namespace holoframe {

FrequencySet FrequencySet::square(int n) {
    if (n < 0) throw ArgumentError("square frequencies: N must be >= 0");
    FrequencySet f;
    f.generator_ = Generator::square;
    f.half_width_ = n;
    for (int a = -n; a <= n; ++a) {
        for (int b = -n; b <= n; ++b) f.lambdas_.emplace_back(a, b);
    }
    return f;
}

FrequencySet FrequencySet::explicit_list(PointList lambdas) {
    if (lambdas.empty()) throw ArgumentError("frequencies: list must be nonempty");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(lambdas[i] - lambdas[j]) <= 1e-12) {
                throw ArgumentError("frequencies: entries " + std::to_string(j) + " and " + std::to_string(i) +
                                    " coincide");
            }
        }
    }
    FrequencySet f;
    f.generator_ = Generator::explicit_list;
    f.lambdas_ = std::move(lambdas);
    return f;
}

Matrix exp_matrix(const FrequencySet& freqs, const PointList& grid_points) {
    if (freqs.size() == 0 || grid_points.empty()) throw ArgumentError("exp_matrix: empty input");
    Matrix m(static_cast<Eigen::Index>(grid_points.size()), static_cast<Eigen::Index>(freqs.size()));
    for (std::size_t j = 0; j < grid_points.size(); ++j) {
        for (std::size_t k = 0; k < freqs.size(); ++k) {
            const Complex arg = freqs.lambdas()[k] * grid_points[j];
            if (std::abs(arg.real()) > exp_argument_limit) {
                throw RangeError("exp_matrix: |Re(lambda z)| = " + std::to_string(std::abs(arg.real())) +
                                 " exceeds the overflow guard");
            }
            m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = std::exp(arg);
        }
    }
    return m;
}

GridSpec dirichlet_grid(double radius) {
    return GridSpec::geometric(1e-3, radius, 16, 32);
}

DirichletExpansion expand(const Vector& samples, const FrequencySet& freqs, const GridSpec& grid, double ridge) {
    if (!(ridge >= 0.0)) throw ArgumentError("expand: ridge must be nonnegative");
    const Matrix m = exp_matrix(freqs, grid.points());
    if (samples.size() != m.rows()) throw ArgumentError("expand: one sample per grid point required");
    const numkernel::Svd d = numkernel::svd(m);
    const double cut = expansion_rcond * d.sigma_max();
    Vector proj = d.U.adjoint() * samples;
    for (Eigen::Index i = 0; i < proj.size(); ++i) {
        const double s = d.singular_values(i);
        proj(i) *= s > cut ? s / (s * s + ridge) : 0.0;
    }
    DirichletExpansion out{freqs, d.V * proj, 0.0, grid, ridge, d.sigma_min(), d.sigma_max()};
    out.residual_sup = (m * out.coeffs - samples).cwiseAbs().maxCoeff();
    return out;
}

DirichletExpansion expand(const TruncatedFunction& f, const FrequencySet& freqs, const GridSpec& grid, double ridge) {
    const PointList pts = grid.points();
    Vector samples(static_cast<Eigen::Index>(pts.size()));
    for (std::size_t j = 0; j < pts.size(); ++j) samples(static_cast<Eigen::Index>(j)) = evaluate(f, pts[j]);
    return expand(samples, freqs, grid, ridge);
}

DirichletExpansion expand(const std::function<Complex(Complex)>& f, const FrequencySet& freqs, const GridSpec& grid,
                          double ridge) {
    const PointList pts = grid.points();
    Vector samples(static_cast<Eigen::Index>(pts.size()));
    for (std::size_t j = 0; j < pts.size(); ++j) samples(static_cast<Eigen::Index>(j)) = f(pts[j]);
    return expand(samples, freqs, grid, ridge);
}

DecayFit decay_check(const DirichletExpansion& expansion, double b, double drop_threshold) {
    if (expansion.freqs.generator() != FrequencySet::Generator::square) {
        throw ArgumentError("decay_check: frequencies must come from the square generator");
    }
    if (!(b > 0.0)) throw ArgumentError("decay_check: b must be positive");
    std::vector<double> xs, ys;
    for (std::size_t k = 0; k < expansion.freqs.size(); ++k) {
        const double mag = std::abs(expansion.coeffs(static_cast<Eigen::Index>(k)));
        if (!(mag > drop_threshold)) continue;
        xs.push_back(-std::pow(std::abs(expansion.freqs.lambdas()[k]), b));
        ys.push_back(std::log(mag));
    }
    if (xs.size() < 3) {
        throw InsufficientDataError("decay_check: only " + std::to_string(xs.size()) +
                                    " coefficients above the drop threshold");
    }
    const auto count = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= count;
    my /= count;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (!(sxx > 0.0)) throw InsufficientDataError("decay_check: all retained frequencies have equal modulus");
    DecayFit fit;
    fit.b = b;
    fit.epsilon = sxy / sxx;
    fit.c = std::exp(my - fit.epsilon * mx);
    fit.points_used = xs.size();
    const double ss_res = std::max(syy - fit.epsilon * sxy, 0.0);
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

NullspaceWitness nullspace_witness(const FrequencySet& freqs, const GridSpec& grid) {
    const Matrix m = exp_matrix(freqs, grid.points());
    const numkernel::Svd d = numkernel::svd_full_v(m);
    NullspaceWitness out;
    out.coeffs = d.V.col(d.V.cols() - 1);
    out.coeffs /= out.coeffs.norm();
    out.residual_sup = (m * out.coeffs).cwiseAbs().maxCoeff();
    out.sigma_min = m.rows() < m.cols() ? 0.0 : d.sigma_min();
    return out;
}

double coefficient_growth_sum(const DirichletExpansion& expansion, int n) {
    double total = 0.0;
    for (std::size_t k = 0; k < expansion.freqs.size(); ++k) {
        const double r = std::abs(expansion.freqs.lambdas()[k]);
        total += std::abs(expansion.coeffs(static_cast<Eigen::Index>(k))) * std::pow(1.0 + r, -n) * std::exp(r);
    }
    return total;
}

GrowthOrder growth_order_estimate(const std::vector<std::pair<double, double>>& samples) {
    std::vector<double> xs, ys;
    for (const auto& [r, big_m] : samples) {
        if (!(r > 0.0) || !(big_m > 1.0) || !std::isfinite(big_m)) continue;
        xs.push_back(std::log(r));
        ys.push_back(std::log(std::log(big_m)));
    }
    if (xs.size() < 5) {
        throw InsufficientDataError("growth_order_estimate: need 5 radii with M(r) > 1, have " +
                                    std::to_string(xs.size()));
    }
    RealMatrix a(static_cast<Eigen::Index>(xs.size()), 2);
    RealVector y(static_cast<Eigen::Index>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        a(static_cast<Eigen::Index>(i), 0) = xs[i];
        a(static_cast<Eigen::Index>(i), 1) = 1.0;
        y(static_cast<Eigen::Index>(i)) = ys[i];
    }
    const RealVector sol = a.colPivHouseholderQr().solve(y);
    return GrowthOrder{sol(0), sol(1), xs.size()};
}

}  // namespace holoframe
