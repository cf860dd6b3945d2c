#include <cmath>
#include <numbers>
#include <string>

#include "holoframe/dirichlet.hpp"
#include "holoframe/errors.hpp"

namespace holoframe {

namespace {

double divisor_power_sum(int n, int p) {
    double s = 0.0;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0) s += std::pow(static_cast<double>(d), p);
    }
    return s;
}

constexpr int max_eisenstein_index = 7;  // G_4 .. G_14

bool is_lattice_point(Complex z, double alpha, double beta) {
    const double n = z.real() / alpha;
    const double m = z.imag() / beta;
    return n == std::nearbyint(n) && m == std::nearbyint(m);
}

}  // namespace

// Lambda = s (Z + tau Z) with tau purely imaginary and Im(tau) >= 1, so the
// q-expansions converge with q <= exp(-2 pi).
std::vector<Complex> lattice_eisenstein(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw ArgumentError("lattice_eisenstein: periods must be positive");
    const bool wide = beta >= alpha;
    const Complex scale = wide ? Complex{alpha, 0.0} : Complex{0.0, beta};
    const double tau_im = wide ? beta / alpha : alpha / beta;
    const double q = std::exp(-2.0 * std::numbers::pi * tau_im);

    double e4 = 1.0, e6 = 1.0, qn = 1.0;
    for (int n = 1; n <= 40; ++n) {
        qn *= q;
        if (qn < 1e-300) break;
        e4 += 240.0 * divisor_power_sum(n, 3) * qn;
        e6 -= 504.0 * divisor_power_sum(n, 5) * qn;
    }
    const double pi = std::numbers::pi;
    const double zeta4 = std::pow(pi, 4) / 90.0;
    const double zeta6 = std::pow(pi, 6) / 945.0;
    const Complex g4 = 2.0 * zeta4 * e4 / std::pow(scale, 4);
    const Complex g6 = 2.0 * zeta6 * e6 / std::pow(scale, 6);

    // Laurent coefficients of the Weierstrass p-function: c_k = (2k - 1) G_{2k}.
    std::vector<Complex> c(max_eisenstein_index + 1, Complex{0.0, 0.0});
    c[2] = 3.0 * g4;
    c[3] = 5.0 * g6;
    for (int k = 4; k <= max_eisenstein_index; ++k) {
        Complex s{0.0, 0.0};
        for (int m = 2; m <= k - 2; ++m) s += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
        c[static_cast<std::size_t>(k)] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * s;
    }
    std::vector<Complex> g(max_eisenstein_index + 1, Complex{0.0, 0.0});
    for (int k = 2; k <= max_eisenstein_index; ++k) {
        g[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)] / (2.0 * k - 1.0);
    }
    return g;
}

Complex weierstrass_sigma(Complex z, double alpha, double beta, double r_trunc, SigmaOptions options) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw ArgumentError("weierstrass_sigma: periods must be positive");
    if (!(r_trunc * (1.0 + 1e-12) >= 10.0 * std::abs(z))) {
        throw ArgumentError("weierstrass_sigma: r_trunc must be >= 10 |z|");
    }
    if (is_lattice_point(z, alpha, beta)) return Complex{0.0, 0.0};

    // Pairs (omega, -omega) combine to (1 - u^2) exp(u^2), u = z / omega.
    // Representatives: n > 0, or n = 0 and m > 0, in (n, m) order.
    const auto nmax = static_cast<long>(std::floor(r_trunc / alpha));
    const auto mmax = static_cast<long>(std::floor(r_trunc / beta));
    const double r2 = r_trunc * r_trunc;
    Complex product = z;
    std::vector<Complex> partial(max_eisenstein_index + 1, Complex{0.0, 0.0});
    for (long n = 0; n <= nmax; ++n) {
        for (long m = (n == 0 ? 1 : -mmax); m <= mmax; ++m) {
            const double x = alpha * static_cast<double>(n);
            const double y = beta * static_cast<double>(m);
            if (x * x + y * y > r2) continue;
            const Complex omega{x, y};
            const Complex u2 = (z / omega) * (z / omega);
            product *= (1.0 - u2) * std::exp(u2);
            if (options.tail_correction) {
                const Complex inv2 = 1.0 / (omega * omega);
                Complex p = inv2;
                for (int k = 2; k <= max_eisenstein_index; ++k) {
                    p *= inv2;
                    partial[static_cast<std::size_t>(k)] += 2.0 * p;  // omega and -omega
                }
            }
        }
    }
    if (!options.tail_correction) return product;

    // log E(u) = -sum_{j >= 3} u^j / j; odd j cancel over the symmetric tail.
    const std::vector<Complex> g = lattice_eisenstein(alpha, beta);
    Complex log_tail{0.0, 0.0};
    const Complex z2 = z * z;
    Complex zp = z2;
    for (int k = 2; k <= max_eisenstein_index; ++k) {
        zp *= z2;
        const auto idx = static_cast<std::size_t>(k);
        log_tail -= zp / (2.0 * k) * (g[idx] - partial[idx]);
    }
    return product * std::exp(log_tail);
}

double sigma_max_modulus(double r, double alpha, double beta, double r_trunc, int n_angles, SigmaOptions options) {
    if (n_angles < 1) throw ArgumentError("sigma_max_modulus: need at least one angle");
    double best = 0.0;
    for (int j = 0; j < n_angles; ++j) {
        const double theta = 2.0 * std::numbers::pi * (j + 0.5) / n_angles;
        best = std::max(best, std::abs(weierstrass_sigma(std::polar(r, theta), alpha, beta, r_trunc, options)));
    }
    return best;
}

}  // namespace holoframe
