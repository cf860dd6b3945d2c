#pragma once

// Desk-scale elements of weighted spaces of holomorphic functions:
// truncated Taylor expansions c_0 + c_1 z + ... + c_D z^D.

#include <cstdint>
#include <random>
#include <vector>

#include "holoframe/types.hpp"
#include "holoframe/weights.hpp"

namespace holoframe {

/// Largest degree for which the unscaled monomial basis is supported.
inline constexpr int max_degree = 30;

class TruncatedFunction {
public:
    TruncatedFunction(Vector coeffs, Domain domain = Domain::plane);

    const Vector& coeffs() const noexcept { return coeffs_; }
    Domain domain() const noexcept { return domain_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    TruncatedFunction operator+(const TruncatedFunction& other) const;
    TruncatedFunction operator-(const TruncatedFunction& other) const;
    TruncatedFunction operator*(Complex s) const;

private:
    Vector coeffs_;
    Domain domain_;
};

/// Polar sampling grid: every radius carries the same number of equispaced
/// angles 2 pi j / angles_per_radius, j = 0 .. angles_per_radius - 1.
class GridSpec {
public:
    GridSpec(std::vector<double> radii, int angles_per_radius, Domain domain = Domain::plane);

    /// n_radii radii geometrically spaced over [r_min, r_max].
    static GridSpec geometric(double r_min, double r_max, int n_radii, int angles_per_radius,
                              Domain domain = Domain::plane);
    /// 64 radii over [1e-3, r_max] with 128 angles.
    static GridSpec standard(double r_max, Domain domain = Domain::plane);

    const std::vector<double>& radii() const noexcept { return radii_; }
    int angles_per_radius() const noexcept { return angles_; }
    Domain domain() const noexcept { return domain_; }
    double max_radius() const noexcept { return radii_.back(); }
    std::size_t size() const noexcept { return radii_.size() * static_cast<std::size_t>(angles_); }

    /// Radius-major ordering.
    PointList points() const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    std::vector<double> radii_;
    int angles_;
    Domain domain_;
};

/// Horner evaluation. Throws DomainError for |z| >= 1 on disc functions.
Complex evaluate(const TruncatedFunction& f, Complex z);

struct SupNorm {
    double value = 0.0;
    Complex argmax{0.0, 0.0};
};

/// max over grid points of v_n(z) |f(z)|; approximates the weighted sup from below.
SupNorm weighted_sup_norm(const TruncatedFunction& f, const WeightFamily& family, int n, const GridSpec& grid);

/// Same quantity over an arbitrary finite point list.
SupNorm weighted_sup_norm(const TruncatedFunction& f, const WeightFamily& family, int n, const PointList& points);

/// pi k! / gamma^{k+1}: the Fock norm square of z^k.
double fock_moment(int k, double gamma);

/// Exact integral of |f|^2 exp(-gamma |z|^2) over the plane.
double fock_norm_sq(const TruncatedFunction& f, double gamma);

/// Coefficients with real and imaginary parts uniform in [-1, 1], scaled by
/// exp(-decay k). Deterministic for a given seed on every platform.
TruncatedFunction random_function(int degree, double decay, std::uint64_t seed, Domain domain = Domain::plane);

/// Uniform [0, 1) doubles from a seeded std::mt19937_64 using the top 53 bits.
class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace holoframe
