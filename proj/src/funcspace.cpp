#include "holoframe/funcspace.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "holoframe/errors.hpp"

namespace holoframe {

TruncatedFunction::TruncatedFunction(Vector coeffs, Domain domain)
    : coeffs_(std::move(coeffs)), domain_(domain) {
    if (coeffs_.size() < 1) throw ArgumentError("truncated function: need at least one coefficient");
    if (!coeffs_.allFinite()) throw ArgumentError("truncated function: coefficients must be finite");
}

namespace {

Vector padded(const Vector& c, Eigen::Index n) {
    Vector out = Vector::Zero(n);
    out.head(c.size()) = c;
    return out;
}

}  // namespace

TruncatedFunction TruncatedFunction::operator+(const TruncatedFunction& other) const {
    if (domain_ != other.domain_) throw ArgumentError("truncated function: domain mismatch");
    const Eigen::Index n = std::max(coeffs_.size(), other.coeffs_.size());
    return TruncatedFunction(padded(coeffs_, n) + padded(other.coeffs_, n), domain_);
}

TruncatedFunction TruncatedFunction::operator-(const TruncatedFunction& other) const {
    return *this + other * Complex{-1.0, 0.0};
}

TruncatedFunction TruncatedFunction::operator*(Complex s) const {
    return TruncatedFunction(coeffs_ * s, domain_);
}

GridSpec::GridSpec(std::vector<double> radii, int angles_per_radius, Domain domain)
    : radii_(std::move(radii)), angles_(angles_per_radius), domain_(domain) {
    if (radii_.empty()) throw ArgumentError("grid: radii must be nonempty");
    if (angles_ < 8) throw ArgumentError("grid: angles_per_radius must be >= 8");
    for (std::size_t i = 0; i < radii_.size(); ++i) {
        if (!(radii_[i] > 0.0) || !std::isfinite(radii_[i])) throw ArgumentError("grid: radii must be positive");
        if (i > 0 && !(radii_[i] > radii_[i - 1])) throw ArgumentError("grid: radii must be strictly increasing");
    }
    if (domain_ == Domain::unit_disc && !(radii_.back() < 1.0)) {
        throw DomainError("grid: disc grids need max radius < 1");
    }
}

GridSpec GridSpec::geometric(double r_min, double r_max, int n_radii, int angles_per_radius, Domain domain) {
    if (n_radii < 1 || !(r_min > 0.0) || !(r_max >= r_min) || (n_radii > 1 && !(r_max > r_min))) {
        throw ArgumentError("grid: need 0 < r_min < r_max and n_radii >= 1");
    }
    std::vector<double> radii(static_cast<std::size_t>(n_radii));
    if (n_radii == 1) {
        radii[0] = r_max;
    } else {
        const double step = std::log(r_max / r_min) / (n_radii - 1);
        for (int i = 0; i < n_radii; ++i) radii[static_cast<std::size_t>(i)] = r_min * std::exp(step * i);
        radii.back() = r_max;
    }
    return GridSpec(std::move(radii), angles_per_radius, domain);
}

GridSpec GridSpec::standard(double r_max, Domain domain) {
    return geometric(1e-3, r_max, 64, 128, domain);
}

PointList GridSpec::points() const {
    PointList pts;
    pts.reserve(size());
    for (double r : radii_) {
        for (int j = 0; j < angles_; ++j) {
            pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / angles_));
        }
    }
    return pts;
}

Complex evaluate(const TruncatedFunction& f, Complex z) {
    if (!in_domain(f.domain(), z)) {
        throw DomainError("evaluate: point outside the " + std::string(to_string(f.domain())));
    }
    const Vector& c = f.coeffs();
    Complex acc = c(c.size() - 1);
    for (Eigen::Index k = c.size() - 2; k >= 0; --k) acc = acc * z + c(k);
    return acc;
}

SupNorm weighted_sup_norm(const TruncatedFunction& f, const WeightFamily& family, int n, const PointList& points) {
    if (points.empty()) throw ArgumentError("weighted_sup_norm: empty grid");
    SupNorm best;
    best.value = -1.0;
    for (const Complex& z : points) {
        const double v = eval_weight(family, n, z) * std::abs(evaluate(f, z));
        if (v > best.value) {
            best.value = v;
            best.argmax = z;
        }
    }
    return best;
}

SupNorm weighted_sup_norm(const TruncatedFunction& f, const WeightFamily& family, int n, const GridSpec& grid) {
    return weighted_sup_norm(f, family, n, grid.points());
}

double fock_moment(int k, double gamma) {
    return std::numbers::pi * std::tgamma(k + 1.0) / std::pow(gamma, k + 1.0);
}

double fock_norm_sq(const TruncatedFunction& f, double gamma) {
    if (f.domain() != Domain::plane) throw DomainError("fock_norm_sq: Fock norms need functions on the plane");
    if (!(gamma > 0.0)) throw ArgumentError("fock_norm_sq: gamma must be positive");
    if (f.degree() > max_degree) {
        throw DegreeOverflowError("fock_norm_sq: degree " + std::to_string(f.degree()) + " exceeds " +
                                  std::to_string(max_degree));
    }
    double total = 0.0;
    for (int k = 0; k <= f.degree(); ++k) total += std::norm(f.coeffs()(k)) * fock_moment(k, gamma);
    return total;
}

TruncatedFunction random_function(int degree, double decay, std::uint64_t seed, Domain domain) {
    if (degree < 0) throw ArgumentError("random_function: degree must be >= 0");
    if (!(decay >= 0.0)) throw ArgumentError("random_function: decay must be nonnegative");
    UniformSource rng(seed);
    Vector c(degree + 1);
    for (int k = 0; k <= degree; ++k) {
        const double re = rng.uniform(-1.0, 1.0);
        const double im = rng.uniform(-1.0, 1.0);
        c(k) = Complex{re, im} * std::exp(-decay * k);
    }
    return TruncatedFunction(std::move(c), domain);
}

}  // namespace holoframe
