#include "holoframe/weights.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "holoframe/errors.hpp"

namespace holoframe {

GrowthCondition GrowthCondition::power(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw ArgumentError("power growth: exponent must be positive");
    GrowthCondition g;
    g.kind_ = Kind::power;
    g.a_ = a;
    return g;
}

GrowthCondition GrowthCondition::log_power(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw ArgumentError("log_power growth: exponent must be positive");
    GrowthCondition g;
    g.kind_ = Kind::log_power;
    g.a_ = a;
    return g;
}

GrowthCondition GrowthCondition::table(std::vector<double> radii, std::vector<double> values) {
    if (radii.size() < 2 || radii.size() != values.size()) {
        throw ArgumentError("table growth: need at least two (radius, value) pairs of equal length");
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0) || !std::isfinite(radii[i])) {
            throw ArgumentError("table growth: radii must be positive and finite");
        }
        if (!(values[i] >= 0.0) || !std::isfinite(values[i])) {
            throw ArgumentError("table growth: values must be nonnegative and finite");
        }
        if (i > 0 && !(radii[i] > radii[i - 1])) {
            throw ArgumentError("table growth: radii must be strictly increasing");
        }
        if (i > 0 && values[i] < values[i - 1]) {
            throw ArgumentError("table growth: values must be nondecreasing");
        }
    }
    GrowthCondition g;
    g.kind_ = Kind::table;
    g.a_ = 0.0;
    g.radii_ = std::move(radii);
    g.values_ = std::move(values);
    return g;
}

double GrowthCondition::operator()(double r) const {
    if (!(r >= 0.0)) throw DomainError("growth condition: radius must be nonnegative");
    switch (kind_) {
        case Kind::power:
            return std::pow(r, a_);
        case Kind::log_power:
            return std::pow(std::log1p(r * r), a_);
        case Kind::table: {
            if (r < radii_.front() || r > radii_.back()) {
                throw DomainError("table growth: radius " + std::to_string(r) +
                                  " outside the tabulated range");
            }
            auto hi = std::upper_bound(radii_.begin(), radii_.end(), r);
            if (hi == radii_.end()) return values_.back();
            const auto j = static_cast<std::size_t>(hi - radii_.begin());
            const double t = (std::log(r) - std::log(radii_[j - 1])) /
                             (std::log(radii_[j]) - std::log(radii_[j - 1]));
            return values_[j - 1] + t * (values_[j] - values_[j - 1]);
        }
    }
    return 0.0;
}

const char* to_string(GrowthCondition::Kind k) {
    switch (k) {
        case GrowthCondition::Kind::power: return "power";
        case GrowthCondition::Kind::log_power: return "log_power";
        case GrowthCondition::Kind::table: return "table";
    }
    return "?";
}

const char* to_string(WeightScheme s) {
    switch (s) {
        case WeightScheme::inductive_powers: return "inductive_powers";
        case WeightScheme::projective_roots: return "projective_roots";
        case WeightScheme::disc_power: return "disc_power";
        case WeightScheme::disc_dual: return "disc_dual";
        case WeightScheme::gaussian: return "gaussian";
    }
    return "?";
}

WeightFamily::WeightFamily(WeightScheme s, Domain d, std::optional<GrowthCondition> base, double gamma,
                           int n_max)
    : scheme_(s), domain_(d), base_(std::move(base)), gamma_(gamma), n_max_(n_max) {
    if (n_max < 1) throw ArgumentError("weight family: n_max must be a positive integer");
}

WeightFamily WeightFamily::inductive_powers(GrowthCondition p, int n_max) {
    return {WeightScheme::inductive_powers, Domain::plane, std::move(p), 0.0, n_max};
}

WeightFamily WeightFamily::projective_roots(GrowthCondition p, int n_max) {
    return {WeightScheme::projective_roots, Domain::plane, std::move(p), 0.0, n_max};
}

WeightFamily WeightFamily::disc_power(int n_max) {
    return {WeightScheme::disc_power, Domain::unit_disc, std::nullopt, 0.0, n_max};
}

// (1+|z|)^n e^{-|z|} weighs entire functions, so the domain is the plane.
WeightFamily WeightFamily::disc_dual(int n_max) {
    return {WeightScheme::disc_dual, Domain::plane, std::nullopt, 0.0, n_max};
}

WeightFamily WeightFamily::gaussian(double gamma, int n_max) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ArgumentError("gaussian weights: gamma must be positive");
    return {WeightScheme::gaussian, Domain::plane, std::nullopt, gamma, n_max};
}

bool WeightFamily::is_decreasing_in_n() const noexcept {
    return scheme_ != WeightScheme::projective_roots && scheme_ != WeightScheme::disc_dual;
}

bool in_domain(Domain d, Complex z) noexcept {
    const double r = std::abs(z);
    if (!std::isfinite(r)) return false;
    return d == Domain::plane || r < 1.0;
}

double eval_weight(const WeightFamily& family, int n, Complex z) {
    if (n < 1 || n > family.n_max()) {
        throw IndexError("eval_weight: index n = " + std::to_string(n) + " outside 1.." +
                         std::to_string(family.n_max()));
    }
    if (!in_domain(family.domain(), z)) {
        throw DomainError("eval_weight: point outside the " + std::string(to_string(family.domain())));
    }
    const double r = std::abs(z);
    const double dn = static_cast<double>(n);
    switch (family.scheme()) {
        case WeightScheme::inductive_powers:
            return std::exp(-dn * (*family.base())(r));
        case WeightScheme::projective_roots:
            return std::exp(-(*family.base())(r) / dn);
        case WeightScheme::disc_power:
            return std::pow(1.0 - r, dn);
        case WeightScheme::disc_dual:
            return std::pow(1.0 + r, dn) * std::exp(-r);
        case WeightScheme::gaussian:
            return std::exp(-dn * family.gamma() * r * r / 2.0);
    }
    return 0.0;
}

GrowthReport check_growth_conditions(const GrowthCondition& p, const std::vector<double>& radii,
                                     double ratio_tolerance) {
    if (radii.size() < 4) throw ArgumentError("check_growth_conditions: need at least 4 radii");
    if (radii.back() < 100.0) throw ArgumentError("check_growth_conditions: last radius must be >= 100");
    if (!(ratio_tolerance > 0.0)) throw ArgumentError("check_growth_conditions: ratio_tolerance must be positive");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
            throw ArgumentError("check_growth_conditions: radii must be positive and strictly increasing");
        }
    }
    GrowthReport rep;
    for (double r : radii) {
        const double pr = p(r);
        if (pr == 0.0) {
            throw DegenerateError("check_growth_conditions: p(" + std::to_string(r) + ") = 0");
        }
        rep.alpha_trend.push_back(std::log1p(r * r) / pr);
        rep.beta_ratios.push_back(p(2.0 * r) / pr);
    }
    const auto& t = rep.alpha_trend;
    const std::size_t k = t.size();
    rep.alpha_plausible = t[k - 3] > t[k - 2] && t[k - 2] > t[k - 1];
    rep.beta_plausible =
        *std::max_element(rep.beta_ratios.begin(), rep.beta_ratios.end()) <= ratio_tolerance;
    return rep;
}

}  // namespace holoframe
