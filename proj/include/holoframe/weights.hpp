#pragma once

// Radial growth conditions p(r) and the weight families built from them.

#include <optional>
#include <string>
#include <vector>

#include "holoframe/types.hpp"

namespace holoframe {

/// A radial growth function p: [0, inf) -> [0, inf).
///
/// Three kinds are supported: p(r) = r^a, p(r) = log(1 + r^2)^a, and a sampled
/// table interpolated linearly in log-radius. Tables never extrapolate.
class GrowthCondition {
public:
    enum class Kind { power, log_power, table };

    static GrowthCondition power(double a);
    static GrowthCondition log_power(double a);
    /// radii strictly increasing and positive; values nonnegative and nondecreasing.
    static GrowthCondition table(std::vector<double> radii, std::vector<double> values);

    double operator()(double r) const;

    Kind kind() const noexcept { return kind_; }
    double exponent() const noexcept { return a_; }
    const std::vector<double>& table_radii() const noexcept { return radii_; }
    const std::vector<double>& table_values() const noexcept { return values_; }

    friend bool operator==(const GrowthCondition&, const GrowthCondition&) = default;

private:
    GrowthCondition() = default;

    Kind kind_ = Kind::power;
    double a_ = 1.0;
    std::vector<double> radii_;
    std::vector<double> values_;
};

const char* to_string(GrowthCondition::Kind k);

enum class WeightScheme {
    inductive_powers,   // v_n = exp(-n p)
    projective_roots,   // w_n = exp(-p / n)
    disc_power,         // v_n(z) = (1 - |z|)^n on the unit disc
    disc_dual,          // w_n(z) = (1 + |z|)^n exp(-|z|) on the plane
    gaussian,           // v_n(z) = exp(-n gamma |z|^2 / 2), Fock rows
};

const char* to_string(WeightScheme s);

/// An indexed family of radial weights (v_n) or (w_n), 1 <= n <= n_max.
class WeightFamily {
public:
    static WeightFamily inductive_powers(GrowthCondition p, int n_max);
    static WeightFamily projective_roots(GrowthCondition p, int n_max);
    static WeightFamily disc_power(int n_max);
    static WeightFamily disc_dual(int n_max);
    static WeightFamily gaussian(double gamma, int n_max);

    WeightScheme scheme() const noexcept { return scheme_; }
    Domain domain() const noexcept { return domain_; }
    int n_max() const noexcept { return n_max_; }
    const std::optional<GrowthCondition>& base() const noexcept { return base_; }
    double gamma() const noexcept { return gamma_; }

    /// Weights decreasing in n (inductive limit) vs increasing (projective limit).
    bool is_decreasing_in_n() const noexcept;

    friend bool operator==(const WeightFamily&, const WeightFamily&) = default;

private:
    WeightFamily(WeightScheme s, Domain d, std::optional<GrowthCondition> base, double gamma, int n_max);

    WeightScheme scheme_;
    Domain domain_;
    std::optional<GrowthCondition> base_;
    double gamma_ = 0.0;
    int n_max_ = 1;
};

/// True when z lies in the (open) domain.
bool in_domain(Domain d, Complex z) noexcept;

/// v_n(|z|) for the family. Throws DomainError / IndexError.
double eval_weight(const WeightFamily& family, int n, Complex z);

struct GrowthReport {
    std::vector<double> alpha_trend;  // log(1 + r^2) / p(r)
    std::vector<double> beta_ratios;  // p(2r) / p(r)
    bool alpha_plausible = false;
    bool beta_plausible = false;
};

/// Finite-radius trend test of the two growth conditions
/// log(1+r^2) = o(p(r)) and p(2r) = O(p(r)).
GrowthReport check_growth_conditions(const GrowthCondition& p, const std::vector<double>& radii,
                                     double ratio_tolerance);

}  // namespace holoframe
