#include "holoframe/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "holoframe/errors.hpp"
#include "holoframe/numkernel.hpp"
#include "sharp_constant.hpp"

namespace holoframe {

const char* to_string(SetGenerator g) {
    switch (g) {
        case SetGenerator::lattice: return "lattice";
        case SetGenerator::ring_roots: return "ring_roots";
        case SetGenerator::explicit_points: return "explicit";
    }
    return "?";
}

const char* to_string(SampleNorm n) {
    return n == SampleNorm::sup ? "sup" : "ell_2";
}

SamplingSet SamplingSet::lattice(double alpha, double beta, double radius) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw ArgumentError("lattice: alpha and beta must be positive");
    if (!(radius >= std::max(alpha, beta)) || !std::isfinite(radius)) {
        throw ArgumentError("lattice: radius must be >= max(alpha, beta)");
    }
    const auto nmax = static_cast<long>(std::floor(radius / alpha)) + 1;
    const auto mmax = static_cast<long>(std::floor(radius / beta)) + 1;
    SamplingSet s;
    s.generator_ = SetGenerator::lattice;
    s.metadata_ = {{"alpha", alpha}, {"beta", beta}, {"radius", radius}};
    for (long n = -nmax; n <= nmax; ++n) {
        for (long m = -mmax; m <= mmax; ++m) {
            const double x = alpha * static_cast<double>(n);
            const double y = beta * static_cast<double>(m);
            if (x * x + y * y <= radius * radius) s.points_.emplace_back(x, y);
        }
    }
    return s;
}

int ring_size(int k) {
    return static_cast<int>(std::floor(2.0 * std::numbers::pi * k * k)) + 1;
}

SamplingSet SamplingSet::ring_roots(int rings) {
    if (rings < 1) throw ArgumentError("ring_roots: need at least one ring");
    SamplingSet s;
    s.generator_ = SetGenerator::ring_roots;
    s.metadata_ = {{"rings", static_cast<double>(rings)}};
    for (int k = 1; k <= rings; ++k) {
        const int l = ring_size(k);
        s.ring_sizes_.push_back(l);
        for (int j = 1; j <= l; ++j) {
            s.points_.push_back(std::polar(static_cast<double>(k), 2.0 * std::numbers::pi * j / l));
        }
    }
    return s;
}

SamplingSet SamplingSet::explicit_points(PointList points) {
    if (points.empty()) throw ArgumentError("sampling set: must be nonempty");
    for (const Complex& z : points) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ArgumentError("sampling set: points must be finite");
        }
    }
    // Pairwise distinctness via a sort on the real part.
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a].real() < points[b].real(); });
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            const Complex za = points[order[a]];
            const Complex zb = points[order[b]];
            if (zb.real() - za.real() > 1e-12) break;
            if (std::abs(za - zb) <= 1e-12) {
                throw ArgumentError("sampling set: points " + std::to_string(order[a]) + " and " +
                                    std::to_string(order[b]) + " coincide");
            }
        }
    }
    SamplingSet s;
    s.generator_ = SetGenerator::explicit_points;
    s.points_ = std::move(points);
    return s;
}

SamplingSet SamplingSet::subset(const std::vector<std::size_t>& indices) const {
    PointList pts;
    pts.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i >= points_.size()) throw IndexError("subset: index out of range");
        pts.push_back(points_[i]);
    }
    return explicit_points(std::move(pts));
}

Vector restriction(const TruncatedFunction& f, const SamplingSet& s) {
    Vector out(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) out(static_cast<Eigen::Index>(i)) = evaluate(f, s.points()[i]);
    return out;
}

double sample_norm(const TruncatedFunction& f, const SamplingSet& s, const WeightFamily& family, int n,
                   SampleNorm norm) {
    const Vector vals = restriction(f, s);
    double sup = 0.0;
    double sq = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double v = eval_weight(family, n, s.points()[i]) * std::abs(vals(static_cast<Eigen::Index>(i)));
        sup = std::max(sup, v);
        sq += v * v;
    }
    return norm == SampleNorm::sup ? sup : std::sqrt(sq);
}

AnalysisMatrix analysis_matrix(const SamplingSet& s, const WeightFamily& family, int n, int degree) {
    return analysis_matrix(s.points(), family, n, degree);
}

std::optional<SamplingConstant> sampling_constant(const SamplingSet& s, const WeightFamily& family, int n, int m,
                                                  int degree, const GridSpec& grid, double threshold,
                                                  SampleNorm norm) {
    if (!(threshold > 0.0)) throw ArgumentError("sampling_constant: threshold must be positive");
    const AnalysisMatrix e = analysis_matrix(s, family, n, degree);
    const AnalysisMatrix g = analysis_matrix(grid.points(), family, m, degree);
    const numkernel::Svd d = numkernel::svd(e.entries);
    const double smin = e.rows() < e.cols() ? 0.0 : d.sigma_min();
    if (!(smin > threshold * d.sigma_max())) return std::nullopt;

    SamplingConstant out;
    out.sigma_min = smin;
    out.sigma_max = d.sigma_max();
    if (norm == SampleNorm::ell_2) {
        // The min-norm representation of each grid row is the l2-optimal one.
        const Matrix composite = g.entries * numkernel::pseudo_inverse(e.entries, 1e-14);
        out.value = composite.rowwise().norm().maxCoeff();
        out.attained = out.value;
        out.pinv_bound = out.value;
        return out;
    }
    const detail::SharpBounds b = detail::sharp_sup_constant(e.entries, g.entries);
    out.value = b.upper;
    out.attained = b.lower;
    out.pinv_bound = b.pinv_bound;
    out.rows_solved = b.rows_solved;
    return out;
}

SufficiencyReport weak_sufficiency_report(const SamplingSet& s, const WeightFamily& family, int n, int degree,
                                          const GridSpec& grid, int m_max, double threshold, SampleNorm norm) {
    if (m_max < n) throw ArgumentError("weak_sufficiency_report: m_max must be >= n");
    SufficiencyReport rep{n, std::nullopt, std::nullopt, 0.0, grid, degree, {}};
    rep.sigma_min_unweighted = uniqueness_margin(s, degree).margin;
    for (int m = n; m <= m_max; ++m) {
        const auto c = sampling_constant(s, family, n, m, degree, grid, threshold, norm);
        if (!c) continue;
        rep.scan.emplace_back(m, c->value);
        if (!rep.m_found) {
            rep.m_found = m;
            rep.constant = c->value;
        }
    }
    return rep;
}

UniquenessMargin uniqueness_margin(const SamplingSet& s, int degree) {
    if (degree < 0 || degree > max_degree) throw ArgumentError("uniqueness_margin: degree out of range");
    const RealVector ones = RealVector::Ones(static_cast<Eigen::Index>(s.size()));
    const AnalysisMatrix v = analysis_matrix(s.points(), ones, degree, Domain::plane);
    const numkernel::Svd d = numkernel::svd_full_v(v.entries);
    UniquenessMargin out;
    out.sigma_max = d.sigma_max();
    out.margin = v.rows() < v.cols() ? 0.0 : d.sigma_min();
    out.witness = d.V.col(d.V.cols() - 1);
    return out;
}

SchneiderReport schneider_density_check(const SamplingSet& s, const GrowthCondition& q, double c,
                                        const GridSpec& probe_grid) {
    if (!(c > 0.0)) throw ArgumentError("schneider_density_check: C must be positive");
    double hull = 0.0;
    for (const Complex& z : s.points()) hull = std::max(hull, std::abs(z));
    if (probe_grid.max_radius() > hull) {
        throw ArgumentError("schneider_density_check: probe grid extends beyond the radius of the set");
    }
    SchneiderReport rep;
    for (const Complex& z : probe_grid.points()) {
        const double r = std::abs(z);
        if (r == 0.0) continue;
        double dist = std::numeric_limits<double>::infinity();
        for (const Complex& p : s.points()) dist = std::min(dist, std::abs(z - p));
        const double ratio = dist * std::sqrt(q(r)) / (c * r);
        ++rep.probes_checked;
        if (ratio > rep.max_violation_ratio) {
            rep.max_violation_ratio = ratio;
            rep.worst_probe = z;
        }
    }
    rep.pass = rep.max_violation_ratio <= 1.0;
    return rep;
}

}  // namespace holoframe
