#pragma once

// Sampling sets, restriction maps, and the constants that compare sampled
// weighted norms with full weighted norms.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holoframe/frames.hpp"
#include "holoframe/funcspace.hpp"
#include "holoframe/types.hpp"
#include "holoframe/weights.hpp"

namespace holoframe {

enum class SetGenerator { lattice, ring_roots, explicit_points };

const char* to_string(SetGenerator g);

class SamplingSet {
public:
    /// All alpha n + i beta m with |.| <= radius, ordered by (n, m).
    static SamplingSet lattice(double alpha, double beta, double radius);
    /// For k = 1..rings: l_k = smallest integer > 2 pi k^2 points k exp(2 pi i j / l_k), j = 1..l_k.
    static SamplingSet ring_roots(int rings);
    /// Points must be pairwise distinct (to 1e-12) and nonempty.
    static SamplingSet explicit_points(PointList points);

    const PointList& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    SetGenerator generator() const noexcept { return generator_; }
    const std::vector<std::pair<std::string, double>>& metadata() const noexcept { return metadata_; }
    /// Ring sizes l_k for ring_roots sets; empty otherwise.
    const std::vector<int>& ring_sizes() const noexcept { return ring_sizes_; }

    /// Explicit set made of the listed indices (order preserved).
    SamplingSet subset(const std::vector<std::size_t>& indices) const;

private:
    SamplingSet() = default;

    PointList points_;
    SetGenerator generator_ = SetGenerator::explicit_points;
    std::vector<std::pair<std::string, double>> metadata_;
    std::vector<int> ring_sizes_;
};

/// Smallest integer strictly greater than 2 pi k^2.
int ring_size(int k);

/// (f(z_i))_i in the set's order.
Vector restriction(const TruncatedFunction& f, const SamplingSet& s);

enum class SampleNorm { sup, ell_2 };

const char* to_string(SampleNorm n);

/// ||f||_{n,S}: sup_i (or l2 over i) of v_n(z_i) |f(z_i)|.
double sample_norm(const TruncatedFunction& f, const SamplingSet& s, const WeightFamily& family, int n,
                   SampleNorm norm = SampleNorm::sup);

AnalysisMatrix analysis_matrix(const SamplingSet& s, const WeightFamily& family, int n, int degree);

struct SamplingConstant {
    double value = 0.0;        // certified: ||f||_{m,grid} <= value ||f||_{n,S}
    double attained = 0.0;     // ratio attained by an explicit polynomial
    double pinv_bound = 0.0;   // row-sum norm of (grid matrix) * pinv(E)
    std::size_t rows_solved = 0;
    double sigma_min = 0.0;    // of the weighted sample matrix E
    double sigma_max = 0.0;
};

/// Sharp constant C in sup_grid v_m |f| <= C ||f||_{n,S} over polynomials of
/// degree <= D. std::nullopt when E is rank deficient (sigma_min <= threshold sigma_max).
std::optional<SamplingConstant> sampling_constant(const SamplingSet& s, const WeightFamily& family, int n, int m,
                                                  int degree, const GridSpec& grid,
                                                  double threshold = default_rank_threshold,
                                                  SampleNorm norm = SampleNorm::sup);

struct SufficiencyReport {
    int n = 1;
    std::optional<int> m_found;
    std::optional<double> constant;
    double sigma_min_unweighted = 0.0;
    GridSpec grid_used;
    int degree = 0;
    /// (m, C) for every scanned m with a finite constant.
    std::vector<std::pair<int, double>> scan;
};

SufficiencyReport weak_sufficiency_report(const SamplingSet& s, const WeightFamily& family, int n, int degree,
                                          const GridSpec& grid, int m_max,
                                          double threshold = default_rank_threshold,
                                          SampleNorm norm = SampleNorm::sup);

struct UniquenessMargin {
    double margin = 0.0;  // smallest singular value of (z_i^k), 0 if |S| <= D
    double sigma_max = 0.0;
    Vector witness;       // right singular vector of the smallest singular value
    bool is_uniqueness_set(double threshold = default_rank_threshold) const {
        return margin > threshold * sigma_max;
    }
};

UniquenessMargin uniqueness_margin(const SamplingSet& s, int degree);

struct SchneiderReport {
    double max_violation_ratio = 0.0;
    bool pass = false;
    Complex worst_probe{0.0, 0.0};
    std::size_t probes_checked = 0;
};

/// Ratios d(z, S) sqrt(q(|z|)) / (C |z|) over the probe grid; pass iff all <= 1.
SchneiderReport schneider_density_check(const SamplingSet& s, const GrowthCondition& q, double c,
                                        const GridSpec& probe_grid);

}  // namespace holoframe
