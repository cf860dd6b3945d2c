#include "holoframe/frames.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "holoframe/errors.hpp"
#include "holoframe/numkernel.hpp"

namespace holoframe {

AnalysisMatrix analysis_matrix(const PointList& points, const RealVector& row_weights, int degree, Domain domain) {
    if (degree < 0 || degree > max_degree) {
        throw ArgumentError("analysis_matrix: degree must be in 0.." + std::to_string(max_degree));
    }
    if (static_cast<Eigen::Index>(points.size()) != row_weights.size()) {
        throw ArgumentError("analysis_matrix: one weight per point required");
    }
    AnalysisMatrix u;
    u.entries.resize(static_cast<Eigen::Index>(points.size()), degree + 1);
    u.row_weights = row_weights;
    u.points = points;
    u.degree = degree;
    u.domain = domain;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto r = static_cast<Eigen::Index>(i);
        if (!in_domain(domain, points[i])) throw DomainError("analysis_matrix: point outside domain");
        if (!(row_weights(r) > 0.0)) throw ArgumentError("analysis_matrix: row weights must be positive");
        Complex p{row_weights(r), 0.0};
        for (int k = 0; k <= degree; ++k) {
            u.entries(r, k) = p;
            p *= points[i];
        }
    }
    return u;
}

AnalysisMatrix analysis_matrix(const PointList& points, const WeightFamily& family, int n, int degree) {
    RealVector w(static_cast<Eigen::Index>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) w(static_cast<Eigen::Index>(i)) = eval_weight(family, n, points[i]);
    return analysis_matrix(points, w, degree, family.domain());
}

FrameEstimate frame_bounds(const Matrix& u, const std::optional<RealVector>& gram_diagonal) {
    if (u.rows() == 0) throw DegenerateError("frame_bounds: analysis matrix has no rows");
    if (gram_diagonal && (gram_diagonal->size() != u.cols() || (gram_diagonal->array() <= 0.0).any())) {
        throw ArgumentError("frame_bounds: Gram diagonal must have length D+1 and positive entries");
    }
    const numkernel::Svd d = numkernel::svd(u);
    FrameEstimate est;
    est.sigma_max = d.sigma_max();
    // Fewer rows than columns: the analysis map has a kernel.
    est.sigma_min = u.rows() < u.cols() ? 0.0 : d.sigma_min();
    est.rank = static_cast<int>(d.rank(default_rank_threshold));
    if (gram_diagonal) {
        const RealVector ev = numkernel::hermitian_gen_eig(u.adjoint() * u, *gram_diagonal);
        est.upper = ev(0);
        est.lower = std::max(ev(ev.size() - 1), 0.0);
        est.gram_diagonal_used = *gram_diagonal;
    } else {
        est.upper = est.sigma_max * est.sigma_max;
        est.lower = est.sigma_min * est.sigma_min;
    }
    return est;
}

FrameEstimate frame_bounds(const AnalysisMatrix& u, const std::optional<RealVector>& gram_diagonal) {
    return frame_bounds(u.entries, gram_diagonal);
}

RealVector fock_gram_diagonal(int degree, double gamma) {
    RealVector d(degree + 1);
    for (int k = 0; k <= degree; ++k) d(k) = fock_moment(k, gamma);
    return d;
}

std::vector<TruncatedFunction> SynthesisMatrix::dual_functions() const {
    std::vector<TruncatedFunction> out;
    out.reserve(static_cast<std::size_t>(entries.cols()));
    for (Eigen::Index i = 0; i < entries.cols(); ++i) out.emplace_back(entries.col(i), source.domain);
    return out;
}

SynthesisMatrix dual_frame(const AnalysisMatrix& u, double threshold) {
    if (!(threshold > 0.0)) throw ArgumentError("dual_frame: threshold must be positive");
    if (u.rows() == 0) throw DegenerateError("dual_frame: analysis matrix has no rows");
    const numkernel::Svd d = numkernel::svd(u.entries);
    if (u.rows() < u.cols() || !(d.sigma_min() > threshold * d.sigma_max())) {
        throw NoFrameError("dual_frame: analysis matrix is rank deficient at relative threshold " +
                           std::to_string(threshold));
    }
    SynthesisMatrix s;
    s.entries = d.V * d.singular_values.cwiseInverse().asDiagonal() * d.U.adjoint();
    s.source = u;
    s.truncation_threshold = threshold;
    s.condition = d.sigma_max() / d.sigma_min();
    return s;
}

TruncatedFunction reconstruct(const SynthesisMatrix& s, const Vector& samples) {
    if (samples.size() != s.entries.cols()) {
        throw ArgumentError("reconstruct: expected " + std::to_string(s.entries.cols()) + " samples, got " +
                            std::to_string(samples.size()));
    }
    return TruncatedFunction(s.entries * samples, s.source.domain);
}

AnalysisMatrix interleave(const AnalysisMatrix& bessel, const AnalysisMatrix& frame) {
    if (bessel.degree != frame.degree) throw ArgumentError("interleave: degree mismatch");
    if (bessel.domain != frame.domain) throw ArgumentError("interleave: domain mismatch");
    const Eigen::Index nb = bessel.rows();
    const Eigen::Index nf = frame.rows();
    AnalysisMatrix out;
    out.degree = bessel.degree;
    out.domain = bessel.domain;
    out.entries.resize(nb + nf, bessel.cols());
    out.row_weights.resize(nb + nf);
    out.points.reserve(static_cast<std::size_t>(nb + nf));
    Eigen::Index r = 0;
    auto take = [&](const AnalysisMatrix& src, Eigen::Index i) {
        out.entries.row(r) = src.entries.row(i);
        out.row_weights(r) = src.row_weights(i);
        out.points.push_back(src.points[static_cast<std::size_t>(i)]);
        ++r;
    };
    for (Eigen::Index i = 0; i < std::max(nb, nf); ++i) {
        if (i < nb) take(bessel, i);
        if (i < nf) take(frame, i);
    }
    return out;
}

AnalysisMatrix multiplier_prune(const AnalysisMatrix& u, const Vector& q) {
    if (q.size() == 0 || (q.array() == Complex{0.0, 0.0}).all()) {
        throw ArgumentError("multiplier_prune: Q must not be identically zero");
    }
    const TruncatedFunction qf(q, Domain::plane);
    std::vector<Eigen::Index> keep;
    for (std::size_t i = 0; i < u.points.size(); ++i) {
        const Complex z = u.points[i];
        double scale = 0.0;
        double zk = 1.0;
        for (Eigen::Index k = 0; k < q.size(); ++k, zk *= std::abs(z)) scale += std::abs(q(k)) * zk;
        if (std::abs(evaluate(qf, z)) > 1e-12 * scale) keep.push_back(static_cast<Eigen::Index>(i));
    }
    if (keep.empty()) throw DegenerateError("multiplier_prune: every row was removed");
    AnalysisMatrix out;
    out.degree = u.degree;
    out.domain = u.domain;
    out.entries = u.entries(keep, Eigen::all);
    out.row_weights = u.row_weights(keep);
    for (Eigen::Index i : keep) out.points.push_back(u.points[static_cast<std::size_t>(i)]);
    return out;
}

Vector analyze(const AnalysisMatrix& u, const TruncatedFunction& f) {
    if (f.degree() > u.degree) throw ArgumentError("analyze: function degree exceeds the analysis degree");
    Vector c = Vector::Zero(u.cols());
    c.head(f.coeffs().size()) = f.coeffs();
    return u.entries * c;
}

Eigen::RowVectorXcd point_functional(Complex z, double weight, int degree) {
    Eigen::RowVectorXcd row(degree + 1);
    Complex p{weight, 0.0};
    for (int k = 0; k <= degree; ++k) {
        row(k) = p;
        p *= z;
    }
    return row;
}

Eigen::RowVectorXcd taylor_functional(int k, int degree) {
    if (k < 0 || k > degree) throw IndexError("taylor_functional: k outside 0..degree");
    Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(degree + 1);
    row(k) = 1.0;
    return row;
}

double schauder_seminorm(const std::vector<TruncatedFunction>& x_vectors, const Vector& alpha,
                         const WeightFamily& family, int n, const GridSpec& grid) {
    if (static_cast<Eigen::Index>(x_vectors.size()) != alpha.size()) {
        throw ArgumentError("schauder_seminorm: alpha length must equal the number of vectors");
    }
    if (x_vectors.empty()) return 0.0;
    const PointList pts = grid.points();
    double best = 0.0;
    TruncatedFunction partial = x_vectors.front() * Complex{0.0, 0.0};
    for (std::size_t i = 0; i < x_vectors.size(); ++i) {
        partial = partial + x_vectors[i] * alpha(static_cast<Eigen::Index>(i));
        best = std::max(best, weighted_sup_norm(partial, family, n, pts).value);
    }
    return best;
}

SchauderReport verify_schauder_frame(const Matrix& functionals, const std::vector<TruncatedFunction>& x_vectors,
                                     const std::vector<TruncatedFunction>& test_set, const GridSpec& grid,
                                     const WeightFamily& family, int n, double tol) {
    if (functionals.rows() != static_cast<Eigen::Index>(x_vectors.size())) {
        throw ArgumentError("verify_schauder_frame: functional and vector lists differ in length");
    }
    const PointList pts = grid.points();
    SchauderReport rep;
    for (const TruncatedFunction& x : test_set) {
        if (x.degree() + 1 > functionals.cols()) {
            throw ArgumentError("verify_schauder_frame: test function degree exceeds the functional degree");
        }
        Vector c = Vector::Zero(functionals.cols());
        c.head(x.coeffs().size()) = x.coeffs();
        const Vector coords = functionals * c;
        TruncatedFunction residual = x;
        for (std::size_t i = 0; i < x_vectors.size(); ++i) {
            residual = residual - x_vectors[i] * coords(static_cast<Eigen::Index>(i));
        }
        const double r = weighted_sup_norm(residual, family, n, pts).value;
        rep.residuals.push_back(r);
        rep.max_residual = std::max(rep.max_residual, r);
    }
    rep.pass = rep.max_residual <= tol;
    return rep;
}

}  // namespace holoframe
