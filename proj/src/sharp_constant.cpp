#include "sharp_constant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "holoframe/numkernel.hpp"

namespace holoframe::detail {

// The row problem sup Re(g c) s.t. |E_i c| <= 1 is solved in real
// coordinates x = (Re c, Im c) with the log barrier
//   F_t(x) = -t Re(g c) - sum_i log(1 - |E_i c|^2),
// whose parameter is 2 per constraint, so a centred point is within 2s/t of
// the optimum.
RowSolution solve_row(const Matrix& e, const Eigen::RowVectorXcd& g, double rtol) {
    const Eigen::Index s = e.rows();
    const Eigen::Index k = e.cols();
    const Eigen::Index dim = 2 * k;

    RealMatrix ar(s, dim), bi(s, dim);
    ar << e.real(), -e.imag();
    bi << e.imag(), e.real();
    RealVector gv(dim);
    gv << g.real().transpose(), -g.imag().transpose();

    RowSolution out;
    const double gscale = g.cwiseAbs().sum();
    if (gscale == 0.0) {
        out.c = Vector::Zero(k);
        out.multipliers = RealVector::Zero(s);
        return out;
    }

    RealVector x = RealVector::Zero(dim);
    RealVector a = RealVector::Zero(s), b = RealVector::Zero(s), w = RealVector::Ones(s);
    double t = static_cast<double>(s) / gscale;
    const double nu = 2.0 * static_cast<double>(s);

    auto barrier = [&](const RealVector& xa, const RealVector& xb, const RealVector& xx, double& f) {
        const RealVector q = xa.cwiseAbs2() + xb.cwiseAbs2();
        if (!(q.maxCoeff() < 1.0)) return false;
        f = -t * gv.dot(xx) - (1.0 - q.array()).log().sum();
        return true;
    };

    for (int stage = 0; stage < 60; ++stage) {
        for (int it = 0; it < 100; ++it) {
            a = ar * x;
            b = bi * x;
            w = (1.0 - (a.cwiseAbs2() + b.cwiseAbs2()).array()).inverse().matrix();
            const RealVector grad = -t * gv + 2.0 * (ar.transpose() * a.cwiseProduct(w) +
                                                     bi.transpose() * b.cwiseProduct(w));
            const RealMatrix gq = 2.0 * (a.asDiagonal() * ar + b.asDiagonal() * bi);
            RealMatrix h = ar.transpose() * (2.0 * w).asDiagonal() * ar +
                           bi.transpose() * (2.0 * w).asDiagonal() * bi +
                           gq.transpose() * w.cwiseAbs2().asDiagonal() * gq;
            Eigen::LDLT<RealMatrix> ldlt(h);
            RealVector dx = ldlt.solve(-grad);
            if (ldlt.info() != Eigen::Success || !dx.allFinite()) {
                dx = h.completeOrthogonalDecomposition().solve(-grad);
                if (!dx.allFinite()) break;
            }
            const double decrement = -grad.dot(dx);
            if (!(decrement > 2e-12)) break;

            double f0 = 0.0;
            barrier(a, b, x, f0);
            double step = 1.0;
            bool moved = false;
            for (int ls = 0; ls < 60; ++ls, step *= 0.5) {
                const RealVector xn = x + step * dx;
                double f1 = 0.0;
                if (barrier(ar * xn, bi * xn, xn, f1) && f1 <= f0 - 0.25 * step * decrement) {
                    x = xn;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
        const double val = gv.dot(x);
        if (nu / t <= rtol * std::max(val, std::numeric_limits<double>::min())) break;
        t *= 20.0;
    }

    a = ar * x;
    b = bi * x;
    const RealVector q = a.cwiseAbs2() + b.cwiseAbs2();
    w = (1.0 - q.array()).inverse().matrix();
    out.c = x.head(k).cast<Complex>() + Complex{0.0, 1.0} * x.tail(k).cast<Complex>();
    out.lower = gv.dot(x);
    out.upper = out.lower + nu / t;
    out.multipliers = w.cwiseProduct(q.cwiseSqrt());
    return out;
}

namespace {

// y_j with y_j E = g_j for each requested row j, concentrated on the support
// of the weights, then corrected with the pseudo-inverse so the identity holds
// to rounding. Returns ||y_j||_1.
RealVector weighted_representation_norms(const Matrix& e, const Matrix& g_rows, const Matrix& pinv,
                                         const RealVector& weights) {
    const double wmax = weights.maxCoeff();
    RealVector d(weights.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::sqrt(weights(i) / wmax + 1e-12);
    const Matrix f = d.asDiagonal() * e;
    const Matrix f_pinv = numkernel::pseudo_inverse(f, 1e-14);
    Matrix y = (g_rows * f_pinv) * d.asDiagonal();
    const Matrix resid = g_rows - y * e;
    y += resid * pinv;
    return y.cwiseAbs().rowwise().sum();
}

}  // namespace

SharpBounds sharp_sup_constant(const Matrix& e, const Matrix& g, double rtol) {
    SharpBounds out;
    const Matrix pinv = numkernel::pseudo_inverse(e, 1e-14);
    RealVector ub = (g * pinv).cwiseAbs().rowwise().sum();
    out.pinv_bound = ub.maxCoeff();

    std::vector<Eigen::Index> alive(static_cast<std::size_t>(g.rows()));
    for (Eigen::Index j = 0; j < g.rows(); ++j) alive[static_cast<std::size_t>(j)] = j;

    double lower = 0.0;
    double upper_solved = 0.0;
    while (!alive.empty()) {
        auto top = std::max_element(alive.begin(), alive.end(),
                                    [&](Eigen::Index p, Eigen::Index q) { return ub(p) < ub(q); });
        const Eigen::Index j = *top;
        if (ub(j) <= lower * (1.0 + rtol)) break;

        const RowSolution sol = solve_row(e, g.row(j), rtol);
        ++out.rows_solved;
        upper_solved = std::max(upper_solved, std::min(sol.upper, ub(j)));
        lower = std::max(lower, sol.lower);
        const double scale = (e * sol.c).cwiseAbs().maxCoeff();
        if (scale > 0.0) lower = std::max(lower, (g * sol.c).cwiseAbs().maxCoeff() / scale);
        alive.erase(top);

        if (!alive.empty() && sol.multipliers.maxCoeff() > 0.0) {
            const Matrix rows = g(alive, Eigen::all);
            const RealVector bounds = weighted_representation_norms(e, rows, pinv, sol.multipliers);
            for (Eigen::Index r = 0; r < bounds.size(); ++r) {
                const Eigen::Index row = alive[static_cast<std::size_t>(r)];
                ub(row) = std::min(ub(row), bounds(r));
            }
        }
        std::erase_if(alive, [&](Eigen::Index row) { return ub(row) <= lower * (1.0 + rtol); });
    }
    out.lower = lower;
    out.upper = std::max(upper_solved, lower * (1.0 + rtol));
    return out;
}

}  // namespace holoframe::detail
