#include "holoframe/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "holoframe/errors.hpp"

namespace holoframe {

const char* to_string(PNorm p) {
    switch (p) {
        case PNorm::ell_1: return "ell_1";
        case PNorm::ell_2: return "ell_2";
        case PNorm::ell_inf: return "ell_inf";
    }
    return "?";
}

const char* to_string(LimitKind k) {
    return k == LimitKind::inductive ? "inductive" : "projective";
}

SequenceSpaceSpec::SequenceSpaceSpec(RealMatrix kothe, PNorm p_norm, LimitKind limit_kind)
    : kothe_(std::move(kothe)), p_(p_norm), limit_(limit_kind) {
    if (kothe_.rows() < 1 || kothe_.cols() < 1) {
        throw ArgumentError("sequence space: Koethe matrix must be nonempty");
    }
    if (!kothe_.allFinite() || (kothe_.array() <= 0.0).any()) {
        throw ArgumentError("sequence space: Koethe entries must be finite and > 0");
    }
    for (Eigen::Index n = 0; n + 1 < kothe_.rows(); ++n) {
        const bool ok = limit_ == LimitKind::inductive
                            ? (kothe_.row(n + 1).array() <= kothe_.row(n).array()).all()
                            : (kothe_.row(n + 1).array() >= kothe_.row(n).array()).all();
        if (!ok) {
            throw ArgumentError(std::string("sequence space: Koethe rows must be ") +
                                (limit_ == LimitKind::inductive ? "decreasing" : "increasing") +
                                " in n for a " + to_string(limit_) + " limit");
        }
    }
}

double seq_norm(const SequenceSpaceSpec& space, int n, const Vector& x) {
    if (n < 1 || n > space.n_max()) {
        throw IndexError("seq_norm: level " + std::to_string(n) + " outside 1.." + std::to_string(space.n_max()));
    }
    if (x.size() > space.i_max()) {
        throw ArgumentError("seq_norm: sequence longer than i_max = " + std::to_string(space.i_max()));
    }
    const RealVector w = space.kothe().row(n - 1).head(x.size()).transpose();
    const RealVector terms = w.cwiseProduct(x.cwiseAbs());
    if (terms.size() == 0) return 0.0;
    switch (space.p_norm()) {
        case PNorm::ell_1: return terms.sum();
        case PNorm::ell_2: return terms.norm();
        case PNorm::ell_inf: return terms.maxCoeff();
    }
    return 0.0;
}

SequenceSpaceSpec beta_dual(const SequenceSpaceSpec& space) {
    PNorm dual_p;
    switch (space.p_norm()) {
        case PNorm::ell_inf: dual_p = PNorm::ell_1; break;
        case PNorm::ell_1: dual_p = PNorm::ell_inf; break;
        default:
            throw UnsupportedPairingError("beta_dual: only weighted ell_1 / ell_inf steps are supported");
    }
    const LimitKind dual_limit =
        space.limit_kind() == LimitKind::inductive ? LimitKind::projective : LimitKind::inductive;
    return SequenceSpaceSpec(space.kothe().cwiseInverse(), dual_p, dual_limit);
}

std::vector<Complex> pairing_diagnostic(const Vector& x, const Vector& y, const std::vector<int>& checkpoints) {
    if (x.size() != y.size()) throw ArgumentError("pairing_diagnostic: sequences must have equal length");
    int last = 0;
    for (int c : checkpoints) {
        if (c < 0 || c > x.size()) {
            throw ArgumentError("pairing_diagnostic: checkpoint " + std::to_string(c) + " exceeds length");
        }
        last = std::max(last, c);
    }
    std::vector<Complex> prefix(static_cast<std::size_t>(last) + 1, Complex{0.0, 0.0});
    for (int i = 0; i < last; ++i) prefix[i + 1] = prefix[i] + x(i) * y(i);
    std::vector<Complex> out;
    out.reserve(checkpoints.size());
    for (int c : checkpoints) out.push_back(prefix[static_cast<std::size_t>(c)]);
    return out;
}

}  // namespace holoframe
