#pragma once

// Koethe-type weighted sequence spaces, truncated to i_max coordinates.

#include <vector>

#include "holoframe/types.hpp"

namespace holoframe {

enum class PNorm { ell_1, ell_2, ell_inf };
enum class LimitKind { inductive, projective };

const char* to_string(PNorm p);
const char* to_string(LimitKind k);

/// Steps Lambda_n = ell_p(a(n, .)) of an inductive or projective limit.
/// Row n-1 of the Koethe matrix holds the weights of step n.
class SequenceSpaceSpec {
public:
    SequenceSpaceSpec(RealMatrix kothe, PNorm p_norm, LimitKind limit_kind);

    const RealMatrix& kothe() const noexcept { return kothe_; }
    PNorm p_norm() const noexcept { return p_; }
    LimitKind limit_kind() const noexcept { return limit_; }
    int n_max() const noexcept { return static_cast<int>(kothe_.rows()); }
    int i_max() const noexcept { return static_cast<int>(kothe_.cols()); }

private:
    RealMatrix kothe_;
    PNorm p_;
    LimitKind limit_;
};

/// Weighted p-norm of (a(n, i) x_i)_i; n is 1-based.
double seq_norm(const SequenceSpaceSpec& space, int n, const Vector& x);

/// Closed-form beta dual for weighted ell_1 / ell_inf steps: the p-norm
/// swaps, the limit kind flips, and weights become entrywise reciprocals.
SequenceSpaceSpec beta_dual(const SequenceSpaceSpec& space);

/// Partial sums sum_{i <= N} x_i y_i at each checkpoint N (1-based counts).
std::vector<Complex> pairing_diagnostic(const Vector& x, const Vector& y,
                                        const std::vector<int>& checkpoints);

}  // namespace holoframe
