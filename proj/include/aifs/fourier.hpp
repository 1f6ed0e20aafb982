#pragma once

#include <complex>
#include <cstdint>

#include "aifs/ifs.hpp"

namespace aifs {

using Complex = std::complex<double>;

struct SymbolValue {
    Complex value;
    /// Set only when the rational-arithmetic test proved m_B(x) = 0.
    bool exact_zero = false;
};

struct TruncationPolicy {
    int max_terms = 64;
    double tail_bound = 1e-12;
};

struct MuHatValue {
    Complex value;
    double error_radius = 0;
    int terms = 0;
    bool exact_zero = false;
};

/// Floating-point view of a system used by the infinite-product kernels.
/// Built from an AffineSystem, or from a conjugated system (V R V^{-1}, V B)
/// whose matrix need not be integral.
struct SymbolData {
    std::size_t dim = 0;
    std::vector<DVector> digits;
    std::vector<double> weights;
    DMatrix S_inv;          // (R^T)^{-1}
    double lipschitz = 0;   // 2 pi sum_b w_b ||b||, so |m(y) - 1| <= lipschitz ||y||
    double norm_sum = 0;    // bound on sum_{k>=1} ||S^{-k}||
};

SymbolData symbol_data(const AffineSystem &sys);
/// Symbol data for R_V = V R V^{-1}, B_V = V B with the same weights.
SymbolData conjugated_symbol(const AffineSystem &sys, const RationalMatrix &V);

Complex eval_symbol(const SymbolData &s, const DVector &x);

SymbolValue eval_mB(const AffineSystem &sys, const DVector &x);
/// Exact vanishing decision at a rational point. Throws Error(unsupported)
/// when the phase denominator exceeds 10^6.
SymbolValue eval_mB_exact(const AffineSystem &sys, const RationalVector &x);
/// Phases b . x mod 1 computed exactly, one per digit.
std::vector<Rational> exact_phases(const AffineSystem &sys, const RationalVector &x);

double eval_WB(const AffineSystem &sys, const DVector &x);
/// W_B(x) = 1 exactly, i.e. all b . x agree mod 1 (weights are positive).
bool WB_is_one_exact(const AffineSystem &sys, const RationalVector &x);

/// max over `samples` pseudo-random x of |sum_l W_B(S^{-1}(x + l)) - 1|.
/// Throws Error(cardinality) if |B| != |L| and Error(shape) on dimension mismatch.
double check_WB_normalization(const AffineSystem &sys_B, const AffineSystem &sys_L,
                              std::size_t samples = 100, std::uint64_t seed = 7);

/// Truncated product prod_{n=1}^{K} m_B(S^{-n} x) with a tail estimate.
MuHatValue eval_mu_hat(const SymbolData &s, const DVector &x, const TruncationPolicy &policy = {});
MuHatValue eval_mu_hat(const AffineSystem &sys, const DVector &x,
                       const TruncationPolicy &policy = {});
/// Exactly K factors, no tail logic; error radius still estimated.
MuHatValue eval_mu_hat_terms(const SymbolData &s, const DVector &x, int terms);
/// Rational argument: a factor that is numerically tiny is tested exactly and,
/// when certified, the whole product is reported as an exact zero.
MuHatValue eval_mu_hat_exact(const AffineSystem &sys, const RationalVector &x,
                             const TruncationPolicy &policy = {});

/// |mu(x) - m_B(S^{-1} x) mu(S^{-1} x)| with both products cut at the same K.
double invariance_residual(const AffineSystem &sys, const DVector &x,
                           const TruncationPolicy &policy = {});

} // namespace aifs
