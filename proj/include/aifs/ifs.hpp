#pragma once

#include <cstdint>
#include <vector>

#include "aifs/linalg.hpp"

namespace aifs {

/// The affine iterated function system tau_b(x) = R^{-1}(x + b), b in B,
/// with probability weights (uniform unless given).
class AffineSystem {
  public:
    /// Throws Error(not_expansive|borderline) for a non-expansive R,
    /// Error(shape) for digit size mismatch or N = 0, Error(parse) for
    /// duplicate digits or weights that are not positive or do not sum to 1.
    AffineSystem(ExpansiveIntMatrix R, std::vector<RationalVector> digits,
                 std::vector<Rational> weights = {});
    AffineSystem(const IntMatrix &R, std::vector<RationalVector> digits,
                 std::vector<Rational> weights = {})
        : AffineSystem(ExpansiveIntMatrix(R), std::move(digits), std::move(weights)) {}

    std::size_t dim() const { return R_.dim(); }
    std::size_t size() const { return digits_.size(); }

    const ExpansiveIntMatrix &R() const { return R_; }
    const RationalMatrix &R_inverse() const { return R_inv_; }
    const DMatrix &R_inverse_d() const { return R_inv_d_; }
    const std::vector<RationalVector> &digits() const { return digits_; }
    const std::vector<Rational> &weights() const { return weights_; }
    const std::vector<double> &weights_d() const { return weights_d_; }
    bool uniform() const { return uniform_; }
    bool digits_integral() const;
    bool contains_zero_digit() const;

    /// Upper bound for sum_{k>=1} ||R^{-k}||_2 (also valid for S = R^T).
    double inverse_power_norm_sum() const { return norm_sum_; }
    double max_digit_norm() const { return max_digit_norm_; }

    /// Throws Error(index).
    RationalVector tau(std::size_t index, const RationalVector &x) const;
    DVector tau(std::size_t index, const DVector &x) const;
    /// Fixed point of tau_index, (R - I)^{-1} b.
    RationalVector fixed_point(std::size_t index) const;

  private:
    ExpansiveIntMatrix R_;
    RationalMatrix R_inv_;
    DMatrix R_inv_d_;
    std::vector<RationalVector> digits_;
    std::vector<Rational> weights_;
    std::vector<double> weights_d_;
    bool uniform_ = true;
    double norm_sum_ = 0;
    double max_digit_norm_ = 0;
};

RationalVector tau(const AffineSystem &sys, std::size_t b_index, const RationalVector &x);

enum class AttractorMode { deterministic, chaos_game };

struct AttractorCloud {
    std::size_t depth = 0;
    AttractorMode mode = AttractorMode::deterministic;
    std::vector<DVector> points;
};

struct ChaosGameOptions {
    std::size_t points = 10000;
    std::uint64_t seed = 1;
};

inline constexpr std::size_t kChaosBurnIn = 32;
/// Deterministic clouds larger than this are refused.
inline constexpr std::size_t kMaxCloudPoints = std::size_t{1} << 26;

/// Deterministic: N^depth points tau_{b_1} o ... o tau_{b_n}(x0), x0 the fixed
/// point of the first digit, word b_1 most significant. Chaos game: the
/// requested number of points after kChaosBurnIn discarded steps.
AttractorCloud attractor(const AffineSystem &sys, std::size_t depth,
                         AttractorMode mode = AttractorMode::deterministic,
                         const ChaosGameOptions &chaos = {});

/// Exact deterministic cloud (serial); same ordering as attractor().
std::vector<RationalVector> attractor_exact(const AffineSystem &sys, std::size_t depth);

struct Box {
    DVector lo, hi;
    bool contains(const DVector &x, double slack = 0.0) const;
};

/// Axis-aligned box certified to contain the attractor, inflated by 1%.
Box bounding_box(const AffineSystem &sys);

} // namespace aifs
