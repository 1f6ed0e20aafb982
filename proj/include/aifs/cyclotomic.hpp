#pragma once

#include <span>
#include <vector>

#include "aifs/rational.hpp"

namespace aifs {

/// coefficient * exp(2 pi i phase)
struct RootTerm {
    Rational coefficient;
    Rational phase;
};

/// Common denominators above this make exact decisions unavailable.
inline constexpr long kMaxExactDenominator = 1'000'000;

/// Decides whether sum_k c_k exp(2 pi i theta_k) is exactly zero, for
/// rational c_k and theta_k. Throws Error(unsupported) when the common
/// denominator of the phases exceeds kMaxExactDenominator.
bool vanishes_exactly(std::span<const RootTerm> terms);

/// Prime factors of n (ascending, without multiplicity).
std::vector<long> prime_factors(long n);

} // namespace aifs
