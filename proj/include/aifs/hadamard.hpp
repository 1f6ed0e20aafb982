#pragma once

#include <string>
#include <vector>

#include "aifs/ifs.hpp"

namespace aifs {

inline constexpr double kUnitarityTolerance = 1e-10;

struct HadamardTriple {
    ExpansiveIntMatrix R;
    std::vector<RationalVector> B, L;
    /// max |H* H - I| for H[b,l] = N^{-1/2} exp(2 pi i R^{-1} b . l)
    double unitarity_defect = 0;
    bool exact_checked = false;   // exact certificate attempted and completed
    bool exact_unitary = false;   // result of the exact certificate
    bool certified = false;
    std::vector<std::string> warnings;
};

/// Throws Error(cardinality) when |B| != |L|, Error(singular) for singular R,
/// Error(shape) for dimension mismatches.
HadamardTriple check_hadamard(const IntMatrix &R, const std::vector<RationalVector> &B,
                              const std::vector<RationalVector> &L);

struct DualPair {
    AffineSystem primal; // (R, B)
    AffineSystem dual;   // (S = R^T, L)
};

/// Throws Error(not_certified) for an uncertified triple.
DualPair make_dual_pair(const HadamardTriple &triple);

} // namespace aifs
