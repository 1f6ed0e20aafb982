#pragma once

// End-to-end analysis of a Hadamard triple: cycles, spectrum, pairwise
// orthogonality and the Parseval completeness estimate.

#include <string>
#include <vector>

#include "aifs/cycles.hpp"
#include "aifs/io.hpp"
#include "aifs/verify.hpp"

namespace aifs {

inline constexpr const char *kVerdictSpectral = "spectral evidence";
inline constexpr const char *kVerdictNotOrthogonal = "orthogonality not certified";
inline constexpr const char *kVerdictIncomplete = "incomplete evidence";

/// Cap on spectrum elements fed to the Parseval sum; the level is lowered to fit.
inline constexpr std::size_t kMaxParsevalElements = 70000;

struct OnbOptions {
    std::size_t level = 8;
    std::size_t ortho_level = 3;
    std::size_t samples = kSamplePoints;
    int n_max = kDefaultChainDepth;
    bool cycles_complete = false;  // set by catalog entries
    TruncationPolicy policy;
};

struct OnbReport {
    HadamardTriple triple;
    CycleAnalysis cycles;
    std::size_t level = 0;
    std::size_t spectrum_size = 0;
    std::size_t ortho_level = 0;
    PairCensus census;
    CompletenessReport completeness;
    bool cycles_complete = false;
    std::string verdict;
    std::vector<std::string> notes;
};

/// Throws not_certified for a triple that fails the Hadamard test.
OnbReport analyze_triple(const IntMatrix &R, const std::vector<RationalVector> &B,
                         const std::vector<RationalVector> &L, const OnbOptions &opts = {});

struct ConjectureReport {
    OnbReport forward;   // (R, B, L)
    OnbReport swapped;   // (R^T, L, B)
    bool both_spectral = false;
};

ConjectureReport conjecture_probe(const IntMatrix &R, const std::vector<RationalVector> &B,
                                  const std::vector<RationalVector> &L, const OnbOptions &opts = {});

json to_json(const CycleRecord &c);
json to_json(const HadamardTriple &t);
json to_json(const OnbReport &r);
json to_json(const ConjectureReport &r);

} // namespace aifs
