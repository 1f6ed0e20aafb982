#pragma once

// Lattice Gamma, its dual, (S, L)-cycles in the dual attractor, and the
// candidate spectra generated from W_B-cycles.

#include <string>
#include <vector>

#include "aifs/hadamard.hpp"

namespace aifs {

struct LatticeBasis {
    RationalMatrix basis;  // columns generate the lattice
    std::size_t dim() const { return basis.rows(); }
    bool contains(const RationalVector &x) const;
};

/// Z-span of the digit expansions sum_{k<=n} R^k b_k, n <= depth (default d).
/// Throws inapplicable when the span has rank < d.
LatticeBasis build_gamma(const AffineSystem &sys, std::size_t depth = 0);

/// Integer column-style echelon basis of the Z-span of `generators`.
/// Returns fewer than d columns when rank-deficient.
std::vector<RationalVector> lattice_basis(const std::vector<RationalVector> &generators);

LatticeBasis dual_lattice(const LatticeBasis &gamma);
bool contains_integer_lattice(const LatticeBasis &lat);
bool is_invariant(const LatticeBasis &lat, const IntMatrix &S);

inline constexpr std::size_t kMaxCandidates = 1'000'000;

/// All lattice points inside bounding_box(sys_L), sorted.
std::vector<RationalVector> enumerate_candidates(const LatticeBasis &lattice,
                                                 const AffineSystem &sys_L);

struct CycleRecord {
    std::vector<RationalVector> points;   // points[i] = tau_{L[word[i]]}(points[i-1]) cyclically
    std::vector<std::size_t> word;
    bool is_WB_cycle = false;
    std::size_t period() const { return points.size(); }
};

inline constexpr std::size_t kMaxCyclePeriod = 64;

struct CycleSearch {
    std::vector<CycleRecord> cycles;
    std::size_t candidates = 0;
    std::size_t on_cycles = 0;
    std::size_t transient = 0;   // candidates that reach a cycle without lying on one
    std::size_t discarded = 0;   // candidates whose forward path leaves the set
    std::size_t max_period = kMaxCyclePeriod;
    std::vector<std::string> notes;
};

/// Follows x -> S x - l inside the candidate set.
CycleSearch find_cycles(const AffineSystem &sys_L, const std::vector<RationalVector> &candidates,
                        std::size_t max_period = kMaxCyclePeriod);

/// Every cycle of the maps tau_l with period <= max_period, from fixed
/// points of the word maps. Budget-limited reference route.
std::vector<CycleRecord> find_cycles_by_words(const AffineSystem &sys_L, std::size_t max_period);

inline constexpr double kMaxWordEnumeration = 2e5;

/// Largest period the word route can afford for N digits.
std::size_t affordable_word_period(std::size_t N, std::size_t cap);

void classify_WB(const AffineSystem &sys_B, std::vector<CycleRecord> &cycles);

/// Rotation-invariant identity of a cycle (its canonical point list).
bool same_cycle(const CycleRecord &a, const CycleRecord &b);

struct CycleAnalysis {
    std::vector<RationalVector> candidates;
    CycleSearch search;
    std::vector<CycleRecord> wb_cycles;
    bool lattice_route = true;      // false: word route used (rank-deficient Gamma)
    std::size_t word_period = 0;
    bool all_cycles_WB = true;      // every cycle in the candidate set is a W_B-cycle
    std::vector<std::string> notes;
};

CycleAnalysis analyze_cycles(const DualPair &pair, std::size_t max_period = kMaxCyclePeriod);

struct SpectrumSet {
    std::vector<CycleRecord> cycles;
    IntMatrix S;
    std::vector<RationalVector> L;
    std::size_t level = 0;
    std::vector<RationalVector> elements;  // sorted, distinct
};

inline constexpr double kMaxSpectrumElements = 5e6;

/// Union over W_B-cycle points c of {-S^n c + sum_{k<n} S^k l_k}, n = level.
SpectrumSet spectrum_from_cycles(const DualPair &pair, const std::vector<CycleRecord> &cycles,
                                 std::size_t level);

struct Decomposition {
    long q = 0;  // multiplicity
    long d = 0;  // divisor of p
};

struct PropDivFamily {
    long p = 0;
    std::size_t d = 0;
    RationalVector z0;
    bool certified = false;
    std::string generator;
    std::vector<RationalVector> members(std::size_t count) const;  // p^n z0, n = 1..count
};

PropDivFamily propdiv_family(long p, std::size_t d, const std::vector<Decomposition> &decomposition);

struct ThpmuldResult {
    HadamardTriple triple;
    SpectrumSet spectrum;
    CycleAnalysis cycles;
};

/// L = {j m v0 : j = 0..d}, v0 = (1, ..., d), m = p / (d + 1).
std::vector<RationalVector> thpmuld_digits(long p, std::size_t d);
ThpmuldResult thpmuld_spectrum(long p, std::size_t d, std::size_t level);

} // namespace aifs
