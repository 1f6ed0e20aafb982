#pragma once

// Dynamics of x -> S x mod Z^d on zeros of the symbol, and the
// non-spectrality bounds built from them.

#include <optional>
#include <string>
#include <vector>

#include "aifs/fourier.hpp"

namespace aifs {

/// Exact point of [0,1)^d.
using TorusPoint = RationalVector;

/// Reduces every coordinate into [0,1).
TorusPoint to_torus(const RationalVector &x);

/// x -> S x mod Z^d.
TorusPoint torus_map(const IntMatrix &S, const TorusPoint &x);

enum class ZeroExactness { certified, numeric };

/// One-parameter zero variety {x : x[fixed] = 1/2, x[free2] = x[free1] + 1/2}.
struct ZeroFamily {
    std::size_t fixed = 0, free1 = 0, free2 = 0;
    std::string description;
};

struct ZeroSet {
    std::vector<TorusPoint> points;       // certified exact zeros (sorted)
    std::vector<DVector> numeric_points;  // refined roots with no exact certificate
    std::vector<ZeroFamily> families;     // symbolic varieties; points then holds samples
    ZeroExactness exactness = ZeroExactness::certified;
    bool possibly_incomplete = false;
    bool finite_complete = false;         // points is the whole zero set
    std::string structure_tag;
};

struct ZeroScanOptions {
    std::size_t n_grid = 64;
    long max_denominator = 10000;
};

/// True when B = {0, e_1, ..., e_d} as a set.
bool is_standard_simplex(const AffineSystem &sys);

ZeroSet find_zeros(const AffineSystem &sys, const ZeroScanOptions &opts = {});

struct OrbitResult {
    std::vector<TorusPoint> trail;  // trail[pre_period + period] == trail[pre_period]
    std::size_t pre_period = 0;
    std::size_t period = 0;
};

OrbitResult orbit(const IntMatrix &S, const TorusPoint &x, std::size_t max_steps = 1u << 20);

/// Closure of Z under the torus map. Throws inapplicable when 0 is reached
/// and budget when the closure outgrows max_size.
std::vector<TorusPoint> invariant_superset(const IntMatrix &S, const std::vector<TorusPoint> &Z,
                                           std::size_t max_size = 100000);

std::size_t orthogonality_bound_finite(const std::vector<TorusPoint> &Zp);

struct DistanceBound {
    Rational delta_squared;  // exact lower bound on dist(O(Z), Z^d)^2
    double delta = 0;
    Integer bound;           // (floor(sqrt(d)/delta) + 1)^d
    bool from_families = false;
    std::size_t explored = 0;
    std::vector<std::string> notes;
};

/// (floor(sqrt(d/delta2)) + 1)^d, computed exactly.
Integer distance_bound_value(std::size_t d, const Rational &delta2);

DistanceBound orthogonality_bound_distance(const IntMatrix &S, const ZeroSet &Z,
                                           std::size_t horizon = 1u << 16);

struct DnResult {
    long p = 0;
    std::size_t d = 0;
    int n = 0;
    long modulus = 0;          // p^n
    double value = 0;          // D_n
    double scaled = 0;         // p^n D_n
    std::vector<long> argmin;  // lexicographically smallest minimiser
    bool exact_zero = false;
};

inline constexpr long kMaxDnModulus = 10000;
inline constexpr double kMaxDnTuples = 2e8;

DnResult lemconf_Dn(long p, std::size_t d, int n);

struct DnVerdict {
    std::vector<DnResult> rows;
    std::string verdict;   // "criterion triggered (evidence)" or "inconclusive"
    double min_scaled = 0;
    bool truncated = false;  // budget stopped the sweep early
    std::string note;
};

inline constexpr double kDnEvidenceThreshold = 0.5;
inline constexpr double kDnStableRelative = 0.05;

DnVerdict lemconf_verdict(long p, std::size_t d, int n_max);

struct WeightedZeroVerdict {
    bool has_zero = false;
    bool exact = false;
};

WeightedZeroVerdict has_zero_weighted(const AffineSystem &sys, std::size_t n_grid = 64);

} // namespace aifs
