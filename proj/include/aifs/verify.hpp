#pragma once

// Orthogonality certificates, bounded searches for orthogonal families, and
// the Parseval-sum completeness estimate.

#include <optional>
#include <string>
#include <vector>

#include "aifs/cycles.hpp"
#include "aifs/torus.hpp"

namespace aifs {

enum class PairStatus { certified_orthogonal, numerically_nonzero, undetermined };
const char *to_string(PairStatus s);

struct OrthogonalityCertificate {
    RationalVector lambda, lambda2;
    int vanishing_index = 0;
    TorusPoint witness;  // S^{-n}(lambda - lambda2) mod 1, sign chosen lexicographically smaller
};

struct PairCheck {
    PairStatus status = PairStatus::undetermined;
    std::optional<OrthogonalityCertificate> certificate;
    double mu_hat_abs = 0;       // |mu_hat(lambda - lambda2)|, filled when no certificate
    bool tail_nonvanishing = false;  // the Lipschitz tail rules out later zero factors
};

inline constexpr int kDefaultChainDepth = 40;

/// Exact zero-chain oracle for one system; reusable across many pairs.
class ZeroChainOracle {
  public:
    explicit ZeroChainOracle(const AffineSystem &sys, int n_max = kDefaultChainDepth);
    PairCheck check(const RationalVector &a, const RationalVector &b) const;
    bool certified(const RationalVector &a, const RationalVector &b) const;
    int depth() const { return n_max_; }

  private:
    std::optional<std::pair<int, TorusPoint>> first_zero(const RationalVector &delta,
                                                         bool *tail_stop) const;
    const AffineSystem *sys_;
    int n_max_;
    SymbolData symbol_;
    std::vector<RationalMatrix> inv_pow_;  // S^{-n}, n = 0..n_max
    std::vector<DMatrix> inv_pow_d_;
    double tail_constant_;                 // L * max(1, A)
};

PairCheck orthogonal_pair(const AffineSystem &sys, const RationalVector &a, const RationalVector &b,
                          int n_max = kDefaultChainDepth);

/// Axis box [lo, hi]^d (per coordinate) and a denominator cap.
struct CandidateGrid {
    RationalVector lo, hi;
    long max_den = 1;
    std::vector<RationalVector> points() const;  // lexicographic order
};

inline constexpr std::size_t kMaxGridPoints = 200'000;
inline constexpr double kMaxPairChecks = 5e7;

/// Zeros of m_B in [0,1)^d when they are known exactly and completely.
std::optional<std::vector<TorusPoint>> complete_zero_set(const AffineSystem &sys);

struct FamilyResult {
    std::vector<RationalVector> family;
    std::size_t candidates = 0;
    std::size_t edges = 0;        // certified-orthogonal pairs
    std::string strategy;         // "difference set" or "pairwise"
    std::size_t differences = 0;  // size of the difference set used
};

FamilyResult max_orthogonal_family(const AffineSystem &sys, const std::vector<RationalVector> &candidates,
                                   int n_max = kDefaultChainDepth);
FamilyResult max_orthogonal_family(const AffineSystem &sys, const CandidateGrid &grid,
                                   int n_max = kDefaultChainDepth);

/// Largest clique of an undirected graph given by upper adjacency (j > i).
std::vector<std::size_t> max_clique(const std::vector<std::vector<std::uint32_t>> &upper);

struct PairCensus {
    std::size_t pairs = 0, certified = 0, uncertified = 0;
};

PairCensus certify_pairs(const AffineSystem &sys, const std::vector<RationalVector> &elements,
                         int n_max = kDefaultChainDepth);

double completeness_Q(const AffineSystem &sys, const std::vector<RationalVector> &spectrum,
                      const DVector &x, const TruncationPolicy &policy = {});

/// Kronecker points frac(k alpha), alpha from the generalised golden ratio.
std::vector<DVector> quasi_random_points(std::size_t d, std::size_t count);

inline constexpr std::size_t kSamplePoints = 32;
inline constexpr double kSpectralEvidenceQ = 0.99;
inline constexpr double kBesselSlack = 1e-8;

struct CompletenessReport {
    std::vector<DVector> sample_points;
    std::vector<double> Q_values;
    std::size_t level = 0;
    std::size_t spectrum_size = 0;
    int product_terms = 0;
    double min_Q = 0, max_Q = 0, mean_Q = 0;
};

CompletenessReport completeness_report(const AffineSystem &sys, const SpectrumSet &spectrum,
                                       std::size_t samples = kSamplePoints,
                                       const TruncationPolicy &policy = {});

} // namespace aifs
