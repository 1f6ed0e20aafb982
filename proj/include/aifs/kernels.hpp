#pragma once

// Data-parallel kernels. Each OpenMP kernel in aifs::kernels has a serial
// reference with the same signature in aifs::kernels::serial; tests compare
// the two and bench/ times them.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "aifs/fourier.hpp"

namespace aifs::kernels {

/// Points tau_{b_1} o ... o tau_{b_n}(x0) for all N^n words, word index
/// sum_i b_i N^{n-i} (b_1 most significant).
std::vector<DVector> expand_words(const DMatrix &R_inv, const std::vector<DVector> &digits,
                                  const DVector &x0, std::size_t depth);

/// Levenberg-Marquardt refinement of a zero of the symbol from `start`.
/// Returns the root when |m| < 1e-12 is reached.
std::optional<DVector> refine_zero(const SymbolData &s, DVector start);

/// Grid scan of [0,1)^d with n_grid points per axis; cells whose centre is
/// close enough to a zero (Lipschitz test) are refined. Roots are reduced
/// mod 1 and returned in scan order (duplicates included).
std::vector<DVector> scan_zeros(const SymbolData &s, std::size_t n_grid);

struct DnBest {
    double value = 0;
    std::vector<long> k; // lexicographically smallest minimiser (sorted)
};

/// min |1 + sum_{l=1}^d exp(2 pi i k_l / modulus)| over k in [0, modulus)^d,
/// enumerating non-decreasing tuples only.
DnBest dn_search(long modulus, std::size_t d);

/// sum_lambda |mu_hat(x + lambda)|^2 with per-term truncation `policy`.
double parseval_sum(const SymbolData &s, const std::vector<DVector> &spectrum, const DVector &x,
                    const TruncationPolicy &policy);

/// Adjacency lists (j > i only) of the relation `related(i, j)` on n items.
std::vector<std::vector<std::uint32_t>>
pairwise_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)> &related);

namespace serial {

std::vector<DVector> expand_words(const DMatrix &R_inv, const std::vector<DVector> &digits,
                                  const DVector &x0, std::size_t depth);
std::vector<DVector> scan_zeros(const SymbolData &s, std::size_t n_grid);
DnBest dn_search(long modulus, std::size_t d);
double parseval_sum(const SymbolData &s, const std::vector<DVector> &spectrum, const DVector &x,
                    const TruncationPolicy &policy);
std::vector<std::vector<std::uint32_t>>
pairwise_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)> &related);

} // namespace serial

/// Ties in dn_search closer than this are broken lexicographically.
inline constexpr double kDnTieTolerance = 1e-13;

} // namespace aifs::kernels
