#include "aifs/hadamard.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "aifs/cyclotomic.hpp"

namespace aifs {

HadamardTriple check_hadamard(const IntMatrix &R, const std::vector<RationalVector> &B,
                              const std::vector<RationalVector> &L) {
    if (B.size() != L.size())
        throw Error(ErrorKind::cardinality,
                    "|B| = " + std::to_string(B.size()) + " but |L| = " + std::to_string(L.size()));
    if (B.empty())
        throw Error(ErrorKind::shape, "empty digit sets");
    const std::size_t d = R.dim();
    for (const auto &v : B)
        if (v.size() != d)
            throw Error(ErrorKind::shape, "B digit dimension does not match R");
    for (const auto &v : L)
        if (v.size() != d)
            throw Error(ErrorKind::shape, "L digit dimension does not match R");

    HadamardTriple t;
    t.R = ExpansiveIntMatrix(R);
    t.B = B;
    t.L = L;
    const RationalMatrix R_inv = inverse(R);
    const std::size_t n = B.size();

    // phase[b][l] = (R^{-1} b) . l mod 1
    std::vector<std::vector<Rational>> phase(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector rb = R_inv * B[i];
        for (std::size_t j = 0; j < n; ++j)
            phase[i][j] = dot(rb, L[j]).frac();
    }

    using C = std::complex<double>;
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<std::vector<C>> H(n, std::vector<C>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            H[i][j] = std::polar(1.0 / std::sqrt(static_cast<double>(n)),
                                 two_pi * phase[i][j].to_double());
    double defect = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            C s = 0;
            for (std::size_t i = 0; i < n; ++i)
                s += std::conj(H[i][a]) * H[i][b];
            defect = std::max(defect, std::abs(s - C(a == b ? 1.0 : 0.0)));
        }
    t.unitarity_defect = defect;

    // Exact certificate: every off-diagonal column product is a vanishing sum
    // of roots of unity.
    try {
        bool all = true;
        for (std::size_t a = 0; a < n && all; ++a)
            for (std::size_t b = a + 1; b < n && all; ++b) {
                std::vector<RootTerm> terms;
                for (std::size_t i = 0; i < n; ++i)
                    terms.push_back({Rational(1), phase[i][b] - phase[i][a]});
                all = vanishes_exactly(terms);
            }
        t.exact_checked = true;
        t.exact_unitary = all;
    } catch (const Error &e) {
        t.warnings.push_back(std::string("exact certificate skipped: ") + e.what());
    }

    t.certified = defect < kUnitarityTolerance && (!t.exact_checked || t.exact_unitary);

    bool has_zero = false;
    for (const auto &b : B) {
        bool z = true;
        for (const auto &x : b)
            z = z && x.is_zero();
        has_zero = has_zero || z;
    }
    if (!has_zero)
        t.warnings.push_back("0 is not in B; the lattice identity for extreme cycles assumes it");
    if (!t.R.certified_expansive())
        t.warnings.push_back("R is not certified expansive");
    return t;
}

DualPair make_dual_pair(const HadamardTriple &triple) {
    if (!triple.certified)
        throw Error(ErrorKind::not_certified, "triple is not a certified Hadamard triple");
    return DualPair{AffineSystem(triple.R, triple.B), AffineSystem(triple.R.transpose(), triple.L)};
}

} // namespace aifs
