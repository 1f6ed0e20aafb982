#include "aifs/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aifs/error.hpp"

namespace aifs::kernels {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

DVector word_point(const DMatrix &R_inv, const std::vector<DVector> &digits, const DVector &x0,
                   std::size_t depth, std::size_t w) {
    const std::size_t N = digits.size(), d = x0.size();
    DVector x = x0, y(d);
    for (std::size_t i = 0; i < depth; ++i) {
        const DVector &b = digits[w % N];
        w /= N;
        for (std::size_t r = 0; r < d; ++r) {
            double acc = 0;
            for (std::size_t c = 0; c < d; ++c)
                acc += R_inv[r][c] * (x[c] + b[c]);
            y[r] = acc;
        }
        std::swap(x, y);
    }
    return x;
}

std::size_t word_count(std::size_t N, std::size_t depth) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < depth; ++i)
        total *= N;
    return total;
}

// Solves the small dense system A x = b in place (partial pivoting).
bool solve_small(std::vector<DVector> A, DVector &b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(A[r][c]) > std::abs(A[piv][c]))
                piv = r;
        if (std::abs(A[piv][c]) < 1e-300)
            return false;
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            double f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < n; ++k)
                A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t c = n; c-- > 0;) {
        for (std::size_t k = c + 1; k < n; ++k)
            b[c] -= A[c][k] * b[k];
        b[c] /= A[c][c];
    }
    return true;
}

bool grid_cell_is_candidate(const SymbolData &s, const DVector &centre, std::size_t n_grid) {
    double half_diag = std::sqrt(static_cast<double>(s.dim)) / (2.0 * static_cast<double>(n_grid));
    return std::abs(eval_symbol(s, centre)) <= s.lipschitz * half_diag * 1.0001 + 1e-12;
}

DVector grid_centre(std::size_t cell, std::size_t dim, std::size_t n_grid) {
    DVector c(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        c[j] = (static_cast<double>(cell % n_grid) + 0.5) / static_cast<double>(n_grid);
        cell /= n_grid;
    }
    return c;
}

std::size_t grid_cells(std::size_t dim, std::size_t n_grid) {
    std::size_t total = 1;
    for (std::size_t j = 0; j < dim; ++j) {
        if (total > (std::size_t{1} << 32) / n_grid)
            throw Error(ErrorKind::budget, "zero-scan grid too large");
        total *= n_grid;
    }
    return total;
}

bool dn_better(double a, const std::vector<long> &ka, double b, const std::vector<long> &kb) {
    if (kb.empty())
        return true;
    if (std::abs(a - b) <= kDnTieTolerance)
        return ka < kb;
    return a < b;
}

struct DnTables {
    std::vector<long double> c, s;
    explicit DnTables(long M) : c(M), s(M) {
        for (long k = 0; k < M; ++k) {
            long double ang = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                              static_cast<long double>(M);
            c[k] = std::cos(ang);
            s[k] = std::sin(ang);
        }
    }
};

// Non-decreasing tuples whose first entry is k1.
void dn_branch(const DnTables &t, long M, std::size_t d, long k1, DnBest &best) {
    std::vector<long> k(d, k1);
    std::vector<long double> re(d + 1), im(d + 1);
    re[0] = 1.0L + t.c[k1];
    im[0] = t.s[k1];
    // Iterative odometer over positions 1..d-1 with k[i] >= k[i-1].
    if (d == 1) {
        double v = static_cast<double>(std::sqrt(re[0] * re[0] + im[0] * im[0]));
        if (dn_better(v, k, best.value, best.k)) {
            best.value = v;
            best.k = k;
        }
        return;
    }
    std::size_t pos = 1;
    k[1] = k1;
    while (true) {
        re[pos] = re[pos - 1] + t.c[k[pos]];
        im[pos] = im[pos - 1] + t.s[k[pos]];
        if (pos + 1 < d) {
            ++pos;
            k[pos] = k[pos - 1];
            continue;
        }
        double v = static_cast<double>(std::sqrt(re[pos] * re[pos] + im[pos] * im[pos]));
        if (dn_better(v, k, best.value, best.k)) {
            best.value = v;
            best.k = k;
        }
        // advance
        while (pos >= 1 && ++k[pos] >= M)
            --pos;
        if (pos == 0)
            return;
        for (std::size_t j = pos + 1; j < d; ++j)
            k[j] = k[pos];
    }
}

double block_parseval(const SymbolData &s, const std::vector<DVector> &spectrum, const DVector &x,
                      const TruncationPolicy &policy, std::size_t begin, std::size_t end) {
    double acc = 0;
    DVector y(x.size());
    for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t j = 0; j < x.size(); ++j)
            y[j] = x[j] + spectrum[i][j];
        acc += std::norm(eval_mu_hat(s, y, policy).value);
    }
    return acc;
}

constexpr std::size_t kParsevalBlock = 256;

} // namespace

std::optional<DVector> refine_zero(const SymbolData &s, DVector x) {
    const std::size_t d = s.dim;
    double mu = 1e-3;
    auto residual = [&](const DVector &p) { return std::abs(eval_symbol(s, p)); };
    double f = residual(x);
    for (int it = 0; it < 200 && f >= 1e-14; ++it) {
        // F = (Re m, Im m), J[.][j] = sum_b w 2 pi b_j (-sin, cos)
        double re = 0, im = 0;
        DVector jr(d, 0.0), ji(d, 0.0);
        for (std::size_t i = 0; i < s.digits.size(); ++i) {
            double ph = 0;
            for (std::size_t j = 0; j < d; ++j)
                ph += s.digits[i][j] * x[j];
            ph -= std::floor(ph);
            double c = std::cos(kTwoPi * ph), sn = std::sin(kTwoPi * ph);
            re += s.weights[i] * c;
            im += s.weights[i] * sn;
            for (std::size_t j = 0; j < d; ++j) {
                jr[j] -= s.weights[i] * kTwoPi * s.digits[i][j] * sn;
                ji[j] += s.weights[i] * kTwoPi * s.digits[i][j] * c;
            }
        }
        std::vector<DVector> A(d, DVector(d));
        DVector g(d);
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = 0; b < d; ++b)
                A[a][b] = jr[a] * jr[b] + ji[a] * ji[b];
            A[a][a] += mu * (1.0 + A[a][a]);
            g[a] = -(jr[a] * re + ji[a] * im);
        }
        if (!solve_small(A, g))
            return std::nullopt;
        DVector trial = x;
        for (std::size_t j = 0; j < d; ++j)
            trial[j] += g[j];
        double ft = residual(trial);
        if (ft < f) {
            x = trial;
            f = ft;
            mu = std::max(mu / 3.0, 1e-12);
        } else {
            mu *= 4.0;
            if (mu > 1e12)
                break;
        }
    }
    if (f >= 1e-12)
        return std::nullopt;
    for (auto &v : x)
        v -= std::floor(v);
    return x;
}

std::vector<DVector> expand_words(const DMatrix &R_inv, const std::vector<DVector> &digits,
                                  const DVector &x0, std::size_t depth) {
    const std::size_t total = word_count(digits.size(), depth);
    std::vector<DVector> out(total);
#pragma omp parallel for schedule(static)
    for (std::int64_t w = 0; w < static_cast<std::int64_t>(total); ++w)
        out[w] = word_point(R_inv, digits, x0, depth, static_cast<std::size_t>(w));
    return out;
}

std::vector<DVector> scan_zeros(const SymbolData &s, std::size_t n_grid) {
    const std::size_t cells = grid_cells(s.dim, n_grid);
    std::vector<std::optional<DVector>> found(cells);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(cells); ++c) {
        DVector centre = grid_centre(static_cast<std::size_t>(c), s.dim, n_grid);
        if (grid_cell_is_candidate(s, centre, n_grid))
            found[c] = refine_zero(s, centre);
    }
    std::vector<DVector> roots;
    for (auto &f : found)
        if (f)
            roots.push_back(std::move(*f));
    return roots;
}

DnBest dn_search(long modulus, std::size_t d) {
    const DnTables t(modulus);
    std::vector<DnBest> per_k1(modulus);
#pragma omp parallel for schedule(dynamic, 1)
    for (long k1 = 0; k1 < modulus; ++k1)
        dn_branch(t, modulus, d, k1, per_k1[k1]);
    DnBest best;
    for (const auto &b : per_k1)
        if (!b.k.empty() && dn_better(b.value, b.k, best.value, best.k))
            best = b;
    return best;
}

double parseval_sum(const SymbolData &s, const std::vector<DVector> &spectrum, const DVector &x,
                    const TruncationPolicy &policy) {
    const std::size_t blocks = (spectrum.size() + kParsevalBlock - 1) / kParsevalBlock;
    std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
        std::size_t begin = static_cast<std::size_t>(b) * kParsevalBlock;
        std::size_t end = std::min(spectrum.size(), begin + kParsevalBlock);
        partial[b] = block_parseval(s, spectrum, x, policy, begin, end);
    }
    double total = 0;
    for (double p : partial)
        total += p;
    return total;
}

std::vector<std::vector<std::uint32_t>>
pairwise_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)> &related) {
    std::vector<std::vector<std::uint32_t>> adj(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j)
            if (related(static_cast<std::size_t>(i), j))
                adj[i].push_back(static_cast<std::uint32_t>(j));
    return adj;
}

namespace serial {

std::vector<DVector> expand_words(const DMatrix &R_inv, const std::vector<DVector> &digits,
                                  const DVector &x0, std::size_t depth) {
    // Level-by-level: level n+1 = U_b tau_b(level n), digit-major order.
    std::vector<DVector> level{x0};
    const std::size_t d = x0.size();
    for (std::size_t n = 0; n < depth; ++n) {
        std::vector<DVector> next;
        next.reserve(level.size() * digits.size());
        for (const auto &b : digits)
            for (const auto &x : level) {
                DVector y(d, 0.0);
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t c = 0; c < d; ++c)
                        y[r] += R_inv[r][c] * (x[c] + b[c]);
                next.push_back(std::move(y));
            }
        level = std::move(next);
    }
    return level;
}

std::vector<DVector> scan_zeros(const SymbolData &s, std::size_t n_grid) {
    const std::size_t cells = grid_cells(s.dim, n_grid);
    std::vector<DVector> roots;
    for (std::size_t c = 0; c < cells; ++c) {
        DVector centre = grid_centre(c, s.dim, n_grid);
        if (!grid_cell_is_candidate(s, centre, n_grid))
            continue;
        if (auto r = refine_zero(s, centre))
            roots.push_back(std::move(*r));
    }
    return roots;
}

DnBest dn_search(long modulus, std::size_t d) {
    const DnTables t(modulus);
    DnBest best;
    for (long k1 = 0; k1 < modulus; ++k1)
        dn_branch(t, modulus, d, k1, best);
    return best;
}

double parseval_sum(const SymbolData &s, const std::vector<DVector> &spectrum, const DVector &x,
                    const TruncationPolicy &policy) {
    return block_parseval(s, spectrum, x, policy, 0, spectrum.size());
}

std::vector<std::vector<std::uint32_t>>
pairwise_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)> &related) {
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (related(i, j))
                adj[i].push_back(static_cast<std::uint32_t>(j));
    return adj;
}

} // namespace serial

} // namespace aifs::kernels
