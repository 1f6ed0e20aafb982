#include "aifs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "aifs/kernels.hpp"

namespace aifs {

namespace {

TorusPoint canonical_witness(const RationalVector &y) {
    TorusPoint a = mod_one(y), b = mod_one(-y);
    return std::min(a, b);
}

std::vector<Rational> axis_values(const Rational &lo, const Rational &hi, long max_den) {
    std::set<Rational> vals;
    for (long q = 1; q <= max_den; ++q) {
        Integer a0 = (lo * Rational(q)).floor();
        if (Rational(a0, Integer(q)) < lo)
            a0 += 1;
        for (Integer a = a0; Rational(a, Integer(q)) <= hi; a += 1)
            vals.insert(Rational(a, Integer(q)));
    }
    return {vals.begin(), vals.end()};
}

std::vector<std::vector<std::uint32_t>> symmetric(const std::vector<std::vector<std::uint32_t>> &upper) {
    std::vector<std::vector<std::uint32_t>> adj(upper.size());
    for (std::size_t i = 0; i < upper.size(); ++i)
        for (auto j : upper[i]) {
            adj[i].push_back(j);
            adj[j].push_back(static_cast<std::uint32_t>(i));
        }
    for (auto &a : adj)
        std::sort(a.begin(), a.end());
    return adj;
}

class CliqueSearch {
  public:
    explicit CliqueSearch(const std::vector<std::vector<std::uint32_t>> &adj) : adj_(adj) {}

    void run(const std::vector<std::vector<std::uint32_t>> &upper) {
        for (std::size_t i = 0; i < upper.size(); ++i) {
            if (best_.empty())
                best_ = {static_cast<std::uint32_t>(i)};
            if (1 + upper[i].size() <= best_.size())
                continue;
            cur_ = {static_cast<std::uint32_t>(i)};
            expand(upper[i]);
        }
    }

    std::vector<std::size_t> best() const {
        std::vector<std::size_t> out(best_.begin(), best_.end());
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    bool adjacent(std::uint32_t u, std::uint32_t v) const {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    void expand(const std::vector<std::uint32_t> &P) {
        // greedy colouring gives the bound |cur| + colour
        std::vector<std::vector<std::uint32_t>> classes;
        for (auto v : P) {
            bool placed = false;
            for (auto &cls : classes) {
                bool clash = std::any_of(cls.begin(), cls.end(), [&](std::uint32_t u) { return adjacent(u, v); });
                if (!clash) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed)
                classes.push_back({v});
        }
        std::vector<std::uint32_t> seq;
        std::vector<std::size_t> colour;
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (auto v : classes[k]) {
                seq.push_back(v);
                colour.push_back(k + 1);
            }
        for (std::size_t idx = seq.size(); idx-- > 0;) {
            if (cur_.size() + colour[idx] <= best_.size())
                return;
            auto v = seq[idx];
            cur_.push_back(v);
            std::vector<std::uint32_t> next;
            for (std::size_t k = 0; k < idx; ++k)
                if (adjacent(seq[k], v))
                    next.push_back(seq[k]);
            if (next.empty()) {
                if (cur_.size() > best_.size())
                    best_ = cur_;
            } else {
                expand(next);
            }
            cur_.pop_back();
        }
    }

    const std::vector<std::vector<std::uint32_t>> &adj_;
    std::vector<std::uint32_t> best_, cur_;
};

// All delta = S^n (z + k), n >= 1, with |delta_j| <= W_j.
std::vector<RationalVector> difference_set(const AffineSystem &sys, const std::vector<TorusPoint> &zeros,
                                           const RationalVector &W) {
    const std::size_t d = sys.dim();
    const IntMatrix S = transpose(sys.R().matrix());
    const DMatrix Sinv = symbol_data(sys).S_inv;
    DVector Wd = to_double(W);
    double rho = std::numeric_limits<double>::infinity();
    for (const auto &z : zeros) {
        double acc = 0;
        for (const auto &c : z) {
            double t = std::min(c.to_double(), 1.0 - c.to_double());
            acc += t * t;
        }
        rho = std::min(rho, std::sqrt(acc));
    }
    std::set<RationalVector> out;
    DMatrix Pinv = Sinv;
    RationalMatrix Sn(S);
    for (int n = 1; n <= 64 && !zeros.empty(); ++n) {
        if (n > 1) {
            Pinv = mat_mul(Sinv, Pinv);
            Sn = RationalMatrix(S) * Sn;
        }
        if (1.01 * spectral_norm(Pinv) * norm2(Wd) < rho * (1 - 1e-9))
            break;
        DVector ulo(d), uhi(d);
        for (std::size_t i = 0; i < d; ++i) {
            double mn = 0, mx = 0;
            for (std::size_t corner = 0; corner < (std::size_t{1} << d); ++corner) {
                double acc = 0;
                for (std::size_t j = 0; j < d; ++j)
                    acc += Pinv[i][j] * ((corner >> j) & 1 ? Wd[j] : -Wd[j]);
                mn = corner == 0 ? acc : std::min(mn, acc);
                mx = corner == 0 ? acc : std::max(mx, acc);
            }
            ulo[i] = mn;
            uhi[i] = mx;
        }
        for (const auto &z : zeros) {
            std::vector<long> lo(d), hi(d);
            double count = 1;
            for (std::size_t i = 0; i < d; ++i) {
                double zi = z[i].to_double();
                lo[i] = static_cast<long>(std::ceil(ulo[i] - zi - 1e-9));
                hi[i] = static_cast<long>(std::floor(uhi[i] - zi + 1e-9));
                count *= std::max(0L, hi[i] - lo[i] + 1);
            }
            if (count == 0)
                continue;
            if (count + static_cast<double>(out.size()) > 4e6)
                throw Error(ErrorKind::budget, "difference set too large");
            std::vector<long> k = lo;
            while (true) {
                RationalVector u = z;
                for (std::size_t i = 0; i < d; ++i)
                    u[i] += Rational(k[i]);
                RationalVector delta = Sn * u;
                bool inside = true;
                for (std::size_t i = 0; i < d && inside; ++i)
                    inside = delta[i].abs() <= W[i];
                if (inside)
                    out.insert(std::move(delta));
                std::size_t i = 0;
                while (i < d && ++k[i] > hi[i]) {
                    k[i] = lo[i];
                    ++i;
                }
                if (i == d)
                    break;
            }
        }
    }
    return {out.begin(), out.end()};
}

} // namespace

const char *to_string(PairStatus s) {
    switch (s) {
    case PairStatus::certified_orthogonal:
        return "certified-orthogonal";
    case PairStatus::numerically_nonzero:
        return "numerically-nonzero";
    case PairStatus::undetermined:
        return "undetermined";
    }
    return "?";
}

ZeroChainOracle::ZeroChainOracle(const AffineSystem &sys, int n_max)
    : sys_(&sys), n_max_(n_max), symbol_(symbol_data(sys)) {
    RationalMatrix Sinv = sys.R_inverse().transpose();
    inv_pow_.push_back(RationalMatrix::identity(sys.dim()));
    for (int n = 1; n <= n_max; ++n)
        inv_pow_.push_back(Sinv * inv_pow_.back());
    for (const auto &M : inv_pow_)
        inv_pow_d_.push_back(M.to_double());
    tail_constant_ = symbol_.lipschitz * std::max(1.0, symbol_.norm_sum);
}

std::optional<std::pair<int, TorusPoint>> ZeroChainOracle::first_zero(const RationalVector &delta,
                                                                      bool *tail_stop) const {
    DVector dd = to_double(delta);
    for (int n = 1; n <= n_max_; ++n) {
        DVector y = mat_vec(inv_pow_d_[n], dd);
        if (std::abs(eval_symbol(symbol_, y)) < 1e-6) {
            RationalVector exact = inv_pow_[n] * delta;
            try {
                if (eval_mB_exact(*sys_, exact).exact_zero)
                    return std::make_pair(n, canonical_witness(exact));
            } catch (const Error &) {
                // denominator beyond the exact cap: no certificate from this factor
            }
        }
        if (tail_constant_ * norm2(y) < 1 - 1e-9) {
            if (tail_stop)
                *tail_stop = true;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

PairCheck ZeroChainOracle::check(const RationalVector &a, const RationalVector &b) const {
    PairCheck out;
    RationalVector delta = a - b;
    bool tail = false;
    if (auto hit = first_zero(delta, &tail)) {
        out.status = PairStatus::certified_orthogonal;
        out.certificate = OrthogonalityCertificate{a, b, hit->first, hit->second};
        return out;
    }
    out.tail_nonvanishing = tail;
    out.mu_hat_abs = std::abs(eval_mu_hat(symbol_, to_double(delta)).value);
    out.status = (tail || out.mu_hat_abs > 1e-8) ? PairStatus::numerically_nonzero
                                                 : PairStatus::undetermined;
    return out;
}

bool ZeroChainOracle::certified(const RationalVector &a, const RationalVector &b) const {
    return first_zero(a - b, nullptr).has_value();
}

PairCheck orthogonal_pair(const AffineSystem &sys, const RationalVector &a, const RationalVector &b,
                          int n_max) {
    return ZeroChainOracle(sys, n_max).check(a, b);
}

std::vector<RationalVector> CandidateGrid::points() const {
    const std::size_t d = lo.size();
    if (hi.size() != d || d == 0 || max_den < 1)
        throw Error(ErrorKind::shape, "malformed candidate grid");
    std::vector<std::vector<Rational>> axes;
    double total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        axes.push_back(axis_values(lo[i], hi[i], max_den));
        total *= static_cast<double>(axes.back().size());
        if (total > static_cast<double>(kMaxGridPoints))
            throw Error(ErrorKind::budget, "candidate grid too large");
    }
    std::vector<RationalVector> out;
    std::vector<std::size_t> idx(d, 0);
    if (total == 0)
        return out;
    while (true) {
        RationalVector p(d);
        for (std::size_t i = 0; i < d; ++i)
            p[i] = axes[i][idx[i]];
        out.push_back(std::move(p));
        std::size_t i = d;
        while (i-- > 0) {
            if (++idx[i] < axes[i].size())
                break;
            idx[i] = 0;
            if (i == 0)
                return out;
        }
    }
}

std::optional<std::vector<TorusPoint>> complete_zero_set(const AffineSystem &sys) {
    if (!sys.digits_integral())
        return std::nullopt;
    if (sys.size() == 2 && sys.weights()[0] != sys.weights()[1])
        return std::vector<TorusPoint>{};
    if (!sys.uniform())
        return std::nullopt;
    ZeroSet z = find_zeros(sys);
    if (!z.finite_complete || !z.numeric_points.empty())
        return std::nullopt;
    return z.points;
}

std::vector<std::size_t> max_clique(const std::vector<std::vector<std::uint32_t>> &upper) {
    if (upper.empty())
        return {};
    auto adj = symmetric(upper);
    CliqueSearch search(adj);
    search.run(upper);
    return search.best();
}

FamilyResult max_orthogonal_family(const AffineSystem &sys, const std::vector<RationalVector> &input,
                                   int n_max) {
    FamilyResult out;
    std::vector<RationalVector> cands = input;
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    out.candidates = cands.size();
    if (cands.empty())
        return out;
    const std::size_t n = cands.size(), d = sys.dim();

    std::vector<std::vector<std::uint32_t>> upper;
    if (auto zeros = complete_zero_set(sys)) {
        out.strategy = "difference set";
        RationalVector W(d);
        for (std::size_t j = 0; j < d; ++j) {
            Rational mn = cands[0][j], mx = cands[0][j];
            for (const auto &c : cands) {
                mn = std::min(mn, c[j]);
                mx = std::max(mx, c[j]);
            }
            W[j] = mx - mn;
        }
        auto D = difference_set(sys, *zeros, W);
        out.differences = D.size();
        std::unordered_map<RationalVector, std::uint32_t, RationalVectorHash> index;
        for (std::size_t i = 0; i < n; ++i)
            index.emplace(cands[i], static_cast<std::uint32_t>(i));
        upper.assign(n, {});
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            for (const auto &delta : D) {
                auto it = index.find(cands[i] + delta);
                if (it != index.end() && it->second > static_cast<std::uint32_t>(i))
                    upper[i].push_back(it->second);
            }
            std::sort(upper[i].begin(), upper[i].end());
        }
    } else {
        out.strategy = "pairwise";
        if (0.5 * static_cast<double>(n) * static_cast<double>(n - 1) > kMaxPairChecks)
            throw Error(ErrorKind::budget, "too many candidate pairs for exact checks");
        ZeroChainOracle oracle(sys, n_max);
        upper = kernels::pairwise_relation(
            n, [&](std::size_t i, std::size_t j) { return oracle.certified(cands[i], cands[j]); });
    }
    for (const auto &row : upper)
        out.edges += row.size();
    for (auto i : max_clique(upper))
        out.family.push_back(cands[i]);
    std::sort(out.family.begin(), out.family.end());
    return out;
}

FamilyResult max_orthogonal_family(const AffineSystem &sys, const CandidateGrid &grid, int n_max) {
    return max_orthogonal_family(sys, grid.points(), n_max);
}

PairCensus certify_pairs(const AffineSystem &sys, const std::vector<RationalVector> &elements, int n_max) {
    PairCensus c;
    const std::size_t n = elements.size();
    c.pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (static_cast<double>(c.pairs) > kMaxPairChecks)
        throw Error(ErrorKind::budget, "too many pairs to certify");
    ZeroChainOracle oracle(sys, n_max);
    auto adj = kernels::pairwise_relation(
        n, [&](std::size_t i, std::size_t j) { return oracle.certified(elements[i], elements[j]); });
    for (const auto &row : adj)
        c.certified += row.size();
    c.uncertified = c.pairs - c.certified;
    return c;
}

double completeness_Q(const AffineSystem &sys, const std::vector<RationalVector> &spectrum,
                      const DVector &x, const TruncationPolicy &policy) {
    std::vector<DVector> pts;
    pts.reserve(spectrum.size());
    for (const auto &l : spectrum)
        pts.push_back(to_double(l));
    return kernels::parseval_sum(symbol_data(sys), pts, x, policy);
}

std::vector<DVector> quasi_random_points(std::size_t d, std::size_t count) {
    double phi = 2.0;
    for (int i = 0; i < 64; ++i)
        phi = std::pow(1.0 + phi, 1.0 / static_cast<double>(d + 1));
    DVector alpha(d);
    for (std::size_t j = 0; j < d; ++j)
        alpha[j] = std::fmod(std::pow(1.0 / phi, static_cast<double>(j + 1)), 1.0);
    std::vector<DVector> out;
    for (std::size_t k = 1; k <= count; ++k) {
        DVector x(d);
        for (std::size_t j = 0; j < d; ++j) {
            double v = static_cast<double>(k) * alpha[j];
            x[j] = v - std::floor(v);
        }
        out.push_back(std::move(x));
    }
    return out;
}

CompletenessReport completeness_report(const AffineSystem &sys, const SpectrumSet &spectrum,
                                       std::size_t samples, const TruncationPolicy &policy) {
    CompletenessReport r;
    r.level = spectrum.level;
    r.spectrum_size = spectrum.elements.size();
    r.product_terms = policy.max_terms;
    r.sample_points = quasi_random_points(sys.dim(), samples);
    std::vector<DVector> pts;
    for (const auto &l : spectrum.elements)
        pts.push_back(to_double(l));
    SymbolData s = symbol_data(sys);
    double sum = 0;
    for (const auto &x : r.sample_points) {
        double q = kernels::parseval_sum(s, pts, x, policy);
        r.Q_values.push_back(q);
        sum += q;
    }
    if (!r.Q_values.empty()) {
        r.min_Q = *std::min_element(r.Q_values.begin(), r.Q_values.end());
        r.max_Q = *std::max_element(r.Q_values.begin(), r.Q_values.end());
        r.mean_Q = sum / static_cast<double>(r.Q_values.size());
    }
    return r;
}

} // namespace aifs
