#include "aifs/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include "aifs/fourier.hpp"

namespace aifs {

namespace {

using IntVec = std::vector<Integer>;

RationalVector image(const IntMatrix &M, const RationalVector &x) { return M * x; }

RationalVector zero_vector(std::size_t d) { return RationalVector(d, Rational(0)); }

// Rotates a cycle so that its lexicographically smallest point comes first.
void canonicalize(CycleRecord &c) {
    auto it = std::min_element(c.points.begin(), c.points.end());
    auto shift = static_cast<std::size_t>(it - c.points.begin());
    std::rotate(c.points.begin(), c.points.begin() + shift, c.points.end());
    std::rotate(c.word.begin(), c.word.begin() + shift, c.word.end());
}

// Smallest period of the cyclic point sequence.
std::size_t primitive_period(const std::vector<RationalVector> &pts) {
    const std::size_t m = pts.size();
    for (std::size_t t = 1; t < m; ++t) {
        if (m % t != 0)
            continue;
        bool ok = true;
        for (std::size_t i = 0; i + t < m && ok; ++i)
            ok = pts[i] == pts[i + t];
        if (ok)
            return t;
    }
    return m;
}

} // namespace

bool LatticeBasis::contains(const RationalVector &x) const {
    return is_integral(basis.inverse() * x);
}

std::vector<RationalVector> lattice_basis(const std::vector<RationalVector> &generators) {
    if (generators.empty())
        return {};
    const std::size_t d = generators[0].size();
    Integer D = 1;
    for (const auto &g : generators)
        D = lcm(D, common_denominator(g));
    std::vector<std::optional<IntVec>> pivot(d);
    for (const auto &g : generators) {
        IntVec v(d);
        for (std::size_t i = 0; i < d; ++i)
            v[i] = (g[i] * Rational(D)).num();
        for (std::size_t i = 0; i < d; ++i) {
            if (v[i] == 0)
                continue;
            if (!pivot[i]) {
                if (v[i] < 0)
                    for (auto &e : v)
                        e = -e;
                pivot[i] = v;
                break;
            }
            IntVec &P = *pivot[i];
            Integer a = P[i], b = v[i], g0, s, t;
            mpz_gcdext(g0.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Integer ag = a / g0, bg = b / g0;
            IntVec np(d), nv(d);
            for (std::size_t k = 0; k < d; ++k) {
                np[k] = s * P[k] + t * v[k];
                nv[k] = bg * P[k] - ag * v[k];
            }
            P = std::move(np);
            v = std::move(nv);
        }
    }
    // keep entries small: reduce each pivot row by the later ones
    for (std::size_t i = d; i-- > 0;) {
        if (!pivot[i])
            continue;
        for (std::size_t j = i + 1; j < d; ++j) {
            if (!pivot[j])
                continue;
            const IntVec &Q = *pivot[j];
            Integer f;
            mpz_fdiv_q(f.get_mpz_t(), (*pivot[i])[j].get_mpz_t(), Q[j].get_mpz_t());
            for (std::size_t k = 0; k < d; ++k)
                (*pivot[i])[k] -= f * Q[k];
        }
    }
    std::vector<RationalVector> out;
    for (const auto &p : pivot)
        if (p) {
            RationalVector col(d);
            for (std::size_t k = 0; k < d; ++k)
                col[k] = Rational((*p)[k], D);
            out.push_back(std::move(col));
        }
    return out;
}

LatticeBasis build_gamma(const AffineSystem &sys, std::size_t depth) {
    const std::size_t d = sys.dim();
    if (depth == 0)
        depth = d;
    std::vector<RationalVector> gens;
    for (const auto &b : sys.digits()) {
        RationalVector x = b;
        for (std::size_t k = 0; k <= depth; ++k) {
            gens.push_back(x);
            x = image(sys.R().matrix(), x);
        }
    }
    auto cols = lattice_basis(gens);
    if (cols.size() < d)
        throw Error(ErrorKind::inapplicable,
                    "Gamma has rank " + std::to_string(cols.size()) + " < " + std::to_string(d));
    return {RationalMatrix::from_columns(cols)};
}

LatticeBasis dual_lattice(const LatticeBasis &gamma) {
    return {gamma.basis.inverse().transpose()};
}

bool contains_integer_lattice(const LatticeBasis &lat) {
    const std::size_t d = lat.dim();
    for (std::size_t i = 0; i < d; ++i) {
        RationalVector e = zero_vector(d);
        e[i] = 1;
        if (!lat.contains(e))
            return false;
    }
    return true;
}

bool is_invariant(const LatticeBasis &lat, const IntMatrix &S) {
    return (lat.basis.inverse() * RationalMatrix(S) * lat.basis).is_integral();
}

std::vector<RationalVector> enumerate_candidates(const LatticeBasis &lattice,
                                                 const AffineSystem &sys_L) {
    const std::size_t d = lattice.dim();
    Box box = bounding_box(sys_L);
    auto Ginv = lattice.basis.inverse().to_double();
    std::vector<long> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        double mn = 0, mx = 0;
        for (std::size_t corner = 0; corner < (std::size_t{1} << d); ++corner) {
            double acc = 0;
            for (std::size_t j = 0; j < d; ++j)
                acc += Ginv[i][j] * ((corner >> j) & 1 ? box.hi[j] : box.lo[j]);
            if (corner == 0 || acc < mn)
                mn = acc;
            if (corner == 0 || acc > mx)
                mx = acc;
        }
        lo[i] = static_cast<long>(std::floor(mn)) - 1;
        hi[i] = static_cast<long>(std::ceil(mx)) + 1;
    }
    double total = 1;
    for (std::size_t i = 0; i < d; ++i)
        total *= static_cast<double>(hi[i] - lo[i] + 1);
    if (total > 4.0 * static_cast<double>(kMaxCandidates))
        throw Error(ErrorKind::budget, "candidate enumeration box too large");

    std::vector<RationalVector> out;
    std::vector<long> c = lo;
    while (true) {
        RationalVector coeff(d);
        for (std::size_t i = 0; i < d; ++i)
            coeff[i] = Rational(c[i]);
        RationalVector x = lattice.basis * coeff;
        if (box.contains(to_double(x), 1e-12)) {
            out.push_back(std::move(x));
            if (out.size() > kMaxCandidates)
                throw Error(ErrorKind::budget, "more than 1e6 lattice candidates");
        }
        std::size_t i = 0;
        while (i < d && ++c[i] > hi[i]) {
            c[i] = lo[i];
            ++i;
        }
        if (i == d)
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

CycleSearch find_cycles(const AffineSystem &sys_L, const std::vector<RationalVector> &candidates,
                        std::size_t max_period) {
    CycleSearch out;
    out.max_period = max_period;
    out.candidates = candidates.size();
    const IntMatrix &S = sys_L.R().matrix();
    const auto &L = sys_L.digits();
    std::unordered_map<RationalVector, std::size_t, RationalVectorHash> index;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        index.emplace(candidates[i], i);

    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> succ(candidates.size(), none), digit(candidates.size(), none);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        RationalVector Sx = image(S, candidates[i]);
        for (std::size_t l = 0; l < L.size(); ++l) {
            auto it = index.find(Sx - L[l]);
            if (it == index.end())
                continue;
            if (succ[i] != none)
                throw Error(ErrorKind::inapplicable, "two digits keep a candidate in the set");
            succ[i] = it->second;
            digit[i] = l;
        }
    }

    // 0 unvisited, 1 on the current path, 2 settled
    std::vector<int> state(candidates.size(), 0);
    std::vector<char> reaches(candidates.size(), 0), on_cycle(candidates.size(), 0);
    for (std::size_t start = 0; start < candidates.size(); ++start) {
        if (state[start])
            continue;
        std::vector<std::size_t> path;
        std::size_t cur = start;
        bool reached = false;
        while (true) {
            if (state[cur] == 2) {
                reached = reaches[cur];
                break;
            }
            if (state[cur] == 1) {
                auto pos = static_cast<std::size_t>(std::find(path.begin(), path.end(), cur) - path.begin());
                std::vector<std::size_t> cyc(path.begin() + pos, path.end());
                for (auto k : cyc)
                    on_cycle[k] = 1;
                if (cyc.size() > max_period) {
                    out.notes.push_back("cycle of period " + std::to_string(cyc.size()) +
                                        " exceeds the cap and was skipped");
                } else {
                    // graph order x_{i+1} = S x_i - l; tau order runs backwards
                    CycleRecord rec;
                    const std::size_t m = cyc.size();
                    for (std::size_t i = 0; i < m; ++i) {
                        std::size_t node = cyc[m - 1 - i];
                        rec.points.push_back(candidates[node]);
                        rec.word.push_back(digit[node]);
                    }
                    canonicalize(rec);
                    out.cycles.push_back(std::move(rec));
                }
                reached = true;
                break;
            }
            state[cur] = 1;
            path.push_back(cur);
            if (succ[cur] == none)
                break;
            cur = succ[cur];
        }
        for (auto k : path) {
            state[k] = 2;
            reaches[k] = reached;
        }
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (on_cycle[i])
            ++out.on_cycles;
        else if (reaches[i])
            ++out.transient;
        else
            ++out.discarded;
    }
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const CycleRecord &a, const CycleRecord &b) { return a.points < b.points; });
    return out;
}

std::size_t affordable_word_period(std::size_t N, std::size_t cap) {
    double total = 0, pw = 1;
    std::size_t m = 0;
    while (m < cap) {
        pw *= static_cast<double>(N);
        if (total + pw > kMaxWordEnumeration)
            break;
        total += pw;
        ++m;
    }
    return m;
}

std::vector<CycleRecord> find_cycles_by_words(const AffineSystem &sys_L, std::size_t max_period) {
    const std::size_t N = sys_L.size(), d = sys_L.dim();
    if (affordable_word_period(N, max_period) < max_period)
        throw Error(ErrorKind::budget, "word enumeration exceeds budget");
    std::set<std::vector<RationalVector>> seen;
    std::vector<CycleRecord> out;
    const RationalMatrix I = RationalMatrix::identity(d);
    RationalMatrix Sinv_m = I;
    for (std::size_t m = 1; m <= max_period; ++m) {
        Sinv_m = sys_L.R_inverse() * Sinv_m;
        RationalMatrix A = I;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                A(i, j) -= Sinv_m(i, j);
        RationalMatrix Ainv = A.inverse();
        std::size_t words = 1;
        for (std::size_t i = 0; i < m; ++i)
            words *= N;
        for (std::size_t w = 0; w < words; ++w) {
            std::vector<std::size_t> letters(m);
            for (std::size_t i = 0, t = w; i < m; ++i, t /= N)
                letters[m - 1 - i] = t % N;
            // x -> tau_{w_m} o ... o tau_{w_1}(x) = S^{-m} x + c
            RationalVector c = zero_vector(d);
            for (auto l : letters)
                c = sys_L.tau(l, c);
            RationalVector x = Ainv * c;
            std::vector<RationalVector> pts{x};
            for (std::size_t i = 0; i + 1 < m; ++i)
                pts.push_back(sys_L.tau(letters[i], pts.back()));
            if (primitive_period(pts) != m)
                continue;
            CycleRecord rec;
            rec.points = pts;
            rec.word.push_back(letters[m - 1]);
            for (std::size_t i = 0; i + 1 < m; ++i)
                rec.word.push_back(letters[i]);
            canonicalize(rec);
            if (seen.insert(rec.points).second)
                out.push_back(std::move(rec));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CycleRecord &a, const CycleRecord &b) { return a.points < b.points; });
    return out;
}

void classify_WB(const AffineSystem &sys_B, std::vector<CycleRecord> &cycles) {
    for (auto &c : cycles)
        c.is_WB_cycle = std::all_of(c.points.begin(), c.points.end(),
                                    [&](const RationalVector &x) { return WB_is_one_exact(sys_B, x); });
}

bool same_cycle(const CycleRecord &a, const CycleRecord &b) {
    CycleRecord x = a, y = b;
    canonicalize(x);
    canonicalize(y);
    return x.points == y.points;
}

CycleAnalysis analyze_cycles(const DualPair &pair, std::size_t max_period) {
    CycleAnalysis out;
    try {
        LatticeBasis gamma = build_gamma(pair.primal);
        LatticeBasis dual = dual_lattice(gamma);
        if (pair.primal.digits_integral() && !contains_integer_lattice(dual))
            throw Error(ErrorKind::not_certified, "dual lattice misses Z^d");
        if (!is_invariant(dual, pair.dual.R().matrix()))
            out.notes.push_back("dual lattice not S-invariant");
        out.candidates = enumerate_candidates(dual, pair.dual);
        out.search = find_cycles(pair.dual, out.candidates, max_period);
        classify_WB(pair.primal, out.search.cycles);
        for (const auto &c : out.search.cycles) {
            if (c.is_WB_cycle)
                out.wb_cycles.push_back(c);
            else
                out.all_cycles_WB = false;
        }
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::inapplicable)
            throw;
        out.lattice_route = false;
        out.word_period = affordable_word_period(pair.dual.size(), std::min<std::size_t>(max_period, 12));
        out.notes.push_back(std::string(e.what()) + "; W_B-cycles searched by words up to period " +
                            std::to_string(out.word_period) + " (completeness unverified)");
        auto all = find_cycles_by_words(pair.dual, out.word_period);
        classify_WB(pair.primal, all);
        for (auto &c : all)
            if (c.is_WB_cycle)
                out.wb_cycles.push_back(std::move(c));
    }
    return out;
}

SpectrumSet spectrum_from_cycles(const DualPair &pair, const std::vector<CycleRecord> &cycles,
                                 std::size_t level) {
    const AffineSystem &dual = pair.dual;
    const IntMatrix &S = dual.R().matrix();
    const std::size_t N = dual.size(), d = dual.dim();
    SpectrumSet out{cycles, S, dual.digits(), level, {}};

    std::size_t points = 0;
    for (const auto &c : cycles) {
        if (!c.is_WB_cycle)
            throw Error(ErrorKind::inapplicable, "spectrum requested from a cycle that is not a W_B-cycle");
        points += c.period();
    }
    double words = std::pow(static_cast<double>(N), static_cast<double>(level));
    if (words * static_cast<double>(points) > kMaxSpectrumElements)
        throw Error(ErrorKind::budget, "spectrum level too large");

    // P[k][l] = S^k l
    std::vector<std::vector<RationalVector>> P(level);
    for (std::size_t k = 0; k < level; ++k)
        for (std::size_t l = 0; l < N; ++l)
            P[k].push_back(k == 0 ? dual.digits()[l] : image(S, P[k - 1][l]));

    const auto W = static_cast<std::size_t>(words);
    std::vector<RationalVector> sums(W);
#pragma omp parallel for schedule(static)
    for (std::int64_t w = 0; w < static_cast<std::int64_t>(W); ++w) {
        RationalVector acc = zero_vector(d);
        std::size_t t = static_cast<std::size_t>(w);
        for (std::size_t k = 0; k < level; ++k, t /= N) {
            const auto &add = P[k][t % N];
            for (std::size_t j = 0; j < d; ++j)
                acc[j] += add[j];
        }
        sums[w] = std::move(acc);
    }

    for (const auto &c : cycles)
        for (const auto &pt : c.points) {
            RationalVector off = pt;
            for (std::size_t k = 0; k < level; ++k)
                off = image(S, off);
            off = -off;
            for (const auto &s : sums)
                out.elements.push_back(off + s);
        }
    std::sort(out.elements.begin(), out.elements.end());
    out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
    return out;
}

std::vector<RationalVector> PropDivFamily::members(std::size_t count) const {
    std::vector<RationalVector> out;
    Rational scale = 1;
    for (std::size_t n = 1; n <= count; ++n) {
        scale *= Rational(p);
        out.push_back(scale * z0);
    }
    return out;
}

PropDivFamily propdiv_family(long p, std::size_t d, const std::vector<Decomposition> &decomposition) {
    if (p < 2 || d < 1 || decomposition.empty())
        throw Error(ErrorKind::shape, "malformed decomposition");
    long total = 0;
    for (const auto &[q, dk] : decomposition) {
        if (q < 0 || dk < 2 || dk >= p || p % dk != 0)
            throw Error(ErrorKind::shape, "decomposition needs proper divisors 2 <= d_k < p of p");
        total += q * dk;
    }
    if (total != static_cast<long>(d) + 1)
        throw Error(ErrorKind::shape, "sum q_k d_k must equal d + 1");

    PropDivFamily f;
    f.p = p;
    f.d = d;
    bool dropped = false;
    for (const auto &[q, dk] : decomposition)
        for (long rep = 0; rep < q; ++rep)
            for (long j = 0; j < dk; ++j) {
                if (j == 0 && !dropped) {
                    dropped = true;
                    continue;
                }
                f.z0.push_back(Rational(j, dk));
            }
    std::vector<RationalVector> B{zero_vector(d)};
    for (std::size_t i = 0; i < d; ++i) {
        RationalVector e = zero_vector(d);
        e[i] = 1;
        B.push_back(e);
    }
    AffineSystem sys(IntMatrix::scalar(d, p), B);
    f.certified = eval_mB_exact(sys, f.z0).exact_zero;
    f.generator = "{" + std::to_string(p) + "^n z0 : n >= 1}";
    return f;
}

std::vector<RationalVector> thpmuld_digits(long p, std::size_t d) {
    const long dd = static_cast<long>(d);
    if (d < 1 || p % (dd + 1) != 0)
        throw Error(ErrorKind::inapplicable, "p must be divisible by d + 1");
    const long m = p / (dd + 1);
    std::vector<RationalVector> L;
    for (long j = 0; j <= dd; ++j) {
        RationalVector l(d);
        for (long i = 0; i < dd; ++i)
            l[i] = Rational(j * m * (i + 1));
        L.push_back(std::move(l));
    }
    return L;
}

ThpmuldResult thpmuld_spectrum(long p, std::size_t d, std::size_t level) {
    auto L = thpmuld_digits(p, d);
    std::vector<RationalVector> B{zero_vector(d)};
    for (std::size_t i = 0; i < d; ++i) {
        RationalVector e = zero_vector(d);
        e[i] = 1;
        B.push_back(e);
    }
    ThpmuldResult r{check_hadamard(IntMatrix::scalar(d, p), B, L), {}, {}};
    auto pair = make_dual_pair(r.triple);
    r.cycles = analyze_cycles(pair);
    r.spectrum = spectrum_from_cycles(pair, r.cycles.wb_cycles, level);
    return r;
}

} // namespace aifs
