#include "aifs/torus.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "aifs/cyclotomic.hpp"
#include "aifs/kernels.hpp"

namespace aifs {

namespace {

RationalVector unit(std::size_t d, std::size_t i) {
    RationalVector e(d, Rational(0));
    e[i] = 1;
    return e;
}

bool is_zero_vector(const RationalVector &x) {
    return std::all_of(x.begin(), x.end(), [](const Rational &r) { return r.is_zero(); });
}

// dist(x, Z^d)^2 for x in [0,1)^d.
Rational torus_distance_squared(const TorusPoint &x) {
    Rational acc = 0;
    for (const auto &c : x) {
        Rational m = std::min(c, Rational(1) - c);
        acc += m * m;
    }
    return acc;
}

ZeroSet structured_zeros(std::size_t d) {
    ZeroSet z;
    z.structure_tag = "standard-simplex digits";
    const Rational half(1, 2);
    if (d == 1) {
        z.points = {{half}};
        z.finite_complete = true;
    } else if (d == 2) {
        z.points = {{Rational(1, 3), Rational(2, 3)}, {Rational(2, 3), Rational(1, 3)}};
        z.finite_complete = true;
    } else {
        z.families = {{0, 1, 2, "(1/2, a, a+1/2)"},
                      {1, 0, 2, "(a, 1/2, a+1/2)"},
                      {2, 0, 1, "(a, a+1/2, 1/2)"}};
        std::set<TorusPoint> samples;
        for (const auto &f : z.families)
            for (long j = 0; j < 4; ++j) {
                TorusPoint p(3);
                p[f.fixed] = half;
                p[f.free1] = Rational(j, 4);
                p[f.free2] = Rational(j, 4) + half;
                samples.insert(to_torus(p));
            }
        z.points.assign(samples.begin(), samples.end());
    }
    return z;
}

bool near_mod_one(const DVector &a, const DVector &b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        double t = a[i] - b[i];
        t -= std::round(t);
        if (std::abs(t) > tol)
            return false;
    }
    return true;
}

} // namespace

TorusPoint to_torus(const RationalVector &x) { return mod_one(x); }

TorusPoint torus_map(const IntMatrix &S, const TorusPoint &x) { return mod_one(S * x); }

bool is_standard_simplex(const AffineSystem &sys) {
    const std::size_t d = sys.dim();
    if (sys.size() != d + 1)
        return false;
    std::set<RationalVector> want{RationalVector(d, Rational(0))};
    for (std::size_t i = 0; i < d; ++i)
        want.insert(unit(d, i));
    std::set<RationalVector> have(sys.digits().begin(), sys.digits().end());
    return want == have;
}

ZeroSet find_zeros(const AffineSystem &sys, const ZeroScanOptions &opts) {
    const std::size_t d = sys.dim();
    if (sys.uniform() && d <= 3 && is_standard_simplex(sys)) {
        ZeroSet z = structured_zeros(d);
        for (const auto &p : z.points)
            if (!eval_mB_exact(sys, p).exact_zero)
                throw Error(ErrorKind::not_certified, "structured zero failed exact check");
        return z;
    }

    ZeroSet z;
    z.structure_tag = "grid scan";
    z.possibly_incomplete = true;
    const SymbolData s = symbol_data(sys);
    std::set<TorusPoint> exact;
    for (const auto &root : kernels::scan_zeros(s, opts.n_grid)) {
        TorusPoint guess(d);
        for (std::size_t i = 0; i < d; ++i)
            guess[i] = rationalize(root[i], opts.max_denominator);
        guess = to_torus(guess);
        bool certified = false;
        try {
            certified = eval_mB_exact(sys, guess).exact_zero;
        } catch (const Error &) {
        }
        if (certified) {
            exact.insert(guess);
            continue;
        }
        bool dup = std::any_of(z.numeric_points.begin(), z.numeric_points.end(),
                               [&](const DVector &q) { return near_mod_one(q, root, 1e-8); });
        if (!dup)
            z.numeric_points.push_back(root);
    }
    z.points.assign(exact.begin(), exact.end());
    z.exactness = z.numeric_points.empty() ? ZeroExactness::certified : ZeroExactness::numeric;

    // In d = 1 with integer digits m_B is a polynomial in e^{2 pi i x} of
    // degree max B - min B, so finding that many roots closes the set.
    if (d == 1 && sys.digits_integral() && z.numeric_points.empty()) {
        Rational lo = sys.digits()[0][0], hi = lo;
        for (const auto &b : sys.digits()) {
            lo = std::min(lo, b[0]);
            hi = std::max(hi, b[0]);
        }
        if (Rational(static_cast<long>(z.points.size())) == hi - lo) {
            z.finite_complete = true;
            z.possibly_incomplete = false;
        }
    }
    return z;
}

OrbitResult orbit(const IntMatrix &S, const TorusPoint &x, std::size_t max_steps) {
    OrbitResult r;
    std::map<TorusPoint, std::size_t> seen;
    TorusPoint cur = to_torus(x);
    for (std::size_t step = 0; step <= max_steps; ++step) {
        auto [it, fresh] = seen.emplace(cur, r.trail.size());
        if (!fresh) {
            r.pre_period = it->second;
            r.period = r.trail.size() - it->second;
            r.trail.push_back(cur);
            return r;
        }
        r.trail.push_back(cur);
        cur = torus_map(S, cur);
    }
    throw Error(ErrorKind::budget, "orbit did not recur within max_steps");
}

std::vector<TorusPoint> invariant_superset(const IntMatrix &S, const std::vector<TorusPoint> &Z,
                                           std::size_t max_size) {
    std::set<TorusPoint> closure;
    std::deque<TorusPoint> queue;
    for (const auto &z : Z) {
        auto t = to_torus(z);
        if (closure.insert(t).second)
            queue.push_back(t);
    }
    while (!queue.empty()) {
        TorusPoint x = std::move(queue.front());
        queue.pop_front();
        if (is_zero_vector(x))
            throw Error(ErrorKind::inapplicable, "orbit of the zero set reaches 0");
        auto y = torus_map(S, x);
        if (closure.insert(y).second) {
            if (closure.size() > max_size)
                throw Error(ErrorKind::budget, "closure not finite within budget");
            queue.push_back(std::move(y));
        }
    }
    return {closure.begin(), closure.end()};
}

std::size_t orthogonality_bound_finite(const std::vector<TorusPoint> &Zp) { return Zp.size() + 1; }

Integer distance_bound_value(std::size_t d, const Rational &delta2) {
    if (delta2.sign() <= 0)
        throw Error(ErrorKind::inapplicable, "orbit touches Z^d (delta = 0)");
    Integer q = (Rational(static_cast<long>(d)) / delta2).floor();
    Integer root;
    mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
    Integer base = root + 1, out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), d);
    return out;
}

DistanceBound orthogonality_bound_distance(const IntMatrix &S, const ZeroSet &Z,
                                           std::size_t horizon) {
    DistanceBound out;
    const std::size_t d = S.dim();
    if (!Z.families.empty()) {
        auto p = S.as_scalar();
        if (!p || *p % 2 == 0)
            throw Error(ErrorKind::inapplicable,
                        "zero families are invariant only under S = pI with p odd");
        // Every family member keeps a coordinate equal to 1/2 under x -> p x.
        out.delta_squared = Rational(1, 4);
        out.from_families = true;
        out.notes.push_back("delta >= 1/2 from the coordinate fixed at 1/2 in every zero family");
    } else if (Z.points.empty()) {
        if (!Z.numeric_points.empty())
            throw Error(ErrorKind::not_certified, "zero set has uncertified points only");
        out.bound = 1;
        out.delta = std::numeric_limits<double>::infinity();
        out.notes.push_back("no zeros: only one exponential");
        return out;
    } else {
        if (Z.possibly_incomplete || !Z.numeric_points.empty())
            out.notes.push_back("zero set not certified complete");
        std::set<TorusPoint> seen;
        std::deque<TorusPoint> queue;
        for (const auto &z : Z.points)
            if (seen.insert(z).second)
                queue.push_back(z);
        bool first = true;
        while (!queue.empty()) {
            TorusPoint x = std::move(queue.front());
            queue.pop_front();
            Rational dist = torus_distance_squared(x);
            if (first || dist < out.delta_squared)
                out.delta_squared = dist;
            first = false;
            if (dist.is_zero())
                throw Error(ErrorKind::inapplicable, "orbit touches Z^d (delta = 0)");
            auto y = torus_map(S, x);
            if (seen.size() >= horizon) {
                out.notes.push_back("orbit exploration truncated at horizon");
                continue;
            }
            if (seen.insert(y).second)
                queue.push_back(std::move(y));
        }
        out.explored = seen.size();
    }
    out.delta = std::sqrt(out.delta_squared.to_double());
    out.bound = distance_bound_value(d, out.delta_squared);
    if (out.from_families && d == 3 && out.bound == 64)
        out.notes.push_back("published value 256 for this case disagrees with the formula; "
                            "formula value 64 reported");
    return out;
}

DnResult lemconf_Dn(long p, std::size_t d, int n) {
    if (p < 2 || n < 1 || d < 1)
        throw Error(ErrorKind::shape, "D_n needs p >= 2, n >= 1, d >= 1");
    long M = 1;
    for (int i = 0; i < n; ++i) {
        M *= p;
        if (M > kMaxDnModulus)
            throw Error(ErrorKind::budget, "p^n exceeds the D_n brute-force cap");
    }
    double tuples = 1;
    for (std::size_t i = 1; i <= d; ++i)
        tuples = tuples * static_cast<double>(M + static_cast<long>(i) - 1) / static_cast<double>(i);
    if (tuples > kMaxDnTuples)
        throw Error(ErrorKind::budget, "D_n tuple count exceeds budget");

    auto best = kernels::dn_search(M, d);
    DnResult r{p, d, n, M, best.value, 0.0, best.k, false};
    if (r.value < 1e-9) {
        std::vector<RootTerm> terms{{Rational(1), Rational(0)}};
        for (long k : r.argmin)
            terms.push_back({Rational(1), Rational(k, M)});
        r.exact_zero = vanishes_exactly(terms);
        if (r.exact_zero)
            r.value = 0;
    }
    r.scaled = static_cast<double>(M) * r.value;
    return r;
}

DnVerdict lemconf_verdict(long p, std::size_t d, int n_max) {
    DnVerdict v;
    for (int n = 1; n <= n_max; ++n) {
        try {
            v.rows.push_back(lemconf_Dn(p, d, n));
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::budget)
                throw;
            v.truncated = true;
            break;
        }
    }
    v.verdict = "inconclusive";
    if (v.rows.empty()) {
        v.note = "no D_n computed within budget";
        return v;
    }
    v.min_scaled = v.rows.front().scaled;
    for (const auto &r : v.rows)
        v.min_scaled = std::min(v.min_scaled, r.scaled);
    for (const auto &r : v.rows)
        if (r.exact_zero) {
            v.note = "D_" + std::to_string(r.n) + " = 0 exactly";
            return v;
        }
    bool stable = v.rows.size() >= 2 &&
                  std::abs(v.rows.back().scaled - v.rows[v.rows.size() - 2].scaled) <=
                      kDnStableRelative * v.rows.back().scaled;
    if (v.min_scaled > kDnEvidenceThreshold && stable) {
        v.verdict = "criterion triggered (evidence)";
        v.note = "finite check only, not a proof";
    } else {
        v.note = "p^n D_n not bounded away from 0 or not yet stable";
    }
    return v;
}

WeightedZeroVerdict has_zero_weighted(const AffineSystem &sys, std::size_t n_grid) {
    if (sys.size() == 2)
        return {sys.weights()[0] == sys.weights()[1], true};
    return {!kernels::scan_zeros(symbol_data(sys), n_grid).empty(), false};
}

} // namespace aifs
