#include "aifs/cyclotomic.hpp"

#include <map>

#include "aifs/error.hpp"

// An element sum_e c_e z^e of Q(z), z a primitive q-th root of unity, is
// decided as follows. With r = rad(q) and s = q/r, the powers 1, z, ..., z^{s-1}
// form a basis of Q(z) over Q(z^s) = Q(zeta_r), so the sum vanishes iff every
// residue class e mod s vanishes separately. For squarefree r the field
// Q(zeta_r) is the tensor product of the Q(zeta_p), p | r, each with basis
// zeta_p^0..zeta_p^{p-2} and zeta_p^{p-1} = -(1 + ... + zeta_p^{p-2}).

namespace aifs {

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        ps.push_back(n);
    return ps;
}

namespace {

long mod_inverse(long a, long m) {
    long t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt; std::swap(t, nt);
        r -= q * nr; std::swap(r, nr);
    }
    return t < 0 ? t + m : t;
}

} // namespace

bool vanishes_exactly(std::span<const RootTerm> terms) {
    Integer q = 1;
    for (const auto &t : terms)
        mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), t.phase.den().get_mpz_t());
    if (q > kMaxExactDenominator)
        throw Error(ErrorKind::unsupported,
                    "exactness unavailable: common denominator " + q.get_str() + " exceeds 10^6");
    const long qq = q.get_si();

    const auto primes = prime_factors(qq);
    long r = 1;
    for (long p : primes)
        r *= p;
    const long s = qq / r;

    std::vector<long> crt(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i)
        crt[i] = mod_inverse((r / primes[i]) % primes[i], primes[i]);

    // Coefficients keyed by (class mod s, mixed-radix index of the tensor basis).
    std::map<std::pair<long, long>, Rational> acc;

    for (const auto &t : terms) {
        if (t.coefficient.is_zero())
            continue;
        Integer e_big = t.phase.frac().num() * (q / t.phase.frac().den());
        long e = e_big.get_si() % qq;
        long j = e % s;
        long u = (e - j) / s;

        // Expand the product of per-prime powers into the reduced basis.
        std::vector<std::pair<long, Rational>> partial{{0, t.coefficient}};
        long stride = 1;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const long p = primes[i];
            const long c = (u % p) * crt[i] % p;
            std::vector<std::pair<long, Rational>> next;
            if (c < p - 1) {
                for (auto &[idx, coef] : partial)
                    next.emplace_back(idx + c * stride, coef);
            } else {
                for (auto &[idx, coef] : partial)
                    for (long k = 0; k < p - 1; ++k)
                        next.emplace_back(idx + k * stride, -coef);
            }
            partial = std::move(next);
            stride *= p - 1;
        }
        for (auto &[idx, coef] : partial)
            acc[{j, idx}] += coef;
    }
    for (const auto &[key, coef] : acc)
        if (!coef.is_zero())
            return false;
    return true;
}

} // namespace aifs
