// Serial reference vs OpenMP kernels. Usage: aifs_bench [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "aifs/kernels.hpp"
#include "aifs/parallel.hpp"
#include "aifs/verify.hpp"

using namespace aifs;

namespace {

template <class F>
double best_of(int repeats, F &&f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const char *name, double serial, double omp) {
    std::printf("%-22s %10.4f %10.4f %8.2fx\n", name, serial, omp, serial / omp);
}

volatile double sink;

} // namespace

int main(int argc, char **argv) {
    configure_threads();
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d\n%-22s %10s %10s %9s\n", max_threads(), "kernel", "serial s", "omp s",
                "speedup");

    AffineSystem gasket(IntMatrix::scalar(3, 2),
                        {{Rational(0), Rational(0), Rational(0)},
                         {Rational(1), Rational(0), Rational(0)},
                         {Rational(0), Rational(1), Rational(0)},
                         {Rational(0), Rational(0), Rational(1)}});
    std::vector<DVector> digits;
    for (const auto &b : gasket.digits())
        digits.push_back(to_double(b));
    DVector x0(3, 0.0);
    row("expand_words d3 n9",
        best_of(repeats, [&] { sink = kernels::serial::expand_words(gasket.R_inverse_d(), digits, x0, 9).size(); }),
        best_of(repeats, [&] { sink = kernels::expand_words(gasket.R_inverse_d(), digits, x0, 9).size(); }));

    SymbolData sym = symbol_data(gasket);
    row("scan_zeros d3 g24",
        best_of(repeats, [&] { sink = kernels::serial::scan_zeros(sym, 24).size(); }),
        best_of(repeats, [&] { sink = kernels::scan_zeros(sym, 24).size(); }));

    row("dn_search 3^5 d3",
        best_of(repeats, [&] { sink = kernels::serial::dn_search(243, 3).value; }),
        best_of(repeats, [&] { sink = kernels::dn_search(243, 3).value; }));

    AffineSystem cantor(IntMatrix::scalar(1, 4), {{Rational(0)}, {Rational(2)}});
    SymbolData cs = symbol_data(cantor);
    std::vector<DVector> spec;
    for (long k = 0; k < 65536; ++k) {
        long v = 0, p = 1;
        for (long m = k; m; m >>= 1, p *= 4)
            v += (m & 1) * p;
        spec.push_back({static_cast<double>(v)});
    }
    TruncationPolicy pol;
    row("parseval_sum 2^16",
        best_of(repeats, [&] { sink = kernels::serial::parseval_sum(cs, spec, {0.3}, pol); }),
        best_of(repeats, [&] { sink = kernels::parseval_sum(cs, spec, {0.3}, pol); }));

    auto rel = [](std::size_t i, std::size_t j) { return ((i * 2654435761u) ^ j) % 7 == 0; };
    row("pairwise_relation 4k",
        best_of(repeats, [&] { sink = kernels::serial::pairwise_relation(4000, rel).size(); }),
        best_of(repeats, [&] { sink = kernels::pairwise_relation(4000, rel).size(); }));
    return 0;
}
