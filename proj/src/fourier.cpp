#include "aifs/fourier.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "aifs/cyclotomic.hpp"

namespace aifs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SymbolData make_symbol(std::size_t d, std::vector<DVector> digits, std::vector<double> weights,
                       DMatrix S_inv) {
    SymbolData s;
    s.dim = d;
    s.digits = std::move(digits);
    s.weights = std::move(weights);
    s.S_inv = std::move(S_inv);
    for (std::size_t i = 0; i < s.digits.size(); ++i)
        s.lipschitz += kTwoPi * s.weights[i] * norm2(s.digits[i]);
    s.norm_sum = power_norm_sum(s.S_inv);
    return s;
}

DMatrix transpose(const DMatrix &m) {
    DMatrix t(m.empty() ? 0 : m[0].size(), DVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            t[j][i] = m[i][j];
    return t;
}

} // namespace

SymbolData symbol_data(const AffineSystem &sys) {
    std::vector<DVector> digits;
    for (const auto &b : sys.digits())
        digits.push_back(to_double(b));
    return make_symbol(sys.dim(), std::move(digits), sys.weights_d(),
                       transpose(sys.R_inverse_d()));
}

SymbolData conjugated_symbol(const AffineSystem &sys, const RationalMatrix &V) {
    RationalMatrix Vinv = V.inverse();
    RationalMatrix RV = V * RationalMatrix(sys.R().matrix()) * Vinv;
    RationalMatrix SV_inv = RV.transpose().inverse();
    std::vector<DVector> digits;
    for (const auto &b : sys.digits())
        digits.push_back(to_double(V * b));
    return make_symbol(sys.dim(), std::move(digits), sys.weights_d(), SV_inv.to_double());
}

Complex eval_symbol(const SymbolData &s, const DVector &x) {
    Complex sum = 0;
    for (std::size_t i = 0; i < s.digits.size(); ++i) {
        double phase = 0;
        for (std::size_t j = 0; j < s.dim; ++j)
            phase += s.digits[i][j] * x[j];
        phase -= std::floor(phase);
        sum += s.weights[i] * Complex(std::cos(kTwoPi * phase), std::sin(kTwoPi * phase));
    }
    return sum;
}

SymbolValue eval_mB(const AffineSystem &sys, const DVector &x) {
    if (x.size() != sys.dim())
        throw Error(ErrorKind::shape, "point dimension mismatch");
    Complex sum = 0;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        double phase = 0;
        const auto &b = sys.digits()[i];
        for (std::size_t j = 0; j < x.size(); ++j)
            phase += b[j].to_double() * x[j];
        phase -= std::floor(phase);
        sum += sys.weights_d()[i] * Complex(std::cos(kTwoPi * phase), std::sin(kTwoPi * phase));
    }
    return {sum, false};
}

std::vector<Rational> exact_phases(const AffineSystem &sys, const RationalVector &x) {
    if (x.size() != sys.dim())
        throw Error(ErrorKind::shape, "point dimension mismatch");
    std::vector<Rational> phases;
    phases.reserve(sys.size());
    for (const auto &b : sys.digits())
        phases.push_back(dot(b, x).frac());
    return phases;
}

SymbolValue eval_mB_exact(const AffineSystem &sys, const RationalVector &x) {
    auto phases = exact_phases(sys, x);
    std::vector<RootTerm> terms;
    Complex sum = 0;
    for (std::size_t i = 0; i < phases.size(); ++i) {
        terms.push_back({sys.weights()[i], phases[i]});
        double ph = phases[i].to_double();
        sum += sys.weights_d()[i] * Complex(std::cos(kTwoPi * ph), std::sin(kTwoPi * ph));
    }
    bool zero = vanishes_exactly(terms);
    return {zero ? Complex(0.0, 0.0) : sum, zero};
}

double eval_WB(const AffineSystem &sys, const DVector &x) { return std::norm(eval_mB(sys, x).value); }

bool WB_is_one_exact(const AffineSystem &sys, const RationalVector &x) {
    auto phases = exact_phases(sys, x);
    for (const auto &ph : phases)
        if (ph != phases[0])
            return false;
    return true;
}

double check_WB_normalization(const AffineSystem &sys_B, const AffineSystem &sys_L,
                              std::size_t samples, std::uint64_t seed) {
    if (sys_B.size() != sys_L.size())
        throw Error(ErrorKind::cardinality, "|B| != |L|");
    if (sys_B.dim() != sys_L.dim())
        throw Error(ErrorKind::shape, "dimension mismatch between B and L systems");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-5.0, 5.0);
    double worst = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        DVector x(sys_B.dim());
        for (auto &v : x)
            v = U(rng);
        double total = 0;
        for (std::size_t l = 0; l < sys_L.size(); ++l)
            total += eval_WB(sys_B, sys_L.tau(l, x));
        worst = std::max(worst, std::abs(total - 1.0));
    }
    return worst;
}

MuHatValue eval_mu_hat(const SymbolData &s, const DVector &x, const TruncationPolicy &policy) {
    MuHatValue out;
    out.value = 1.0;
    DVector y = x;
    double tail = 0;
    for (int n = 1; n <= policy.max_terms; ++n) {
        y = mat_vec(s.S_inv, y);
        out.value *= eval_symbol(s, y);
        out.terms = n;
        // Remaining factors n+1.. each satisfy |m - 1| <= lipschitz ||S^{-j} y||.
        double eps = s.lipschitz * s.norm_sum * norm2(y);
        tail = std::expm1(eps);
        if (tail < policy.tail_bound || out.value == 0.0)
            break;
    }
    out.error_radius = std::abs(out.value) * tail + 1e-15 * out.terms;
    return out;
}

MuHatValue eval_mu_hat(const AffineSystem &sys, const DVector &x, const TruncationPolicy &policy) {
    return eval_mu_hat(symbol_data(sys), x, policy);
}

MuHatValue eval_mu_hat_terms(const SymbolData &s, const DVector &x, int terms) {
    MuHatValue out;
    out.value = 1.0;
    DVector y = x;
    for (int n = 1; n <= terms; ++n) {
        y = mat_vec(s.S_inv, y);
        out.value *= eval_symbol(s, y);
    }
    out.terms = terms;
    out.error_radius = std::abs(out.value) * std::expm1(s.lipschitz * s.norm_sum * norm2(y)) +
                       1e-15 * terms;
    return out;
}

MuHatValue eval_mu_hat_exact(const AffineSystem &sys, const RationalVector &x,
                             const TruncationPolicy &policy) {
    const SymbolData s = symbol_data(sys);
    const RationalMatrix S_inv = sys.R_inverse().transpose();
    MuHatValue out;
    out.value = 1.0;
    RationalVector y = x;
    double tail = 0;
    for (int n = 1; n <= policy.max_terms; ++n) {
        y = S_inv * y;
        auto phases = exact_phases(sys, y);
        Complex factor = 0;
        for (std::size_t i = 0; i < phases.size(); ++i) {
            double ph = phases[i].to_double();
            factor += s.weights[i] * Complex(std::cos(kTwoPi * ph), std::sin(kTwoPi * ph));
        }
        out.terms = n;
        if (std::abs(factor) < 1e-6) {
            try {
                if (eval_mB_exact(sys, y).exact_zero) {
                    out.value = 0.0;
                    out.exact_zero = true;
                    out.error_radius = 0;
                    return out;
                }
            } catch (const Error &) {
                // exactness unavailable: keep the float factor
            }
        }
        out.value *= factor;
        tail = std::expm1(s.lipschitz * s.norm_sum * norm2(to_double(y)));
        if (tail < policy.tail_bound)
            break;
    }
    out.error_radius = std::abs(out.value) * tail + 1e-15 * out.terms;
    return out;
}

double invariance_residual(const AffineSystem &sys, const DVector &x, const TruncationPolicy &policy) {
    const SymbolData s = symbol_data(sys);
    MuHatValue full = eval_mu_hat(s, x, policy);
    DVector y = mat_vec(s.S_inv, x);
    MuHatValue inner = eval_mu_hat_terms(s, y, full.terms);
    return std::abs(full.value - eval_symbol(s, y) * inner.value);
}

} // namespace aifs
