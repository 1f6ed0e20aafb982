#include "aifs/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "aifs/kernels.hpp"

namespace aifs {

AffineSystem::AffineSystem(ExpansiveIntMatrix R, std::vector<RationalVector> digits,
                           std::vector<Rational> weights)
    : R_(std::move(R)), digits_(std::move(digits)), weights_(std::move(weights)) {
    R_.require_expansive();
    const std::size_t d = R_.dim();
    if (digits_.empty())
        throw Error(ErrorKind::shape, "digit set is empty");
    for (const auto &b : digits_)
        if (b.size() != d)
            throw Error(ErrorKind::shape, "digit dimension does not match R");
    std::set<RationalVector> seen(digits_.begin(), digits_.end());
    if (seen.size() != digits_.size())
        throw Error(ErrorKind::parse, "digits are not pairwise distinct");

    const std::size_t n = digits_.size();
    if (weights_.empty()) {
        weights_.assign(n, Rational(1, static_cast<long>(n)));
    } else {
        if (weights_.size() != n)
            throw Error(ErrorKind::cardinality, "weight count differs from digit count");
        Rational total;
        for (const auto &w : weights_) {
            if (w.sign() <= 0)
                throw Error(ErrorKind::parse, "weights must be positive");
            total += w;
        }
        if (total != Rational(1))
            throw Error(ErrorKind::parse, "weights must sum to 1");
        uniform_ = std::all_of(weights_.begin(), weights_.end(),
                               [&](const Rational &w) { return w == weights_[0]; });
    }
    weights_d_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        weights_d_[i] = weights_[i].to_double();

    R_inv_ = R_.inverse();
    R_inv_d_ = R_inv_.to_double();
    norm_sum_ = power_norm_sum(R_inv_d_);
    for (const auto &b : digits_)
        max_digit_norm_ = std::max(max_digit_norm_, norm2(to_double(b)));
}

bool AffineSystem::digits_integral() const {
    return std::all_of(digits_.begin(), digits_.end(),
                       [](const RationalVector &b) { return is_integral(b); });
}

bool AffineSystem::contains_zero_digit() const {
    return std::any_of(digits_.begin(), digits_.end(), [](const RationalVector &b) {
        return std::all_of(b.begin(), b.end(), [](const Rational &x) { return x.is_zero(); });
    });
}

RationalVector AffineSystem::tau(std::size_t index, const RationalVector &x) const {
    if (index >= digits_.size())
        throw Error(ErrorKind::index, "digit index out of range");
    return R_inv_ * (x + digits_[index]);
}

DVector AffineSystem::tau(std::size_t index, const DVector &x) const {
    if (index >= digits_.size())
        throw Error(ErrorKind::index, "digit index out of range");
    DVector y = x;
    auto bd = to_double(digits_[index]);
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] += bd[i];
    return mat_vec(R_inv_d_, y);
}

RationalVector AffineSystem::fixed_point(std::size_t index) const {
    if (index >= digits_.size())
        throw Error(ErrorKind::index, "digit index out of range");
    RationalMatrix m(R_.matrix());
    for (std::size_t i = 0; i < dim(); ++i)
        m(i, i) -= 1;
    return m.inverse() * digits_[index];
}

RationalVector tau(const AffineSystem &sys, std::size_t b_index, const RationalVector &x) {
    return sys.tau(b_index, x);
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > kMaxCloudPoints / base)
            throw Error(ErrorKind::budget, "attractor depth too large");
        r *= base;
    }
    return r;
}

} // namespace

AttractorCloud attractor(const AffineSystem &sys, std::size_t depth, AttractorMode mode,
                         const ChaosGameOptions &chaos) {
    AttractorCloud cloud;
    cloud.depth = depth;
    cloud.mode = mode;
    std::vector<DVector> digits;
    for (const auto &b : sys.digits())
        digits.push_back(to_double(b));
    DVector x0 = to_double(sys.fixed_point(0));

    if (mode == AttractorMode::deterministic) {
        checked_power(sys.size(), depth);
        cloud.points = kernels::expand_words(sys.R_inverse_d(), digits, x0, depth);
        return cloud;
    }

    // Chaos game: one stream per seed, weights drive the digit choice.
    std::mt19937_64 rng(chaos.seed);
    std::vector<double> cumulative(sys.size());
    double acc = 0;
    for (std::size_t i = 0; i < sys.size(); ++i)
        cumulative[i] = (acc += sys.weights_d()[i]);
    auto pick = [&]() {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        return std::min<std::size_t>(it - cumulative.begin(), sys.size() - 1);
    };
    DVector x = x0;
    auto step = [&]() {
        const auto &b = digits[pick()];
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += b[i];
        x = mat_vec(sys.R_inverse_d(), x);
    };
    for (std::size_t i = 0; i < kChaosBurnIn; ++i)
        step();
    cloud.points.reserve(chaos.points);
    for (std::size_t i = 0; i < chaos.points; ++i) {
        step();
        cloud.points.push_back(x);
    }
    return cloud;
}

std::vector<RationalVector> attractor_exact(const AffineSystem &sys, std::size_t depth) {
    checked_power(sys.size(), depth);
    std::vector<RationalVector> level{sys.fixed_point(0)};
    for (std::size_t n = 0; n < depth; ++n) {
        std::vector<RationalVector> next;
        next.reserve(level.size() * sys.size());
        for (std::size_t b = 0; b < sys.size(); ++b)
            for (const auto &x : level)
                next.push_back(sys.tau(b, x));
        level = std::move(next);
    }
    return level;
}

bool Box::contains(const DVector &x, double slack) const {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < lo[i] - slack || x[i] > hi[i] + slack)
            return false;
    return true;
}

Box bounding_box(const AffineSystem &sys) {
    // X = { sum_{k>=1} R^{-k} b_k }: per-coordinate extremes of the first K
    // terms plus a norm bound on the tail.
    constexpr int kTerms = 64;
    const std::size_t d = sys.dim();
    Box box{DVector(d, 0.0), DVector(d, 0.0)};
    std::vector<DVector> digits;
    for (const auto &b : sys.digits())
        digits.push_back(to_double(b));
    DMatrix power = sys.R_inverse_d();
    for (int k = 1; k <= kTerms; ++k) {
        for (std::size_t i = 0; i < d; ++i) {
            double lo = INFINITY, hi = -INFINITY;
            for (const auto &b : digits) {
                double v = 0;
                for (std::size_t j = 0; j < d; ++j)
                    v += power[i][j] * b[j];
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            box.lo[i] += lo;
            box.hi[i] += hi;
        }
        if (k < kTerms)
            power = mat_mul(power, sys.R_inverse_d());
    }
    double tail = 1.01 * spectral_norm(power) * sys.inverse_power_norm_sum() * sys.max_digit_norm();
    double width = 0;
    for (std::size_t i = 0; i < d; ++i)
        width = std::max(width, box.hi[i] - box.lo[i]);
    double pad = tail + 0.01 * width + 1e-12;
    for (std::size_t i = 0; i < d; ++i) {
        box.lo[i] -= pad;
        box.hi[i] += pad;
    }
    return box;
}

} // namespace aifs
