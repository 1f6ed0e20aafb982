#include "aifs/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "aifs/error.hpp"

namespace aifs {

namespace {

bool parse_integer(std::string_view s, Integer &out) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
            return false;
    std::string body(s.substr(s[0] == '+' ? 1 : 0));
    return out.set_str(body, 10) == 0;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational::Rational(const Integer &num, const Integer &den) {
    if (den == 0)
        throw Error(ErrorKind::singular, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto s = trim(text);
    if (auto dotpos = s.find('.'); dotpos != std::string_view::npos) {
        // finite decimal, e.g. "0.4999"
        std::string digits(s.substr(0, dotpos));
        std::string_view frac = s.substr(dotpos + 1);
        digits += frac;
        Integer num, den = 1;
        if (frac.empty() || !parse_integer(digits, num) || frac.front() == '-' ||
            frac.front() == '+')
            throw Error(ErrorKind::parse, "not a rational: '" + std::string(text) + "'");
        for (std::size_t i = 0; i < frac.size(); ++i)
            den *= 10;
        return Rational(num, den);
    }
    auto slash = s.find('/');
    Integer num, den = 1;
    bool ok = slash == std::string_view::npos
                  ? parse_integer(s, num)
                  : parse_integer(trim(s.substr(0, slash)), num) &&
                        parse_integer(trim(s.substr(slash + 1)), den);
    if (!ok || den == 0)
        throw Error(ErrorKind::parse, "not a rational: '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Integer Rational::floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero())
        throw Error(ErrorKind::singular, "division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

RationalVector operator+(const RationalVector &a, const RationalVector &b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::shape, "vector size mismatch");
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

RationalVector operator-(const RationalVector &a, const RationalVector &b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::shape, "vector size mismatch");
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

RationalVector operator*(const Rational &s, const RationalVector &v) {
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

RationalVector operator-(const RationalVector &v) {
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = -v[i];
    return r;
}

Rational dot(const RationalVector &a, const RationalVector &b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::shape, "vector size mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::vector<double> to_double(const RationalVector &v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = v[i].to_double();
    return r;
}

std::string to_string(const RationalVector &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].str();
    }
    return s;
}

RationalVector parse_vector(std::string_view text) {
    RationalVector out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                        : comma - start);
        out.push_back(Rational::parse(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

Integer common_denominator(const RationalVector &v) {
    Integer l = 1;
    for (const auto &x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    return l;
}

bool is_integral(const RationalVector &v) {
    for (const auto &x : v)
        if (!x.is_integer())
            return false;
    return true;
}

RationalVector mod_one(const RationalVector &v) {
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = v[i].frac();
    return r;
}

std::size_t RationalVectorHash::operator()(const RationalVector &v) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto &x : v) {
        std::size_t a = mpz_get_ui(x.num().get_mpz_t()) ^ (x.sign() < 0 ? 0x5bd1e995ull : 0);
        std::size_t b = mpz_get_ui(x.den().get_mpz_t());
        h ^= a + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

Rational rationalize(double x, long max_den) {
    // Convergents p_k/q_k of the continued fraction of x.
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double y = x;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(y);
        if (std::abs(a) > 1e15)
            break;
        long ai = static_cast<long>(a);
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den)
            break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double f = y - a;
        if (f < 1e-15)
            break;
        y = 1.0 / f;
    }
    if (q1 == 0)
        return Rational(static_cast<long>(std::llround(x)));
    return Rational(p1, q1);
}

} // namespace aifs
