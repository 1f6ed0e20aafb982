#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace aifs {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
  public:
    Rational() = default;
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(n) {}
    Rational(const Integer &n) : q_(n) {}
    Rational(const Integer &num, const Integer &den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p", "p/q" or "-p/q". Throws Error(parse) on anything else.
    static Rational parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }
    std::string str() const;

    Integer floor() const;
    /// Fractional part in [0, 1).
    Rational frac() const;
    Rational abs() const;

    Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
    Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
    Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    const mpq_class &raw() const { return q_; }

  private:
    mpq_class q_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

using RationalVector = std::vector<Rational>;

RationalVector operator+(const RationalVector &a, const RationalVector &b);
RationalVector operator-(const RationalVector &a, const RationalVector &b);
RationalVector operator*(const Rational &s, const RationalVector &v);
RationalVector operator-(const RationalVector &v);
Rational dot(const RationalVector &a, const RationalVector &b);

std::vector<double> to_double(const RationalVector &v);
std::string to_string(const RationalVector &v);
/// Parses "a/b,c/d,..." into a vector.
RationalVector parse_vector(std::string_view text);
/// Least common multiple of the denominators.
Integer common_denominator(const RationalVector &v);
bool is_integral(const RationalVector &v);
/// Componentwise fractional part; the result lies in [0,1)^d.
RationalVector mod_one(const RationalVector &v);

struct RationalVectorHash {
    std::size_t operator()(const RationalVector &v) const;
};

/// Best rational approximation with denominator <= max_den (continued fractions).
Rational rationalize(double x, long max_den);

} // namespace aifs
