#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aifs/error.hpp"
#include "aifs/rational.hpp"

namespace aifs {

/// Square integer matrix, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0) {}
    /// Throws Error(shape) unless rows form a non-empty square array.
    explicit IntMatrix(const std::vector<std::vector<long>> &rows);

    static IntMatrix identity(std::size_t dim);
    static IntMatrix scalar(std::size_t dim, long p);

    std::size_t dim() const { return dim_; }
    long operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    long &operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }

    IntMatrix transpose() const;
    Integer determinant() const;
    /// True when the matrix is p*I for some p; p is returned.
    std::optional<long> as_scalar() const;
    std::vector<std::vector<long>> rows() const;

    friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

  private:
    std::size_t dim_ = 0;
    std::vector<long> a_;
};

class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    explicit RationalMatrix(const IntMatrix &m);

    static RationalMatrix identity(std::size_t dim);
    /// Matrix whose columns are the given vectors.
    static RationalMatrix from_columns(const std::vector<RationalVector> &cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rational &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Rational &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    RationalVector column(std::size_t j) const;
    RationalMatrix transpose() const;
    /// Gauss-Jordan over Q. Throws Error(singular).
    RationalMatrix inverse() const;
    Rational determinant() const;
    bool is_integral() const;
    std::vector<std::vector<double>> to_double() const;

    friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b);
RationalVector operator*(const RationalMatrix &m, const RationalVector &v);
RationalVector operator*(const IntMatrix &m, const RationalVector &v);

enum class Expansivity { expansive, not_expansive, borderline };

/// Eigenvalue moduli are compared against 1 with this margin.
inline constexpr double kExpansiveMargin = 1e-9;

/// Numerically classifies min |eigenvalue| against 1 +/- kExpansiveMargin.
Expansivity classify_expansive(const IntMatrix &m);
/// Smallest eigenvalue modulus (floating point).
double min_eigenvalue_modulus(const IntMatrix &m);

/// Integer matrix whose expansivity has been checked once at construction.
class ExpansiveIntMatrix {
  public:
    ExpansiveIntMatrix() = default;
    explicit ExpansiveIntMatrix(IntMatrix m);

    const IntMatrix &matrix() const { return m_; }
    std::size_t dim() const { return m_.dim(); }
    bool certified_expansive() const { return certified_; }
    Expansivity expansivity() const { return class_; }

    /// Throws Error(not_expansive) or Error(borderline) unless certified.
    const ExpansiveIntMatrix &require_expansive() const;

    ExpansiveIntMatrix transpose() const { return ExpansiveIntMatrix(m_.transpose()); }
    RationalMatrix inverse() const;

    friend bool operator==(const ExpansiveIntMatrix &a, const ExpansiveIntMatrix &b) {
        return a.m_ == b.m_;
    }

  private:
    IntMatrix m_;
    Expansivity class_ = Expansivity::not_expansive;
    bool certified_ = false;
};

bool check_expansive(const IntMatrix &m);
inline bool check_expansive(const ExpansiveIntMatrix &m) { return m.certified_expansive(); }

RationalMatrix inverse(const IntMatrix &m);
IntMatrix transpose(const IntMatrix &m);
RationalVector mat_vec(const IntMatrix &m, const RationalVector &v);

/// Dense double matrix helpers used by the numeric paths.
using DMatrix = std::vector<std::vector<double>>;
using DVector = std::vector<double>;

DVector mat_vec(const DMatrix &m, const DVector &v);
DMatrix mat_mul(const DMatrix &a, const DMatrix &b);
DMatrix to_dmatrix(const IntMatrix &m);
/// Spectral norm estimate: 200 power iterations on M^T M.
double spectral_norm(const DMatrix &m, int iterations = 200);
double norm2(const DVector &v);

/// Upper bound for sum_{k>=1} ||M^k||_2 for a matrix whose powers eventually
/// contract; uses the smallest m with ||M^m|| < 1. Throws Error(not_expansive)
/// when no such m <= 64 exists.
double power_norm_sum(const DMatrix &m);

} // namespace aifs
