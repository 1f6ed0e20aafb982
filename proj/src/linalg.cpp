#include "aifs/linalg.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

namespace aifs {

IntMatrix::IntMatrix(const std::vector<std::vector<long>> &rows) {
    if (rows.empty())
        throw Error(ErrorKind::shape, "empty matrix");
    dim_ = rows.size();
    a_.reserve(dim_ * dim_);
    for (const auto &r : rows) {
        if (r.size() != dim_)
            throw Error(ErrorKind::shape, "matrix is not square");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t dim) { return scalar(dim, 1); }

IntMatrix IntMatrix::scalar(std::size_t dim, long p) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        m(i, i) = p;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Integer IntMatrix::determinant() const {
    Rational d = RationalMatrix(*this).determinant();
    return d.num();
}

std::optional<long> IntMatrix::as_scalar() const {
    if (dim_ == 0)
        return std::nullopt;
    long p = (*this)(0, 0);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if ((*this)(i, j) != (i == j ? p : 0))
                return std::nullopt;
    return p;
}

std::vector<std::vector<long>> IntMatrix::rows() const {
    std::vector<std::vector<long>> r(dim_, std::vector<long>(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            r[i][j] = (*this)(i, j);
    return r;
}

RationalMatrix::RationalMatrix(const IntMatrix &m) : RationalMatrix(m.dim(), m.dim()) {
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            (*this)(i, j) = Rational(m(i, j));
}

RationalMatrix RationalMatrix::identity(std::size_t dim) {
    RationalMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector> &cols) {
    if (cols.empty())
        throw Error(ErrorKind::shape, "no columns");
    RationalMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows())
            throw Error(ErrorKind::shape, "ragged columns");
        for (std::size_t i = 0; i < m.rows(); ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

RationalVector RationalMatrix::column(std::size_t j) const {
    RationalVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_)
        throw Error(ErrorKind::shape, "inverse of non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix a = *this, inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c).is_zero())
            ++piv;
        if (piv == n)
            throw Error(ErrorKind::singular, "matrix is singular");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(c, j), a(piv, j));
                std::swap(inv(c, j), inv(piv, j));
            }
        Rational s = Rational(1) / a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) *= s;
            inv(c, j) *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c).is_zero())
                continue;
            Rational f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

Rational RationalMatrix::determinant() const {
    if (rows_ != cols_)
        throw Error(ErrorKind::shape, "determinant of non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix a = *this;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c).is_zero())
            ++piv;
        if (piv == n)
            return Rational(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(c, j), a(piv, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c).is_zero())
                continue;
            Rational f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

bool RationalMatrix::is_integral() const {
    for (const auto &x : a_)
        if (!x.is_integer())
            return false;
    return true;
}

std::vector<std::vector<double>> RationalMatrix::to_double() const {
    std::vector<std::vector<double>> m(rows_, std::vector<double>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m[i][j] = (*this)(i, j).to_double();
    return m;
}

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b) {
    if (a.cols() != b.rows())
        throw Error(ErrorKind::shape, "matrix product shape mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RationalVector operator*(const RationalMatrix &m, const RationalVector &v) {
    if (m.cols() != v.size())
        throw Error(ErrorKind::shape, "matrix-vector shape mismatch");
    RationalVector r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                r[i] += m(i, j) * v[j];
    return r;
}

RationalVector operator*(const IntMatrix &m, const RationalVector &v) {
    if (m.dim() != v.size())
        throw Error(ErrorKind::shape, "matrix-vector shape mismatch");
    RationalVector r(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (m(i, j) != 0)
                r[i] += Rational(m(i, j)) * v[j];
    return r;
}

double min_eigenvalue_modulus(const IntMatrix &m) {
    const auto n = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            a(i, j) = static_cast<double>(m(i, j));
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    double lo = INFINITY;
    for (Eigen::Index i = 0; i < n; ++i)
        lo = std::min(lo, std::abs(es.eigenvalues()(i)));
    return lo;
}

Expansivity classify_expansive(const IntMatrix &m) {
    if (m.dim() == 0)
        throw Error(ErrorKind::shape, "empty matrix");
    double lo = min_eigenvalue_modulus(m);
    if (lo >= 1.0 + kExpansiveMargin)
        return Expansivity::expansive;
    if (std::abs(lo - 1.0) < kExpansiveMargin)
        return Expansivity::borderline;
    return Expansivity::not_expansive;
}

bool check_expansive(const IntMatrix &m) { return classify_expansive(m) == Expansivity::expansive; }

ExpansiveIntMatrix::ExpansiveIntMatrix(IntMatrix m) : m_(std::move(m)) {
    class_ = classify_expansive(m_);
    certified_ = class_ == Expansivity::expansive;
}

const ExpansiveIntMatrix &ExpansiveIntMatrix::require_expansive() const {
    if (class_ == Expansivity::borderline)
        throw Error(ErrorKind::borderline,
                    "an eigenvalue modulus lies within 1e-9 of 1; expansivity cannot be certified");
    if (class_ == Expansivity::not_expansive)
        throw Error(ErrorKind::not_expansive, "matrix is not expansive");
    return *this;
}

RationalMatrix ExpansiveIntMatrix::inverse() const { return aifs::inverse(m_); }

RationalMatrix inverse(const IntMatrix &m) { return RationalMatrix(m).inverse(); }

IntMatrix transpose(const IntMatrix &m) { return m.transpose(); }

RationalVector mat_vec(const IntMatrix &m, const RationalVector &v) { return m * v; }

DVector mat_vec(const DMatrix &m, const DVector &v) {
    DVector r(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            r[i] += m[i][j] * v[j];
    return r;
}

DMatrix mat_mul(const DMatrix &a, const DMatrix &b) {
    const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    DMatrix c(n, DVector(p, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t j = 0; j < p; ++j)
                c[i][j] += a[i][t] * b[t][j];
    return c;
}

DMatrix to_dmatrix(const IntMatrix &m) {
    DMatrix r(m.dim(), DVector(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            r[i][j] = static_cast<double>(m(i, j));
    return r;
}

double norm2(const DVector &v) {
    double s = 0;
    for (double x : v)
        s += x * x;
    return std::sqrt(s);
}

double spectral_norm(const DMatrix &m, int iterations) {
    const std::size_t n = m.empty() ? 0 : m[0].size();
    if (n == 0)
        return 0.0;
    // Power iteration on M^T M from a fixed non-degenerate start.
    DVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = 1.0 + 0.1 * static_cast<double>(i);
    double sigma2 = 0;
    for (int it = 0; it < iterations; ++it) {
        DVector w = mat_vec(m, v);
        DVector u(n, 0.0);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                u[j] += m[i][j] * w[i];
        double nu = norm2(u), nv = norm2(v);
        if (nu == 0 || nv == 0)
            return 0.0;
        sigma2 = nu / nv;
        for (std::size_t j = 0; j < n; ++j)
            v[j] = u[j] / nu;
    }
    return std::sqrt(sigma2);
}

double power_norm_sum(const DMatrix &m) {
    DMatrix p = m;
    double partial = 0;
    for (int k = 1; k <= 64; ++k) {
        // Power iteration approaches the norm from below; inflate by 1%.
        double c = 1.01 * spectral_norm(p);
        partial += c;
        if (c < 0.99)
            return partial / (1.0 - c);
        p = mat_mul(p, m);
    }
    throw Error(ErrorKind::not_expansive, "matrix powers do not contract within 64 steps");
}

} // namespace aifs
