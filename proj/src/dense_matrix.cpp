#include "trigcolloc/dense_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace trigcolloc {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> d) {
    DenseMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

double DenseMatrix::infinity_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < cols_; ++j)
            s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

double DenseMatrix::max_abs() const {
    double best = 0.0;
    for (double v : a_)
        best = std::max(best, std::abs(v));
    return best;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        a_[i] += other.a_[i];
    return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        a_[i] -= other.a_[i];
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(double s) {
    for (double& v : a_)
        v *= s;
    return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product: shape mismatch");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<double> operator*(const DenseMatrix& a, const std::vector<double>& v) {
    if (a.cols_ != v.size())
        throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<double> out(a.rows_, 0.0);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols_; ++j)
            s += a(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

DenseMatrix matrix_power(const DenseMatrix& a, unsigned p) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("matrix_power: matrix must be square");
    DenseMatrix r = DenseMatrix::identity(a.rows());
    for (unsigned i = 0; i < p; ++i)
        r = r * a;
    return r;
}

} // namespace trigcolloc
