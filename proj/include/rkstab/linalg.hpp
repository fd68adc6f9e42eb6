#pragma once

/* Minimal dense matrix support shared by the exact and the numeric
 * pipelines. Gaussian elimination with magnitude pivoting; for exact
 * scalar types pivoting is only a growth heuristic, correctness comes
 * from exact arithmetic.
 */

#include "rkstab/rational.hpp"

#include <vector>

namespace rkstab {

template <typename T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw contract_violation("matrix product shape mismatch");
        Mat r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k) == T(0)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }

    std::vector<T> mul(const std::vector<T>& v) const {
        if (v.size() != cols_) throw contract_violation("matrix-vector shape mismatch");
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

/* Solves A X = B in place of a working copy; returns X. Throws on a
 * (numerically exact) singular pivot column. */
template <typename T>
Mat<T> solve(Mat<T> A, Mat<T> B) {
    using std::abs;
    using rkstab::abs;
    const std::size_t n = A.rows();
    if (A.cols() != n || B.rows() != n) throw contract_violation("solve: shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(A(piv, col)) < abs(A(r, col))) piv = r;
        if (A(piv, col) == T(0)) throw contract_violation("solve: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(A(col, j), A(piv, j));
            }
        if (piv != col)
            for (std::size_t j = 0; j < B.cols(); ++j) std::swap(B(col, j), B(piv, j));
        const T d = A(col, col);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || A(r, col) == T(0)) continue;
            const T f = A(r, col) / d;
            for (std::size_t j = col; j < n; ++j) A(r, j) -= f * A(col, j);
            for (std::size_t j = 0; j < B.cols(); ++j) B(r, j) -= f * B(col, j);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) B(i, j) = B(i, j) / A(i, i);
    return B;
}

template <typename T>
std::vector<T> solve_vec(const Mat<T>& A, const std::vector<T>& b) {
    Mat<T> B(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) B(i, 0) = b[i];
    Mat<T> X = solve(A, std::move(B));
    std::vector<T> x(A.rows());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = X(i, 0);
    return x;
}

/* Exact rank by elimination with any nonzero pivot. */
template <typename T>
std::size_t rank(Mat<T> A) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < A.cols() && r < A.rows(); ++col) {
        std::size_t piv = r;
        while (piv < A.rows() && A(piv, col) == T(0)) ++piv;
        if (piv == A.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(r, j), A(piv, j));
        for (std::size_t i = r + 1; i < A.rows(); ++i) {
            if (A(i, col) == T(0)) continue;
            const T f = A(i, col) / A(r, col);
            for (std::size_t j = col; j < A.cols(); ++j) A(i, j) -= f * A(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace rkstab
