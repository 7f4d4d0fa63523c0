#pragma once

#include <stdexcept>
#include <vector>

#include "ncsym/rational.hpp"

namespace ncsym {

// Dense exact matrix over an exact scalar (Integer or Rational). Row-major
// storage; only the handful of operations the library needs.
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<S> a_;
};

// Fraction-free Bareiss elimination; every division below is exact. Entry
// growth stays at the size of the minors, which is what makes the 64x64
// factorial matrices tractable.
inline Integer det_exact(Matrix<Integer> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: matrix must be square");
    const int n = m.rows();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            int p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

inline Rational det_exact(Matrix<Rational> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: matrix must be square");
    const int n = m.rows();
    Rational det = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            det = -det;
        }
        det *= m(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            const Rational f = m(i, k) / m(k, k);
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rref(Matrix<Rational>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
        const Rational inv = Rational(1) / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(Matrix<Rational> m) { return static_cast<int>(rref(m).size()); }

// Basis of the right null space { v : Mv = 0 }, one vector per free column,
// ordered by free-column index.
inline std::vector<std::vector<Rational>> kernel_basis(Matrix<Rational> m) {
    const std::vector<int> pivots = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace ncsym
