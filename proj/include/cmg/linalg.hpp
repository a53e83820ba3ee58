#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cmg/numeric.hpp"

namespace cmg {

// Dense row-major matrix. Sizes here are desk scale, no sparsity.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::vector<T> row_sums() const {
        std::vector<T> out(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j);
        return out;
    }

    // y = A^T x
    std::vector<T> transpose_apply(const std::vector<T>& x) const {
        std::vector<T> y(cols_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[j] += (*this)(i, j) * x[i];
        return y;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

// Solves A x = b by Gaussian elimination with partial pivoting. Pivoting by
// magnitude is sound for both backends; for rationals any nonzero pivot is
// exact but picking the largest keeps entry growth moderate.
template <class T>
std::vector<T> solve_dense(Matrix<T> a, std::vector<T> b) {
    using std::abs;
    using boost::multiprecision::abs;

    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw internal_error("solve_dense: shape mismatch");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(a(r, col)) > abs(a(pivot, col))) pivot = r;
        if (a(pivot, col) == T(0)) throw internal_error("solve_dense: singular system");
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == T(0)) continue;
            T factor = a(r, col) / a(col, col);
            a(r, col) = T(0);
            for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= factor * a(col, j);
            b[r] -= factor * b[col];
        }
    }
    std::vector<T> x(n, T(0));
    for (std::size_t i = n; i-- > 0;) {
        T acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

}  // namespace cmg
