#ifndef MFSLICE_MATRIX_HPP
#define MFSLICE_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mfslice/scalar.hpp"

namespace mfslice {

/// Small dense row-major matrix over an arbitrary field-like scalar.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    Matrix& operator*=(const T& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const {
        T s(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
        return s;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Sparse square matrix with rational entries; basis matrices of the realizations have at most a few
/// nonzeros.
struct SparseEntry {
    std::size_t row;
    std::size_t col;
    Rational value;
};

struct SparseMatrix {
    std::size_t size = 0;
    std::vector<SparseEntry> entries;

    template <class S>
    Matrix<S> dense() const {
        Matrix<S> m(size, size);
        for (const auto& e : entries) m(e.row, e.col) += ScalarTraits<S>::from_rational(e.value);
        return m;
    }

    /// Entry at (row, col), zero if absent.
    Rational at(std::size_t row, std::size_t col) const;
    bool empty() const { return entries.empty(); }
};

SparseMatrix sparse_product(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix sparse_commutator(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix sparse_scaled(SparseMatrix m, const Rational& factor);

}  // namespace mfslice

#endif  // MFSLICE_MATRIX_HPP
