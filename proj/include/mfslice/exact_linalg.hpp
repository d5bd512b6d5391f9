#ifndef MFSLICE_EXACT_LINALG_HPP
#define MFSLICE_EXACT_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mfslice/matrix.hpp"
#include "mfslice/scalar.hpp"

namespace mfslice {

/*
 * Fraction-free (Bareiss) row echelon form over Z[i].
 *
 * Each row of the input is first scaled by the lcm of its denominators, so the
 * elimination itself never leaves the Gaussian integers and every division is
 * exact (intermediate entries are minors of the scaled input). Rank, kernel and
 * row-space queries below are read off this form.
 */
struct FractionFreeEchelon {
    std::size_t cols = 0;
    std::vector<std::vector<GaussianInteger>> rows;  // nonzero rows only
    std::vector<std::size_t> pivot_columns;

    std::size_t rank() const { return pivot_columns.size(); }
};

FractionFreeEchelon fraction_free_echelon(const Matrix<GaussianRational>& m);

std::size_t exact_rank(const Matrix<GaussianRational>& m);

/// Basis of {v : m v = 0}, one vector per free column.
std::vector<ExactElement> exact_kernel(const Matrix<GaussianRational>& m);

/// Echelon basis of the row space of m.
std::vector<ExactElement> exact_row_space(const Matrix<GaussianRational>& m);

Matrix<GaussianRational> to_exact(const Matrix<Rational>& m);

namespace detail {
inline bool field_is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool field_is_zero(const GaussianRational& z) { return z.is_zero(); }
}  // namespace detail

/// Gauss-Jordan inverse over an exact field. Throws std::domain_error when singular.
template <class F>
Matrix<F> exact_inverse(Matrix<F> a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("exact_inverse: matrix is not square");
    Matrix<F> inv = Matrix<F>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && detail::field_is_zero(a(p, col))) ++p;
        if (p == n) throw std::domain_error("exact_inverse: singular matrix");
        if (p != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(col, j));
                std::swap(inv(p, j), inv(col, j));
            }
        const F pivot = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= pivot;
            inv(col, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || detail::field_is_zero(a(i, col))) continue;
            const F f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

template <class F>
std::vector<F> exact_solve(const Matrix<F>& a, const std::vector<F>& b) {
    const Matrix<F> inv = exact_inverse(a);
    std::vector<F> x(a.cols(), F(0));
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) x[i] += inv(i, j) * b[j];
    return x;
}

}  // namespace mfslice

#endif  // MFSLICE_EXACT_LINALG_HPP
