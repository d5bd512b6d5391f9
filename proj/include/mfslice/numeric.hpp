#ifndef MFSLICE_NUMERIC_HPP
#define MFSLICE_NUMERIC_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "mfslice/matrix.hpp"
#include "mfslice/scalar.hpp"

namespace mfslice {

/// How the rank threshold scales with the largest singular value.
enum class RankScale {
    Relative,  // sigma <= tol * sigma_max counts as zero
    Floored,   // sigma <= tol * max(1, sigma_max) counts as zero
};

inline constexpr double kDefaultTolerance = 1e-8;

Eigen::MatrixXcd to_eigen(const Matrix<Complex>& m);
Matrix<Complex> from_eigen(const Eigen::MatrixXcd& m);

/// Matrix whose rows are the given vectors.
Eigen::MatrixXcd rows_to_eigen(const std::vector<Element>& rows, std::size_t cols);

std::vector<double> singular_values(const Eigen::MatrixXcd& m);

std::size_t numerical_rank(const Eigen::MatrixXcd& m, double tolerance, RankScale scale);

/// Divide row i by reference_norms[i] (skipped when that norm is zero).
Eigen::MatrixXcd equilibrate_rows(Eigen::MatrixXcd m, const std::vector<double>& reference_norms);

/// Orthonormal basis of the column space: left singular vectors whose
/// singular value exceeds tol * sigma_max.
Eigen::MatrixXcd column_space(const Eigen::MatrixXcd& m, double tolerance);

/// exp(m) by Pade scaling and squaring.
Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& m);

double norm(const Element& x);

}  // namespace mfslice

#endif  // MFSLICE_NUMERIC_HPP
