#include "mfslice/numeric.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace mfslice {

Eigen::MatrixXcd to_eigen(const Matrix<Complex>& m) {
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
    return out;
}

Matrix<Complex> from_eigen(const Eigen::MatrixXcd& m) {
    Matrix<Complex> out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return out;
}

Eigen::MatrixXcd rows_to_eigen(const std::vector<Element>& rows, std::size_t cols) {
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return out;
}

std::vector<double> singular_values(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return {};
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

std::size_t numerical_rank(const Eigen::MatrixXcd& m, double tolerance, RankScale scale) {
    const auto s = singular_values(m);
    if (s.empty()) return 0;
    const double top = s.front();
    const double threshold = tolerance * (scale == RankScale::Floored ? std::max(1.0, top) : top);
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double v) { return v > threshold; }));
}

Eigen::MatrixXcd equilibrate_rows(Eigen::MatrixXcd m, const std::vector<double>& reference_norms) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const double ref = reference_norms[static_cast<std::size_t>(i)];
        if (ref > 0.0) m.row(i) /= ref;
    }
    return m;
}

Eigen::MatrixXcd column_space(const Eigen::MatrixXcd& m, double tolerance) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU);
    const auto& s = svd.singularValues();
    Eigen::Index keep = 0;
    if (s.size() > 0 && s(0) > 0.0)
        while (keep < s.size() && s(keep) > tolerance * s(0)) ++keep;
    return svd.matrixU().leftCols(keep);
}

Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& m) { return m.exp(); }

double norm(const Element& x) {
    double s = 0.0;
    for (const auto& z : x) s += std::norm(z);
    return std::sqrt(s);
}

}  // namespace mfslice
