#include "mfslice/exact_linalg.hpp"

namespace mfslice {

namespace {

Integer row_denominator_lcm(const Matrix<GaussianRational>& m, std::size_t i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const auto& z = m(i, j);
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.real().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.imag().get_den_mpz_t());
    }
    return l;
}

Integer scaled_integer(const Rational& q, const Integer& scale) {
    Integer out = scale;
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), q.get_den_mpz_t());
    return out * q.get_num();
}

GaussianRational to_rational(const GaussianInteger& z) { return {Rational(z.re), Rational(z.im)}; }

}  // namespace

FractionFreeEchelon fraction_free_echelon(const Matrix<GaussianRational>& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<GaussianInteger>> a(rows, std::vector<GaussianInteger>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        const Integer l = row_denominator_lcm(m, i);
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = {scaled_integer(m(i, j).real(), l), scaled_integer(m(i, j).imag(), l)};
    }

    FractionFreeEchelon out;
    out.cols = cols;
    GaussianInteger prev{1, 0};
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && a[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const GaussianInteger pivot = a[r][col];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const GaussianInteger lead = a[i][col];
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = exact_divide(pivot * a[i][j] - lead * a[r][j], prev);
            a[i][col] = {};
        }
        prev = pivot;
        out.pivot_columns.push_back(col);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

std::size_t exact_rank(const Matrix<GaussianRational>& m) { return fraction_free_echelon(m).rank(); }

std::vector<ExactElement> exact_kernel(const Matrix<GaussianRational>& m) {
    const FractionFreeEchelon e = fraction_free_echelon(m);
    std::vector<bool> is_pivot(e.cols, false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;

    std::vector<ExactElement> basis;
    for (std::size_t free = 0; free < e.cols; ++free) {
        if (is_pivot[free]) continue;
        ExactElement x(e.cols);
        x[free] = GaussianRational(1);
        for (std::size_t k = e.rank(); k-- > 0;) {
            const std::size_t p = e.pivot_columns[k];
            GaussianRational s;
            for (std::size_t j = p + 1; j < e.cols; ++j)
                if (!x[j].is_zero() && !e.rows[k][j].is_zero()) s += to_rational(e.rows[k][j]) * x[j];
            x[p] = -s / to_rational(e.rows[k][p]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<ExactElement> exact_row_space(const Matrix<GaussianRational>& m) {
    const FractionFreeEchelon e = fraction_free_echelon(m);
    std::vector<ExactElement> basis;
    basis.reserve(e.rank());
    for (const auto& row : e.rows) {
        ExactElement v;
        v.reserve(row.size());
        for (const auto& z : row) v.push_back(to_rational(z));
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix<GaussianRational> to_exact(const Matrix<Rational>& m) {
    Matrix<GaussianRational> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = GaussianRational(m(i, j));
    return out;
}

}  // namespace mfslice
