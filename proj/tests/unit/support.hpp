#ifndef MFSLICE_TEST_SUPPORT_HPP
#define MFSLICE_TEST_SUPPORT_HPP

#include <cmath>
#include <functional>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "mfslice/liealg.hpp"
#include "mfslice/random.hpp"

namespace mfslice::fixtures {

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Canonicalized p/q (the two-argument mpq_class constructor does not reduce).
inline Rational frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline AlgebraPtr algebra(TypeLabel type, std::size_t rank) { return LieAlgebra::build(type, rank); }

struct Case {
    TypeLabel type;
    std::size_t rank;
};

// The algebras every property is swept over.
inline const std::vector<Case>& supported_cases() {
    static const std::vector<Case> cases{{TypeLabel::A, 1}, {TypeLabel::A, 2}, {TypeLabel::A, 3}, {TypeLabel::A, 4},
                                         {TypeLabel::B, 2}, {TypeLabel::B, 3}, {TypeLabel::C, 2}, {TypeLabel::C, 3}};
    return cases;
}

inline void PrintTo(const Case& c, std::ostream* os) { *os << type_char(c.type) << c.rank; }

inline std::string case_name(const ::testing::TestParamInfo<Case>& info) {
    return std::string(1, type_char(info.param.type)) + std::to_string(info.param.rank);
}

/// Element with the given defining matrix (entries given row by row).
inline ExactElement exact_from_rows(const LieAlgebra& L, std::initializer_list<std::initializer_list<long>> rows) {
    Matrix<GaussianRational> m(L.defining_dim(), L.defining_dim());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = GaussianRational(v);
        ++i;
    }
    double residual = 0.0;
    ExactElement x = L.from_matrix(m, &residual);
    if (residual != 0.0) throw std::invalid_argument("matrix is not in the algebra");
    return x;
}

inline Element float_from_rows(const LieAlgebra& L, std::initializer_list<std::initializer_list<long>> rows) {
    return to_float(exact_from_rows(L, rows));
}

inline double max_abs(const Element& x) {
    double m = 0.0;
    for (const auto& v : x) m = std::max(m, std::abs(v));
    return m;
}

inline double distance(const Element& x, const Element& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

inline Element axpy(Complex s, const Element& v, Element x) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += s * v[i];
    return x;
}

/// d/dt f(x + t v) at t = 0 by a central difference.
inline Complex central_difference(const std::function<Complex(const Element&)>& f, const Element& x, const Element& v,
                                  double step = 1e-5) {
    return (f(axpy(step, v, x)) - f(axpy(-step, v, x))) / (2.0 * step);
}

/// Relative disagreement between a covector and central differences along
/// every basis direction: max_j |d_j - fd_j| / max(1, max_j |d_j|).
inline double fd_mismatch(const std::function<Complex(const Element&)>& f, const Element& x, const Element& covector) {
    double worst = 0.0;
    double scale = 1.0;
    for (const auto& c : covector) scale = std::max(scale, std::abs(c));
    for (std::size_t j = 0; j < x.size(); ++j) {
        Element e(x.size(), Complex(0));
        e[j] = 1.0;
        worst = std::max(worst, std::abs(central_difference(f, x, e) - covector[j]));
    }
    return worst / scale;
}

/// Killing pairing written out from the Killing matrix, independent of killing().
inline Complex killing_pairing(const LieAlgebra& L, const Element& x, const Element& y) {
    Complex s = 0;
    const auto& K = L.killing_matrix();
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            if (sgn(K(i, j)) != 0) s += x[i] * K(i, j).get_d() * y[j];
    return s;
}

}  // namespace mfslice::fixtures

#endif  // MFSLICE_TEST_SUPPORT_HPP
