#include "mfslice/shift.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "mfslice/error.hpp"
#include "mfslice/exact_linalg.hpp"

namespace mfslice {

namespace {
constexpr double kRowNormFloor = 1e-6;
}

const Matrix<Rational>& vandermonde_inverse(int d) {
    static std::mutex mu;
    static std::map<int, Matrix<Rational>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    Matrix<Rational> v(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) {
        Rational p = 1;
        for (int j = 0; j < d; ++j) {
            v(static_cast<std::size_t>(l), static_cast<std::size_t>(j)) = p;
            p *= l;
        }
    }
    return cache.emplace(d, exact_inverse(v)).first->second;
}

namespace {

template <class S>
bool shift_is_regular(const LieAlgebra& L, const Coords<S>& a, double tolerance) {
    if constexpr (ScalarTraits<S>::exact) {
        (void)tolerance;
        return is_regular(L, a);
    } else {
        return is_regular(L, a, tolerance);
    }
}

template <class S>
S pow_int(long base, int e) {
    Rational p = 1;
    for (int k = 0; k < e; ++k) p *= base;
    return ScalarTraits<S>::from_rational(p);
}

}  // namespace

template <class S>
BasicMFFamily<S>::BasicMFFamily(InvariantSystem invariants, Coords<S> shift, double tolerance)
    : invariants_(std::move(invariants)), shift_(std::move(shift)) {
    if (shift_.size() != algebra().dim()) throw std::invalid_argument("mf_family: shift has wrong length");
    if (!shift_is_regular(algebra(), shift_, tolerance))
        throw DomainError("mf_family: shift vector is not regular");
    shift_values_ = invariants_.eval_all(shift_);
    for (std::size_t i = 0; i < invariants_.count(); ++i) {
        offsets_.push_back(generators_.size());
        for (int j = 0; j < invariants_.degree(i); ++j) generators_.push_back({i, static_cast<std::size_t>(j)});
    }
}

template <class S>
std::size_t BasicMFFamily<S>::generator_position(std::size_t i, std::size_t j) const {
    if (i >= invariants_.count() || j >= static_cast<std::size_t>(invariants_.degree(i)))
        throw std::out_of_range("generator index out of range");
    return offsets_[i] + j;
}

template <class S>
Coords<S> BasicMFFamily<S>::shifted(const Coords<S>& x, long lambda) const {
    Coords<S> y = x;
    if (lambda == 0) return y;
    const S l = ScalarTraits<S>::from_int(lambda);
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += l * shift_[k];
    return y;
}

template <class S>
S BasicMFFamily<S>::eval(std::size_t i, std::size_t j, const Coords<S>& x) const {
    generator_position(i, j);
    const int d = invariants_.degree(i);
    const auto& vinv = vandermonde_inverse(d);
    S out(0);
    for (int l = 0; l < d; ++l) {
        const S g = invariants_.eval(i, shifted(x, l)) - shift_values_[i] * pow_int<S>(l, d);
        out += ScalarTraits<S>::from_rational(vinv(j, static_cast<std::size_t>(l))) * g;
    }
    return out;
}

template <class S>
std::vector<S> BasicMFFamily<S>::eval_all(const Coords<S>& x) const {
    std::vector<S> out;
    out.reserve(ell());
    for (const auto& g : generators_) out.push_back(eval(g.invariant, g.power, x));
    return out;
}

template <class S>
std::vector<Coords<S>> BasicMFFamily<S>::node_differentials(std::size_t i, const Coords<S>& x) const {
    const int d = invariants_.degree(i);
    std::vector<Coords<S>> nodes;
    for (int l = 0; l < d; ++l) nodes.push_back(invariants_.differential(i, shifted(x, l)));
    return nodes;
}

template <class S>
Coords<S> BasicMFFamily<S>::differential(std::size_t i, std::size_t j, const Coords<S>& x) const {
    generator_position(i, j);
    const auto nodes = node_differentials(i, x);
    const auto& vinv = vandermonde_inverse(invariants_.degree(i));
    Coords<S> out(x.size(), S(0));
    for (std::size_t l = 0; l < nodes.size(); ++l) {
        const S w = ScalarTraits<S>::from_rational(vinv(j, l));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += w * nodes[l][k];
    }
    return out;
}

template <class S>
Coords<S> BasicMFFamily<S>::gradient(std::size_t i, std::size_t j, const Coords<S>& x) const {
    return algebra().raise(differential(i, j, x));
}

template <class S>
std::vector<Coords<S>> BasicMFFamily<S>::differentials(const Coords<S>& x) const {
    std::vector<Coords<S>> out;
    out.reserve(ell());
    for (std::size_t i = 0; i < invariants_.count(); ++i) {
        const auto nodes = node_differentials(i, x);
        const auto& vinv = vandermonde_inverse(invariants_.degree(i));
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            Coords<S> row(x.size(), S(0));
            for (std::size_t l = 0; l < nodes.size(); ++l) {
                const S w = ScalarTraits<S>::from_rational(vinv(j, l));
                for (std::size_t k = 0; k < row.size(); ++k) row[k] += w * nodes[l][k];
            }
            out.push_back(std::move(row));
        }
    }
    return out;
}

template <class S>
std::vector<Coords<S>> BasicMFFamily<S>::gradients(const Coords<S>& x) const {
    auto out = differentials(x);
    for (auto& row : out) row = algebra().raise(row);
    return out;
}

template class BasicMFFamily<Complex>;
template class BasicMFFamily<GaussianRational>;

std::size_t ambient_rank(const MFFamily& family, const Element& x, double tolerance) {
    const auto grads = family.gradients(x);
    std::vector<double> norms;
    double largest = 0.0;
    for (const auto& g : grads) {
        norms.push_back(norm(g));
        largest = std::max(largest, norms.back());
    }
    // Rows far below the largest are scaled as if they had the floor norm, so
    // roundoff in a vanishing gradient is not inflated to unit size.
    for (auto& v : norms) v = std::max(v, kRowNormFloor * largest);
    const Eigen::MatrixXcd m = equilibrate_rows(rows_to_eigen(grads, x.size()), norms);
    return numerical_rank(m, tolerance, RankScale::Floored);
}

std::size_t ambient_rank(const ExactMFFamily& family, const ExactElement& x) {
    const auto grads = family.gradients(x);
    Matrix<GaussianRational> m(grads.size(), x.size());
    for (std::size_t i = 0; i < grads.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) m(i, j) = grads[i][j];
    return exact_rank(m);
}

}  // namespace mfslice
