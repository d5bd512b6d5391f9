#include "mfslice/invariants.hpp"

#include <numeric>
#include <stdexcept>

#include "mfslice/error.hpp"

namespace mfslice {

namespace {

template <class S>
Matrix<S> power(const Matrix<S>& x, int k) {
    Matrix<S> p = Matrix<S>::identity(x.rows());
    for (int i = 0; i < k; ++i) p = p * x;
    return p;
}

}  // namespace

InvariantSystem::InvariantSystem(std::shared_ptr<const LieAlgebra> algebra) : algebra_(std::move(algebra)) {
    if (!algebra_) throw std::invalid_argument("InvariantSystem: null algebra");
    const auto r = static_cast<int>(algebra_->rank());
    switch (algebra_->type()) {
        case TypeLabel::A:
            for (int k = 2; k <= r + 1; ++k) degrees_.push_back(k);
            break;
        case TypeLabel::B:
        case TypeLabel::C:
            for (int k = 1; k <= r; ++k) degrees_.push_back(2 * k);
            break;
    }
    ell_ = static_cast<std::size_t>(std::accumulate(degrees_.begin(), degrees_.end(), 0));
    if (2 * ell_ != algebra_->dim() + algebra_->rank())
        throw ConstructionError("invariant degrees do not sum to (n + r) / 2");
}

InvariantSystem fundamental_invariants(std::shared_ptr<const LieAlgebra> algebra) {
    return InvariantSystem(std::move(algebra));
}

int InvariantSystem::degree(std::size_t i) const {
    if (i >= degrees_.size()) throw std::out_of_range("invariant index out of range");
    return degrees_[i];
}

template <class S>
S InvariantSystem::eval(std::size_t i, const Coords<S>& x) const {
    const int d = degree(i);
    return power(algebra_->to_matrix(x), d).trace();
}

template <class S>
std::vector<S> InvariantSystem::eval_all(const Coords<S>& x) const {
    const Matrix<S> X = algebra_->to_matrix(x);
    std::vector<S> out;
    Matrix<S> p = X;
    int current = 1;
    for (int d : degrees_) {
        for (; current < d; ++current) p = p * X;
        out.push_back(p.trace());
    }
    return out;
}

template <class S>
Coords<S> InvariantSystem::differential_from_power(int degree, const Matrix<S>& power_dm1) const {
    const auto& mats = algebra_->basis_matrices();
    const S scale = ScalarTraits<S>::from_int(degree);
    Coords<S> out(mats.size(), S(0));
    for (std::size_t j = 0; j < mats.size(); ++j) {
        S s(0);
        for (const auto& e : mats[j].entries) s += ScalarTraits<S>::from_rational(e.value) * power_dm1(e.col, e.row);
        out[j] = scale * s;
    }
    return out;
}

template <class S>
Coords<S> InvariantSystem::differential(std::size_t i, const Coords<S>& x) const {
    const int d = degree(i);
    return differential_from_power(d, power(algebra_->to_matrix(x), d - 1));
}

template <class S>
std::vector<Coords<S>> InvariantSystem::differentials(const Coords<S>& x) const {
    const Matrix<S> X = algebra_->to_matrix(x);
    std::vector<Coords<S>> out;
    Matrix<S> p = Matrix<S>::identity(X.rows());
    int current = 0;
    for (int d : degrees_) {
        for (; current < d - 1; ++current) p = p * X;
        out.push_back(differential_from_power(d, p));
    }
    return out;
}

template <class S>
Coords<S> InvariantSystem::gradient(std::size_t i, const Coords<S>& x) const {
    return algebra_->raise(differential(i, x));
}

template GaussianRational InvariantSystem::eval(std::size_t, const Coords<GaussianRational>&) const;
template Complex InvariantSystem::eval(std::size_t, const Coords<Complex>&) const;
template std::vector<GaussianRational> InvariantSystem::eval_all(const Coords<GaussianRational>&) const;
template std::vector<Complex> InvariantSystem::eval_all(const Coords<Complex>&) const;
template Coords<GaussianRational> InvariantSystem::differential(std::size_t, const Coords<GaussianRational>&) const;
template Coords<Complex> InvariantSystem::differential(std::size_t, const Coords<Complex>&) const;
template std::vector<Coords<GaussianRational>> InvariantSystem::differentials(const Coords<GaussianRational>&) const;
template std::vector<Coords<Complex>> InvariantSystem::differentials(const Coords<Complex>&) const;
template Coords<GaussianRational> InvariantSystem::gradient(std::size_t, const Coords<GaussianRational>&) const;
template Coords<Complex> InvariantSystem::gradient(std::size_t, const Coords<Complex>&) const;

}  // namespace mfslice
