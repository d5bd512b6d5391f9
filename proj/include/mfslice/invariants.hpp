#ifndef MFSLICE_INVARIANTS_HPP
#define MFSLICE_INVARIANTS_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "mfslice/liealg.hpp"
#include "mfslice/scalar.hpp"

namespace mfslice {

/*
 * Fundamental invariants as trace powers p_k(x) = tr(X^k) in the defining
 * realization: k = 2..r+1 for type A, k = 2, 4, ..., 2r for types B and C.
 *
 * Indices are 0-based: invariant i has degree degrees()[i].
 */
class InvariantSystem {
public:
    explicit InvariantSystem(std::shared_ptr<const LieAlgebra> algebra);

    const LieAlgebra& algebra() const { return *algebra_; }
    const std::shared_ptr<const LieAlgebra>& algebra_ptr() const { return algebra_; }

    std::size_t count() const { return degrees_.size(); }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(std::size_t i) const;
    /// Sum of the degrees; equals (n + r) / 2.
    std::size_t ell() const { return ell_; }

    template <class S>
    S eval(std::size_t i, const Coords<S>& x) const;

    template <class S>
    std::vector<S> eval_all(const Coords<S>& x) const;

    /// Covector v -> d/dt f_i(x + t v) on the basis: d * tr(X^{d-1} B_j).
    template <class S>
    Coords<S> differential(std::size_t i, const Coords<S>& x) const;

    /// Killing-dual gradient: kappa(gradient(i, x), v) = d f_i(x)[v] for all v.
    template <class S>
    Coords<S> gradient(std::size_t i, const Coords<S>& x) const;

    template <class S>
    std::vector<Coords<S>> differentials(const Coords<S>& x) const;

private:
    template <class S>
    Coords<S> differential_from_power(int degree, const Matrix<S>& power) const;

    std::shared_ptr<const LieAlgebra> algebra_;
    std::vector<int> degrees_;
    std::size_t ell_ = 0;
};

InvariantSystem fundamental_invariants(std::shared_ptr<const LieAlgebra> algebra);

template <class S>
S eval_invariant(const InvariantSystem& system, std::size_t i, const Coords<S>& x) {
    return system.eval(i, x);
}

template <class S>
Coords<S> gradient(const InvariantSystem& system, std::size_t i, const Coords<S>& x) {
    return system.gradient(i, x);
}

}  // namespace mfslice

#endif  // MFSLICE_INVARIANTS_HPP
