#ifndef MFSLICE_SHIFT_HPP
#define MFSLICE_SHIFT_HPP

#include <cstddef>
#include <vector>

#include "mfslice/invariants.hpp"
#include "mfslice/numeric.hpp"
#include "mfslice/scalar.hpp"

namespace mfslice {

/// Generator f_{ij}: coefficient of lambda^j in f_i(x + lambda a).
struct GeneratorIndex {
    std::size_t invariant;
    std::size_t power;
};

/*
 * Argument-shift family of a regular element a.
 *
 * f_i(x + lambda a) = sum_{j < d_i} f_ij(x) lambda^j + f_i(a) lambda^{d_i}.
 * Coefficients are recovered by sampling lambda = 0, 1, ..., d_i - 1 and
 * solving the Vandermonde system after subtracting the leading term, so the
 * exact instantiation stays exact. Gradients go through the same solve,
 * coordinate by coordinate, since grad_x f_i(x + lambda a) = (grad f_i)(x + lambda a).
 */
template <class S>
class BasicMFFamily {
public:
    /// Throws DomainError unless a is regular (exactly, or at `tolerance` in float mode).
    BasicMFFamily(InvariantSystem invariants, Coords<S> shift, double tolerance = kDefaultTolerance);

    const InvariantSystem& invariants() const { return invariants_; }
    const LieAlgebra& algebra() const { return invariants_.algebra(); }
    const Coords<S>& shift() const { return shift_; }
    std::size_t ell() const { return generators_.size(); }
    const std::vector<GeneratorIndex>& generators() const { return generators_; }
    /// Position of f_{ij} in generators().
    std::size_t generator_position(std::size_t i, std::size_t j) const;

    S eval(std::size_t i, std::size_t j, const Coords<S>& x) const;
    std::vector<S> eval_all(const Coords<S>& x) const;

    Coords<S> gradient(std::size_t i, std::size_t j, const Coords<S>& x) const;
    Coords<S> differential(std::size_t i, std::size_t j, const Coords<S>& x) const;

    /// One covector per generator, in generators() order.
    std::vector<Coords<S>> differentials(const Coords<S>& x) const;
    std::vector<Coords<S>> gradients(const Coords<S>& x) const;

private:
    Coords<S> shifted(const Coords<S>& x, long lambda) const;
    std::vector<Coords<S>> node_differentials(std::size_t i, const Coords<S>& x) const;

    InvariantSystem invariants_;
    Coords<S> shift_;
    std::vector<S> shift_values_;  // f_i(a)
    std::vector<GeneratorIndex> generators_;
    std::vector<std::size_t> offsets_;
};

using MFFamily = BasicMFFamily<Complex>;
using ExactMFFamily = BasicMFFamily<GaussianRational>;

/// Inverse of the Vandermonde matrix V(l, j) = l^j at nodes l = 0..d-1.
const Matrix<Rational>& vandermonde_inverse(int d);

inline MFFamily mf_family(const InvariantSystem& s, const Element& a, double tolerance = kDefaultTolerance) {
    return MFFamily(s, a, tolerance);
}
inline ExactMFFamily mf_family(const InvariantSystem& s, const ExactElement& a) { return ExactMFFamily(s, a); }

template <class S>
S eval_mf(const BasicMFFamily<S>& f, std::size_t i, std::size_t j, const Coords<S>& x) {
    return f.eval(i, j, x);
}

template <class S>
Coords<S> mf_gradient(const BasicMFFamily<S>& f, std::size_t i, std::size_t j, const Coords<S>& x) {
    return f.gradient(i, j, x);
}

/// Numerical rank of the ell x n matrix of generator gradients at x. Rows
/// are normalized before the rank decision (floored threshold).
std::size_t ambient_rank(const MFFamily& family, const Element& x, double tolerance = kDefaultTolerance);
std::size_t ambient_rank(const ExactMFFamily& family, const ExactElement& x);

}  // namespace mfslice

#endif  // MFSLICE_SHIFT_HPP
