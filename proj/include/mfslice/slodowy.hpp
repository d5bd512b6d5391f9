#ifndef MFSLICE_SLODOWY_HPP
#define MFSLICE_SLODOWY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mfslice/invariants.hpp"
#include "mfslice/liealg.hpp"
#include "mfslice/scalar.hpp"

namespace mfslice {

/// Principal sl2-triple built from the standard Borel pair.
struct Sl2Triple {
    ExactElement xi;   // sum of e_{-alpha} over simple alpha
    ExactElement h;    // alpha(h) = -2 on every simple root
    ExactElement eta;  // sum of c_alpha e_alpha
    std::vector<Rational> coefficients;  // c_alpha, with -h = sum c_alpha h_alpha
};

/// Solves alpha_i(h) = -2 over the coroot basis and assembles (xi, h, eta).
/// Every triple identity is re-checked exactly; a failure throws ConstructionError.
Sl2Triple principal_sl2(const LieAlgebra& L);

/// The affine slice xi + ker(ad_eta).
struct SlodowySlice {
    ExactElement base;
    // Homogeneous basis of ker(ad_eta) for the ad_h grading, first nonzero
    // coordinate normalized to 1, ordered by decreasing eigenvalue.
    std::vector<ExactElement> kernel_basis;
    std::vector<int> grades;  // ad_h eigenvalue of each kernel vector

    std::size_t dim() const { return kernel_basis.size(); }
    Element point(const std::vector<Complex>& t) const;
    ExactElement point(const std::vector<GaussianRational>& t) const;
};

/// Kernel of ad_eta by fraction-free elimination. Throws ConstructionError
/// if its dimension is not r or it leaves b_+.
SlodowySlice slodowy_slice(const LieAlgebra& L, const Sl2Triple& triple);

struct GradingCheck {
    bool passed = false;
    std::vector<int> borel_eigenvalues;   // ad_h on the b_+ basis, one per basis vector
    std::vector<int> kernel_eigenvalues;  // ad_h on ker(ad_eta), with multiplicity
    bool kernel_stable = false;           // ad_h maps ker(ad_eta) into itself
};

/// ad_h acts on b_+ and on ker(ad_eta) with non-positive eigenvalues (exact).
GradingCheck ad_h_eigen_check(const LieAlgebra& L, const Sl2Triple& triple, const SlodowySlice& slice);

struct NewtonOptions {
    std::size_t max_iterations = 100;
    std::size_t starts = 10;        // converged runs required for the uniqueness check
    std::size_t max_failures = 10;  // extra restarts allowed for diverging runs
    double residual_tolerance = 1e-10;
    double agreement_tolerance = 1e-8;
};

struct SliceIntersection {
    Element point;
    std::vector<Complex> parameters;  // t with point = xi + sum t_k w_k
    double residual = 0.0;            // max_i |f_i(s) - v_i| / max(1, |v_i|)
    double spread = 0.0;              // max over starts of |t - t_best|_inf / max(1, |t_best|_inf)
    std::size_t converged_starts = 0;
    std::size_t failed_starts = 0;
    std::size_t total_iterations = 0;
    bool unique = false;  // spread <= agreement tolerance
};

/// Newton iteration on t -> (f_i(xi + sum t_k w_k)) from seeded random starts.
SliceIntersection intersect_orbit(const InvariantSystem& invariants, const SlodowySlice& slice,
                                  const std::vector<Complex>& invariant_values, std::uint64_t seed,
                                  const NewtonOptions& options = {});

}  // namespace mfslice

#endif  // MFSLICE_SLODOWY_HPP
