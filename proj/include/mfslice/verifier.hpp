#ifndef MFSLICE_VERIFIER_HPP
#define MFSLICE_VERIFIER_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mfslice/liealg.hpp"
#include "mfslice/shift.hpp"
#include "mfslice/slodowy.hpp"

namespace mfslice {

enum class SampleKind { Semisimple, Nilpotent, Mixed };

SampleKind parse_sample_kind(std::string_view s);
std::string to_string(SampleKind kind);

enum class ArithmeticMode { Float, Exact };

ArithmeticMode parse_mode(std::string_view s);
std::string to_string(ArithmeticMode mode);

/*
 * Regular elements of three kinds:
 *   semisimple  random Cartan element with no vanishing root value
 *   nilpotent   principal nilpotent xi conjugated by a random group element
 *   mixed       Gaussian element, resampled until regular
 * Throws ConfigError after 100 rejected draws.
 */
Element regular_sample(const LieAlgebra& L, SampleKind kind, std::uint64_t seed,
                       double tolerance = kDefaultTolerance);

/// Rational counterpart: small integer coordinates, exact regularity, and
/// exact conjugation by unipotent elements for the nilpotent kind.
ExactElement exact_regular_sample(const LieAlgebra& L, SampleKind kind, std::uint64_t seed);

/// Pairing matrix kappa(grad g_k(x), t_m) between generator gradients and
/// an orthonormal basis of T_x O, rows normalized by |d g_k(x)|.
Eigen::MatrixXcd restricted_pairing(const MFFamily& family, const Element& x, double tolerance = kDefaultTolerance);

/// Dimension of d_x(F_a|_O): numerical rank of restricted_pairing.
std::size_t restricted_rank(const MFFamily& family, const Element& x, double tolerance = kDefaultTolerance);
/// Same quantity by fraction-free elimination over the rationals.
std::size_t restricted_rank(const ExactMFFamily& family, const ExactElement& x);

struct AnnihilatorCheck {
    double residual = 0.0;  // max_{i,m} |kappa(grad f_i(x), t_m)| / max(1, |d f_i(x)|)
    std::size_t gradient_rank = 0;
};

AnnihilatorCheck annihilator_check(const InvariantSystem& invariants, const Element& x,
                                   double tolerance = kDefaultTolerance);

struct TrialResult {
    std::size_t rank = 0;
    std::size_t expected = 0;
    std::size_t ambient_rank = 0;
    std::size_t gradient_rank = 0;
    double drift = 0.0;
    double annihilator_residual = 0.0;
    double invariant_rows = 0.0;  // largest entry of the rows belonging to f_i0
    std::string digest;
    bool degenerate = false;  // orbit through the shift vector itself
    std::size_t resampled = 0;
};

struct RankReport {
    TypeLabel type = TypeLabel::A;
    std::size_t rank = 0;  // rank of the algebra
    std::size_t n = 0;
    std::size_t ell = 0;
    SampleKind shift_kind = SampleKind::Mixed;
    SampleKind orbit_kind = SampleKind::Mixed;
    ArithmeticMode mode = ArithmeticMode::Float;
    std::uint64_t seed = 0;
    std::size_t requested_trials = 0;
    double tolerance = kDefaultTolerance;
    std::vector<Complex> orbit_invariants;
    std::vector<TrialResult> trials;
    std::size_t resampled = 0;
    bool passed = false;
    double elapsed_ms = 0.0;

    std::size_t expected_rank() const { return (n - rank) / 2; }
};

struct CampaignOptions {
    double tolerance = kDefaultTolerance;
    std::size_t threads = 1;  // 0 = hardware concurrency
    bool include_degenerate = true;
};

/// Samples a and a base point, pushes the base point around its orbit, and
/// records the restricted rank at each trial point. Passes iff every trial
/// reaches (n - r) / 2.
RankReport verify_completeness(std::shared_ptr<const LieAlgebra> L, SampleKind shift_kind, SampleKind orbit_kind,
                               std::size_t trials, std::uint64_t seed, const CampaignOptions& options = {});

/// Exact-arithmetic campaign: rational shift and base point, orbit points by
/// exact unipotent conjugation, ranks by fraction-free elimination.
RankReport verify_completeness_exact(std::shared_ptr<const LieAlgebra> L, SampleKind shift_kind,
                                     SampleKind orbit_kind, std::size_t trials, std::uint64_t seed,
                                     const CampaignOptions& options = {});

struct SingularProbeReport {
    std::size_t singular_tested = 0;
    std::size_t singular_deficient = 0;
    std::size_t random_tested = 0;
    std::size_t random_full = 0;
    std::size_t ell = 0;
    bool passed = false;  // all singular points deficient, >= 95% of random points full rank
};

/// Points z + lambda a with z semisimple and singular (one root value forced
/// to zero, then conjugated); lambda = 0 plus random values.
SingularProbeReport probe_singular_inclusion(const MFFamily& family, std::size_t samples, std::uint64_t seed,
                                             std::size_t random_samples = 100,
                                             double tolerance = kDefaultTolerance);

struct SliceRegularityReport {
    std::size_t samples = 0;
    std::size_t regular = 0;
    bool passed = false;
};

/// Samples xi + b with b random in b_+ (the first sample uses b = 0).
SliceRegularityReport probe_slice_regularity(const LieAlgebra& L, const Sl2Triple& triple, std::size_t samples,
                                             std::uint64_t seed, double tolerance = kDefaultTolerance);

/// Exact structural facts about the principal triple and its slice.
struct StructuralCheck {
    std::string label;
    bool triple_relations = false;   // [h,xi] = 2xi, [h,eta] = -2eta, [xi,eta] = h
    bool simple_values = false;      // alpha(h) = -2 on simple roots
    bool coefficients_positive = false;
    std::size_t kernel_dim = 0;      // dim ker(ad_eta)
    bool kernel_in_borel = false;
    bool grading = false;            // ad_h_eigen_check
    std::size_t degree_sum = 0;
    std::size_t half_n_plus_r = 0;
    std::string error;               // construction failure, if any
    bool passed = false;
};

StructuralCheck structural_check(std::shared_ptr<const LieAlgebra> L);

/// Hex digest of the coordinate bytes, used to identify trial points in reports.
std::string digest(const Element& x);
std::string digest(const ExactElement& x);

}  // namespace mfslice

#endif  // MFSLICE_VERIFIER_HPP
