#include "mfslice/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <exception>
#include <sstream>
#include <thread>

#include "mfslice/error.hpp"
#include "mfslice/exact_linalg.hpp"
#include "mfslice/random.hpp"

namespace mfslice {

namespace {

constexpr std::size_t kMaxDraws = 100;
constexpr double kDriftLimit = 1e-8;
constexpr double kRowNormFloor = 1e-6;

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

Element unit_gaussian(Rng& rng, std::size_t n) {
    Element y = rng.gaussian_element(n);
    const double s = norm(y);
    for (auto& v : y) v /= s;
    return y;
}

double relative_drift(const std::vector<Complex>& now, const std::vector<Complex>& base) {
    double worst = 0.0;
    for (std::size_t i = 0; i < now.size(); ++i)
        worst = std::max(worst, std::abs(now[i] - base[i]) / std::max(1.0, std::abs(base[i])));
    return worst;
}

template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    std::vector<std::exception_ptr> errors(count);
    auto body = [&](std::size_t i) {
        try {
            fn(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) body(i);
            });
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Eigen::MatrixXcd pairing(const std::vector<Element>& rows, const std::vector<Element>& tangent) {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(tangent.size()));
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t t = 0; t < tangent.size(); ++t) {
            Complex v = 0;
            for (std::size_t c = 0; c < rows[k].size(); ++c) v += rows[k][c] * tangent[t][c];
            m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(t)) = v;
        }
    return m;
}

std::vector<double> floored_norms(const std::vector<Element>& rows) {
    std::vector<double> norms;
    double largest = 0.0;
    for (const auto& r : rows) {
        norms.push_back(norm(r));
        largest = std::max(largest, norms.back());
    }
    for (auto& v : norms) v = std::max(v, kRowNormFloor * largest);
    return norms;
}

Matrix<GaussianRational> exact_pairing(const std::vector<ExactElement>& rows, const std::vector<ExactElement>& tangent) {
    Matrix<GaussianRational> m(rows.size(), tangent.size());
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t t = 0; t < tangent.size(); ++t) {
            GaussianRational v;
            for (std::size_t c = 0; c < rows[k].size(); ++c)
                if (!rows[k][c].is_zero() && !tangent[t][c].is_zero()) v += rows[k][c] * tangent[t][c];
            m(k, t) = v;
        }
    return m;
}

}  // namespace

SampleKind parse_sample_kind(std::string_view s) {
    const std::string v = lower(s);
    if (v == "semisimple") return SampleKind::Semisimple;
    if (v == "nilpotent") return SampleKind::Nilpotent;
    if (v == "mixed") return SampleKind::Mixed;
    throw ConfigError("unknown sample kind '" + std::string(s) + "' (semisimple, nilpotent, mixed)");
}

std::string to_string(SampleKind kind) {
    switch (kind) {
        case SampleKind::Semisimple: return "semisimple";
        case SampleKind::Nilpotent: return "nilpotent";
        case SampleKind::Mixed: return "mixed";
    }
    return "?";
}

ArithmeticMode parse_mode(std::string_view s) {
    const std::string v = lower(s);
    if (v == "float") return ArithmeticMode::Float;
    if (v == "exact") return ArithmeticMode::Exact;
    throw ConfigError("unknown mode '" + std::string(s) + "' (float, exact)");
}

std::string to_string(ArithmeticMode mode) { return mode == ArithmeticMode::Exact ? "exact" : "float"; }

std::string digest(const Element& x) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& z : x) {
        const double parts[2] = {z.real(), z.imag()};
        h = fnv1a(parts, sizeof parts, h);
    }
    return hex(h);
}

std::string digest(const ExactElement& x) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& z : x) {
        const std::string s = z.str() + ";";
        h = fnv1a(s.data(), s.size(), h);
    }
    return hex(h);
}

Element regular_sample(const LieAlgebra& L, SampleKind kind, std::uint64_t seed, double tolerance) {
    Rng rng(seed);
    const auto& basis = L.chevalley();
    Element xi;
    if (kind == SampleKind::Nilpotent) xi = to_float(principal_sl2(L).xi);

    for (std::size_t draw = 0; draw < kMaxDraws; ++draw) {
        Element x(L.dim(), Complex(0));
        switch (kind) {
            case SampleKind::Semisimple: {
                for (auto c : basis.cartan_basis) x[c] = rng.complex_gaussian();
                double smallest = INFINITY;
                for (std::size_t a = 0; a < L.root_system().roots.size(); ++a)
                    smallest = std::min(smallest, std::abs(L.root_value(a, x)));
                if (smallest < 1e-6) continue;
                break;
            }
            case SampleKind::Nilpotent: x = orbit_push(L, xi, unit_gaussian(rng, L.dim())); break;
            case SampleKind::Mixed: x = rng.gaussian_element(L.dim()); break;
        }
        if (is_regular(L, x, tolerance)) return x;
    }
    throw ConfigError("regular_sample: " + std::to_string(kMaxDraws) +
                      " consecutive draws were not regular; check seed and tolerance");
}

ExactElement exact_regular_sample(const LieAlgebra& L, SampleKind kind, std::uint64_t seed) {
    Rng rng(seed);
    const auto& basis = L.chevalley();
    const std::size_t roots = L.root_system().roots.size();
    ExactElement xi;
    if (kind == SampleKind::Nilpotent) xi = principal_sl2(L).xi;

    for (std::size_t draw = 0; draw < kMaxDraws; ++draw) {
        ExactElement x(L.dim());
        switch (kind) {
            case SampleKind::Semisimple: {
                for (auto c : basis.cartan_basis) x[c] = GaussianRational(rng.integer(-4, 4));
                bool distinct = true;
                for (std::size_t a = 0; a < roots && distinct; ++a) distinct = !L.root_value(a, x).is_zero();
                if (!distinct) continue;
                break;
            }
            case SampleKind::Nilpotent: {
                x = xi;
                for (int k = 0; k < 3; ++k) {
                    const auto root = static_cast<std::size_t>(rng.integer(0, static_cast<long>(roots) - 1));
                    long t = rng.integer(-2, 1);
                    if (t >= 0) ++t;
                    x = unipotent_push(L, x, root, Rational(t));
                }
                break;
            }
            case SampleKind::Mixed:
                for (auto& v : x) v = GaussianRational(rng.integer(-2, 2));
                break;
        }
        if (is_regular(L, x)) return x;
    }
    throw ConfigError("exact_regular_sample: " + std::to_string(kMaxDraws) + " consecutive draws were not regular");
}

Eigen::MatrixXcd restricted_pairing(const MFFamily& family, const Element& x, double tolerance) {
    const std::vector<Element> tangent = tangent_basis(family.algebra(), x, tolerance);
    const std::vector<Element> rows = family.differentials(x);
    return equilibrate_rows(pairing(rows, tangent), floored_norms(rows));
}

std::size_t restricted_rank(const MFFamily& family, const Element& x, double tolerance) {
    return numerical_rank(restricted_pairing(family, x, tolerance), tolerance, RankScale::Floored);
}

std::size_t restricted_rank(const ExactMFFamily& family, const ExactElement& x) {
    const auto tangent = tangent_basis(family.algebra(), x);
    return exact_rank(exact_pairing(family.differentials(x), tangent));
}

AnnihilatorCheck annihilator_check(const InvariantSystem& invariants, const Element& x, double tolerance) {
    const LieAlgebra& L = invariants.algebra();
    const auto tangent = tangent_basis(L, x, tolerance);
    const auto diffs = invariants.differentials(x);
    AnnihilatorCheck out;
    const Eigen::MatrixXcd m = pairing(diffs, tangent);
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        const double scale = std::max(1.0, norm(diffs[i]));
        for (std::size_t t = 0; t < tangent.size(); ++t)
            out.residual = std::max(out.residual, std::abs(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t))) / scale);
    }
    std::vector<Element> grads;
    for (const auto& d : diffs) grads.push_back(L.raise(d));
    out.gradient_rank =
        numerical_rank(equilibrate_rows(rows_to_eigen(grads, L.dim()), floored_norms(grads)), tolerance, RankScale::Floored);
    return out;
}

namespace {

struct FloatCampaign {
    const LieAlgebra& L;
    const InvariantSystem& inv;
    const MFFamily& family;
    std::uint64_t seed;
    double tolerance;
    std::size_t expected;
};

TrialResult run_float_trial(const FloatCampaign& c, std::size_t index, const Element& base,
                            const std::vector<Complex>& base_values, bool degenerate) {
    Rng rng(derive_seed(c.seed, SeedStream::Trial, index));
    TrialResult out;
    out.degenerate = degenerate;
    out.expected = c.expected;
    for (std::size_t draw = 0; draw < kMaxDraws; ++draw) {
        const Element x = orbit_push(c.L, base, unit_gaussian(rng, c.L.dim()));
        const double drift = relative_drift(c.inv.eval_all(x), base_values);
        if (drift > kDriftLimit || !is_regular(c.L, x, c.tolerance)) {
            ++out.resampled;
            continue;
        }
        const Eigen::MatrixXcd m = restricted_pairing(c.family, x, c.tolerance);
        out.rank = numerical_rank(m, c.tolerance, RankScale::Floored);
        for (std::size_t i = 0; i < c.inv.count(); ++i) {
            const auto row = static_cast<Eigen::Index>(c.family.generator_position(i, 0));
            out.invariant_rows = std::max(out.invariant_rows, m.row(row).cwiseAbs().maxCoeff());
        }
        out.ambient_rank = ambient_rank(c.family, x, c.tolerance);
        const AnnihilatorCheck ann = annihilator_check(c.inv, x, c.tolerance);
        out.annihilator_residual = ann.residual;
        out.gradient_rank = ann.gradient_rank;
        out.drift = drift;
        out.digest = digest(x);
        return out;
    }
    throw ConfigError("verify: trial " + std::to_string(index) + " found no admissible orbit point");
}

struct ExactCampaign {
    const LieAlgebra& L;
    const InvariantSystem& inv;
    const ExactMFFamily& family;
    std::uint64_t seed;
    std::size_t expected;
};

TrialResult run_exact_trial(const ExactCampaign& c, std::size_t index, const ExactElement& base,
                            const std::vector<GaussianRational>& base_values, bool degenerate) {
    Rng rng(derive_seed(c.seed, SeedStream::Trial, index));
    const std::size_t roots = c.L.root_system().roots.size();
    TrialResult out;
    out.degenerate = degenerate;
    out.expected = c.expected;
    for (std::size_t draw = 0; draw < kMaxDraws; ++draw) {
        ExactElement x = base;
        for (int k = 0; k < 3; ++k) {
            const auto root = static_cast<std::size_t>(rng.integer(0, static_cast<long>(roots) - 1));
            long t = rng.integer(-2, 1);
            if (t >= 0) ++t;
            x = unipotent_push(c.L, x, root, Rational(t));
        }
        if (c.inv.eval_all(x) != base_values) throw ConstructionError("exact orbit point changed an invariant");
        if (!is_regular(c.L, x)) {
            ++out.resampled;
            continue;
        }
        const auto tangent = tangent_basis(c.L, x);
        const Matrix<GaussianRational> m = exact_pairing(c.family.differentials(x), tangent);
        out.rank = exact_rank(m);
        bool invariant_rows_vanish = true;
        for (std::size_t i = 0; i < c.inv.count(); ++i) {
            const std::size_t row = c.family.generator_position(i, 0);
            for (std::size_t t = 0; t < m.cols(); ++t) invariant_rows_vanish = invariant_rows_vanish && m(row, t).is_zero();
        }
        out.invariant_rows = invariant_rows_vanish ? 0.0 : 1.0;
        out.annihilator_residual = out.invariant_rows;
        out.ambient_rank = ambient_rank(c.family, x);
        const auto diffs = c.inv.differentials(x);
        Matrix<GaussianRational> g(diffs.size(), c.L.dim());
        for (std::size_t i = 0; i < diffs.size(); ++i) {
            const auto grad = c.L.raise(diffs[i]);
            for (std::size_t j = 0; j < grad.size(); ++j) g(i, j) = grad[j];
        }
        out.gradient_rank = exact_rank(g);
        out.drift = 0.0;
        out.digest = digest(x);
        return out;
    }
    throw ConfigError("verify: trial " + std::to_string(index) + " found no admissible orbit point");
}

RankReport report_header(const LieAlgebra& L, const InvariantSystem& inv, SampleKind shift_kind,
                         SampleKind orbit_kind, std::size_t trials, std::uint64_t seed, double tolerance) {
    if (trials < 1) throw ConfigError("verify: trials must be >= 1");
    RankReport report;
    report.type = L.type();
    report.rank = L.rank();
    report.n = L.dim();
    report.ell = inv.ell();
    report.shift_kind = shift_kind;
    report.orbit_kind = orbit_kind;
    report.seed = seed;
    report.requested_trials = trials;
    report.tolerance = tolerance;
    return report;
}

void finish(RankReport& report, std::chrono::steady_clock::time_point start) {
    report.passed = !report.trials.empty();
    for (const auto& t : report.trials) {
        report.resampled += t.resampled;
        report.passed = report.passed && t.rank == t.expected;
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

RankReport verify_completeness(std::shared_ptr<const LieAlgebra> algebra, SampleKind shift_kind,
                               SampleKind orbit_kind, std::size_t trials, std::uint64_t seed,
                               const CampaignOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const LieAlgebra& L = *algebra;
    const InvariantSystem inv(algebra);
    RankReport report = report_header(L, inv, shift_kind, orbit_kind, trials, seed, options.tolerance);
    report.mode = ArithmeticMode::Float;

    const Element a = regular_sample(L, shift_kind, derive_seed(seed, SeedStream::Shift), options.tolerance);
    const Element x0 = regular_sample(L, orbit_kind, derive_seed(seed, SeedStream::Orbit), options.tolerance);
    const MFFamily family(inv, a, options.tolerance);
    const auto x0_values = inv.eval_all(x0);
    const auto a_values = inv.eval_all(a);
    report.orbit_invariants = x0_values;

    const FloatCampaign campaign{L, inv, family, seed, options.tolerance, report.expected_rank()};
    const std::size_t total = trials + (options.include_degenerate ? 1 : 0);
    report.trials.resize(total);
    parallel_for(total, options.threads, [&](std::size_t i) {
        const bool degenerate = i == trials;
        report.trials[i] = run_float_trial(campaign, i, degenerate ? a : x0, degenerate ? a_values : x0_values, degenerate);
    });
    finish(report, start);
    return report;
}

RankReport verify_completeness_exact(std::shared_ptr<const LieAlgebra> algebra, SampleKind shift_kind,
                                     SampleKind orbit_kind, std::size_t trials, std::uint64_t seed,
                                     const CampaignOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const LieAlgebra& L = *algebra;
    const InvariantSystem inv(algebra);
    RankReport report = report_header(L, inv, shift_kind, orbit_kind, trials, seed, options.tolerance);
    report.mode = ArithmeticMode::Exact;

    const ExactElement a = exact_regular_sample(L, shift_kind, derive_seed(seed, SeedStream::Shift));
    const ExactElement x0 = exact_regular_sample(L, orbit_kind, derive_seed(seed, SeedStream::Orbit));
    const ExactMFFamily family(inv, a);
    const auto x0_values = inv.eval_all(x0);
    const auto a_values = inv.eval_all(a);
    for (const auto& v : x0_values) report.orbit_invariants.push_back(v.to_complex());

    const ExactCampaign campaign{L, inv, family, seed, report.expected_rank()};
    const std::size_t total = trials + (options.include_degenerate ? 1 : 0);
    report.trials.resize(total);
    parallel_for(total, options.threads, [&](std::size_t i) {
        const bool degenerate = i == trials;
        report.trials[i] = run_exact_trial(campaign, i, degenerate ? a : x0, degenerate ? a_values : x0_values, degenerate);
    });
    finish(report, start);
    return report;
}

SingularProbeReport probe_singular_inclusion(const MFFamily& family, std::size_t samples, std::uint64_t seed,
                                             std::size_t random_samples, double tolerance) {
    const LieAlgebra& L = family.algebra();
    const auto& basis = L.chevalley();
    const std::size_t r = L.rank();
    constexpr std::size_t kLambdasPerPoint = 5;

    SingularProbeReport out;
    out.ell = family.ell();
    Rng rng(derive_seed(seed, SeedStream::Probe, 0));
    Element z;
    for (std::size_t s = 0; s < samples; ++s) {
        Complex lambda = 0.0;
        if (s % kLambdasPerPoint == 0) {
            Element h(L.dim(), Complex(0));
            for (auto c : basis.cartan_basis) h[c] = rng.complex_gaussian();
            // Kill one simple root value: alpha_k(h_{alpha_k}) = 2.
            const auto k = static_cast<std::size_t>(rng.integer(0, static_cast<long>(r) - 1));
            h[basis.cartan_basis[k]] -= L.root_value(k, h) / 2.0;
            z = orbit_push(L, h, unit_gaussian(rng, L.dim()));
            if (is_regular(L, z, tolerance)) throw ConstructionError("probe_singular_inclusion: sample is regular");
        } else {
            lambda = rng.complex_gaussian();
        }
        Element p = z;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += lambda * family.shift()[i];
        ++out.singular_tested;
        if (ambient_rank(family, p, tolerance) < family.ell()) ++out.singular_deficient;
    }

    Rng random(derive_seed(seed, SeedStream::Probe, 1));
    for (std::size_t s = 0; s < random_samples; ++s) {
        const Element x = random.gaussian_element(L.dim());
        ++out.random_tested;
        if (ambient_rank(family, x, tolerance) == family.ell()) ++out.random_full;
    }
    out.passed = out.singular_deficient == out.singular_tested && 100 * out.random_full >= 95 * out.random_tested;
    return out;
}

SliceRegularityReport probe_slice_regularity(const LieAlgebra& L, const Sl2Triple& triple, std::size_t samples,
                                             std::uint64_t seed, double tolerance) {
    const Element xi = to_float(triple.xi);
    Rng rng(derive_seed(seed, SeedStream::Probe, 2));
    SliceRegularityReport out;
    for (std::size_t s = 0; s < samples; ++s) {
        Element x = xi;
        if (s > 0)
            for (auto idx : L.chevalley().borel_plus) x[idx] += rng.complex_gaussian();
        ++out.samples;
        if (is_regular(L, x, tolerance)) ++out.regular;
    }
    out.passed = out.regular == out.samples;
    return out;
}

StructuralCheck structural_check(std::shared_ptr<const LieAlgebra> algebra) {
    const LieAlgebra& L = *algebra;
    StructuralCheck out;
    out.label = L.label();
    out.half_n_plus_r = (L.dim() + L.rank()) / 2;
    try {
        const InvariantSystem inv(algebra);
        for (int d : inv.degrees()) out.degree_sum += static_cast<std::size_t>(d);

        const Sl2Triple t = principal_sl2(L);
        const auto times = [](ExactElement x, long c) {
            for (auto& v : x) v *= GaussianRational(c);
            return x;
        };
        out.triple_relations = bracket(L, t.h, t.xi) == times(t.xi, 2) && bracket(L, t.h, t.eta) == times(t.eta, -2) &&
                               bracket(L, t.xi, t.eta) == t.h;
        out.simple_values = true;
        for (auto a : L.root_system().simple_roots)
            out.simple_values = out.simple_values && L.root_value(a, t.h) == GaussianRational(-2);
        out.coefficients_positive = std::all_of(t.coefficients.begin(), t.coefficients.end(),
                                                [](const Rational& c) { return sgn(c) > 0; });

        const auto kernel = exact_kernel(ad_matrix(L, t.eta));
        out.kernel_dim = kernel.size();
        out.kernel_in_borel = std::all_of(kernel.begin(), kernel.end(),
                                          [&](const ExactElement& w) { return borel_membership(L.chevalley(), w); });
        out.grading = ad_h_eigen_check(L, t, slodowy_slice(L, t)).passed;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    out.passed = out.error.empty() && out.triple_relations && out.simple_values && out.coefficients_positive &&
                 out.kernel_dim == L.rank() && out.kernel_in_borel && out.grading &&
                 out.degree_sum == out.half_n_plus_r;
    return out;
}

}  // namespace mfslice
