#include "mfslice/slodowy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <Eigen/Dense>

#include "mfslice/error.hpp"
#include "mfslice/exact_linalg.hpp"
#include "mfslice/random.hpp"

namespace mfslice {

namespace {

ExactElement scaled(const ExactElement& x, const GaussianRational& s) {
    ExactElement out = x;
    for (auto& v : out) v *= s;
    return out;
}

bool is_zero_vector(const ExactElement& x) {
    return std::all_of(x.begin(), x.end(), [](const GaussianRational& v) { return v.is_zero(); });
}

// ad_h eigenvalue of each basis vector: alpha(h) on e_alpha, 0 on the Cartan.
std::vector<int> basis_grades(const LieAlgebra& L, const ExactElement& h) {
    const auto& basis = L.chevalley();
    std::vector<int> grade(L.dim(), 0);
    for (std::size_t a = 0; a < L.root_system().roots.size(); ++a) {
        const GaussianRational v = L.root_value(a, h);
        if (!v.is_real() || v.real().get_den() != 1) throw ConstructionError("non-integral ad_h eigenvalue");
        grade[basis.root_vectors[a]] = static_cast<int>(v.real().get_num().get_si());
    }
    return grade;
}

}  // namespace

Sl2Triple principal_sl2(const LieAlgebra& L) {
    const auto& sys = L.root_system();
    const auto& basis = L.chevalley();
    const std::size_t r = L.rank();

    // alpha_i(sum_k b_k h_k) = sum_k b_k A[k][i] = -2.
    Matrix<Rational> at(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) at(i, k) = sys.cartan_matrix[k][i];
    const std::vector<Rational> b = exact_solve(at, std::vector<Rational>(r, Rational(-2)));

    Sl2Triple t;
    t.xi.assign(L.dim(), GaussianRational());
    t.h.assign(L.dim(), GaussianRational());
    t.eta.assign(L.dim(), GaussianRational());
    for (std::size_t k = 0; k < r; ++k) {
        const std::size_t simple = sys.simple_roots[k];
        t.coefficients.push_back(-b[k]);
        t.h[basis.cartan_basis[k]] = GaussianRational(b[k]);
        t.xi[basis.root_vectors[sys.negative_of(simple)]] = GaussianRational(1);
        t.eta[basis.root_vectors[simple]] = GaussianRational(-b[k]);
    }

    for (std::size_t k = 0; k < r; ++k)
        if (L.root_value(sys.simple_roots[k], t.h) != GaussianRational(-2))
            throw ConstructionError("principal_sl2: alpha(h) != -2 for a simple root");
    if (bracket(L, t.h, t.xi) != scaled(t.xi, GaussianRational(2)))
        throw ConstructionError("principal_sl2: [h, xi] != 2 xi");
    if (bracket(L, t.h, t.eta) != scaled(t.eta, GaussianRational(-2)))
        throw ConstructionError("principal_sl2: [h, eta] != -2 eta");
    if (bracket(L, t.xi, t.eta) != t.h) throw ConstructionError("principal_sl2: [xi, eta] != h");
    if (!is_regular(L, t.xi)) throw ConstructionError("principal_sl2: xi is not regular");
    return t;
}

Element SlodowySlice::point(const std::vector<Complex>& t) const {
    if (t.size() != kernel_basis.size()) throw std::invalid_argument("slice point: wrong parameter count");
    Element x = to_float(base);
    for (std::size_t k = 0; k < t.size(); ++k) {
        const Element w = to_float(kernel_basis[k]);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += t[k] * w[i];
    }
    return x;
}

ExactElement SlodowySlice::point(const std::vector<GaussianRational>& t) const {
    if (t.size() != kernel_basis.size()) throw std::invalid_argument("slice point: wrong parameter count");
    ExactElement x = base;
    for (std::size_t k = 0; k < t.size(); ++k)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += t[k] * kernel_basis[k][i];
    return x;
}

SlodowySlice slodowy_slice(const LieAlgebra& L, const Sl2Triple& triple) {
    const std::vector<ExactElement> kernel = exact_kernel(ad_matrix(L, triple.eta));
    if (kernel.size() != L.rank()) {
        std::ostringstream os;
        os << "slodowy_slice: dim ker(ad_eta) = " << kernel.size() << ", expected " << L.rank();
        throw ConstructionError(os.str());
    }

    // ad_eta lowers the grading by 2, so its kernel is a sum of its graded pieces.
    const std::vector<int> grade = basis_grades(L, triple.h);
    std::map<int, std::vector<std::size_t>, std::greater<>> by_grade;
    for (std::size_t i = 0; i < L.dim(); ++i) by_grade[grade[i]].push_back(i);

    SlodowySlice slice;
    slice.base = triple.xi;
    for (const auto& [g, indices] : by_grade) {
        Matrix<GaussianRational> proj(kernel.size(), indices.size());
        for (std::size_t v = 0; v < kernel.size(); ++v)
            for (std::size_t c = 0; c < indices.size(); ++c) proj(v, c) = kernel[v][indices[c]];
        for (const auto& row : exact_row_space(proj)) {
            ExactElement w(L.dim());
            for (std::size_t c = 0; c < indices.size(); ++c) w[indices[c]] = row[c];
            const auto lead = std::find_if(w.begin(), w.end(), [](const GaussianRational& v) { return !v.is_zero(); });
            w = scaled(w, GaussianRational(1) / *lead);
            slice.kernel_basis.push_back(std::move(w));
            slice.grades.push_back(g);
        }
    }

    if (slice.kernel_basis.size() != L.rank()) throw ConstructionError("slodowy_slice: kernel is not graded");
    for (const auto& w : slice.kernel_basis) {
        if (!is_zero_vector(bracket(L, triple.eta, w)))
            throw ConstructionError("slodowy_slice: graded component left ker(ad_eta)");
        if (!borel_membership(L.chevalley(), w)) throw ConstructionError("slodowy_slice: ker(ad_eta) not inside b_+");
    }
    return slice;
}

GradingCheck ad_h_eigen_check(const LieAlgebra& L, const Sl2Triple& triple, const SlodowySlice& slice) {
    const auto& basis = L.chevalley();
    const std::vector<int> grade = basis_grades(L, triple.h);
    GradingCheck out;
    bool eigen_ok = true;
    for (auto idx : basis.borel_plus) {
        const ExactElement e = basis.unit(idx);
        eigen_ok = eigen_ok && bracket(L, triple.h, e) == scaled(e, GaussianRational(grade[idx]));
        out.borel_eigenvalues.push_back(grade[idx]);
    }
    out.kernel_stable = true;
    for (std::size_t k = 0; k < slice.dim(); ++k) {
        const ExactElement& w = slice.kernel_basis[k];
        const ExactElement hw = bracket(L, triple.h, w);
        out.kernel_stable = out.kernel_stable && hw == scaled(w, GaussianRational(slice.grades[k])) &&
                            is_zero_vector(bracket(L, triple.eta, hw));
        out.kernel_eigenvalues.push_back(slice.grades[k]);
    }
    const auto non_positive = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [](int e) { return e <= 0; });
    };
    out.passed = eigen_ok && out.kernel_stable && non_positive(out.borel_eigenvalues) &&
                 non_positive(out.kernel_eigenvalues);
    return out;
}

namespace {

struct NewtonRun {
    bool converged = false;
    std::vector<Complex> t;
    double residual = 0.0;
    std::size_t iterations = 0;
};

double scaled_residual(const std::vector<Complex>& f, const std::vector<Complex>& target) {
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        worst = std::max(worst, std::abs(f[i] - target[i]) / std::max(1.0, std::abs(target[i])));
    return worst;
}

NewtonRun newton(const InvariantSystem& inv, const std::vector<Element>& w, const SlodowySlice& slice,
                 const std::vector<Complex>& target, std::vector<Complex> t, const NewtonOptions& opt) {
    const std::size_t r = target.size();
    constexpr double kPolish = 1e-14;
    NewtonRun run;
    Element s = slice.point(t);
    std::vector<Complex> f = inv.eval_all(s);
    double res = scaled_residual(f, target);
    for (; run.iterations < opt.max_iterations && res > kPolish; ++run.iterations) {
        const auto diffs = inv.differentials(s);
        Eigen::MatrixXcd J(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
        Eigen::VectorXcd F(static_cast<Eigen::Index>(r));
        for (std::size_t i = 0; i < r; ++i) {
            F(static_cast<Eigen::Index>(i)) = f[i] - target[i];
            for (std::size_t k = 0; k < r; ++k) {
                Complex v = 0;
                for (std::size_t c = 0; c < s.size(); ++c) v += diffs[i][c] * w[k][c];
                J(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = v;
            }
        }
        const Eigen::VectorXcd delta = J.fullPivLu().solve(-F);
        if (!delta.allFinite()) break;

        double step = 1.0;
        bool improved = false;
        std::vector<Complex> trial(r);
        for (; step >= 1.0 / 1024.0; step *= 0.5) {
            for (std::size_t k = 0; k < r; ++k) trial[k] = t[k] + step * delta(static_cast<Eigen::Index>(k));
            const Element ts = slice.point(trial);
            const std::vector<Complex> tf = inv.eval_all(ts);
            const double tres = scaled_residual(tf, target);
            if (std::isfinite(tres) && tres < res) {
                t = trial;
                s = ts;
                f = tf;
                res = tres;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    run.t = std::move(t);
    run.residual = res;
    run.converged = res <= opt.residual_tolerance;
    return run;
}

}  // namespace

SliceIntersection intersect_orbit(const InvariantSystem& invariants, const SlodowySlice& slice,
                                  const std::vector<Complex>& invariant_values, std::uint64_t seed,
                                  const NewtonOptions& options) {
    const std::size_t r = invariants.count();
    if (invariant_values.size() != r) throw std::invalid_argument("intersect_orbit: need one value per invariant");
    if (slice.dim() != r) throw std::invalid_argument("intersect_orbit: slice dimension differs from rank");

    std::vector<Element> w;
    for (const auto& v : slice.kernel_basis) w.push_back(to_float(v));

    SliceIntersection out;
    std::vector<NewtonRun> runs;
    std::uint64_t attempt = 0;
    while (runs.size() < options.starts) {
        if (out.failed_starts > options.max_failures) {
            std::ostringstream os;
            os << "intersect_orbit: Newton failed on " << out.failed_starts << " starts";
            throw SolverError(os.str());
        }
        Rng rng(derive_seed(seed, SeedStream::Slice, attempt++));
        std::vector<Complex> t0(r);
        for (auto& z : t0) z = rng.complex_gaussian();
        NewtonRun run = newton(invariants, w, slice, invariant_values, std::move(t0), options);
        out.total_iterations += run.iterations;
        if (run.converged)
            runs.push_back(std::move(run));
        else
            ++out.failed_starts;
    }

    const auto best = std::min_element(runs.begin(), runs.end(),
                                       [](const NewtonRun& a, const NewtonRun& b) { return a.residual < b.residual; });
    double scale = 1.0;
    for (const auto& z : best->t) scale = std::max(scale, std::abs(z));
    for (const auto& run : runs)
        for (std::size_t k = 0; k < r; ++k) out.spread = std::max(out.spread, std::abs(run.t[k] - best->t[k]) / scale);

    out.parameters = best->t;
    out.point = slice.point(best->t);
    out.residual = best->residual;
    out.converged_starts = runs.size();
    out.unique = out.spread <= options.agreement_tolerance;
    return out;
}

}  // namespace mfslice
