#include "mfslice/liealg.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>

#include "mfslice/error.hpp"
#include "mfslice/exact_linalg.hpp"

namespace mfslice {

namespace {

template <class S>
bool scalar_is_zero(const S& v) {
    if constexpr (ScalarTraits<S>::exact)
        return v.is_zero();
    else
        return v == S(0);
}

template <class S>
void check_length(const LieAlgebra& L, const Coords<S>& x, const char* what) {
    if (x.size() != L.dim()) {
        std::ostringstream os;
        os << what << ": coordinate length " << x.size() << " does not match algebra dimension " << L.dim();
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

LieAlgebra::LieAlgebra(RootSystem system, ChevalleyBasis basis)
    : system_(std::move(system)), basis_(std::move(basis)) {
    const std::size_t N = basis_.defining_dim;
    const std::size_t r = basis_.rank;
    Matrix<Rational> diag(N, r);
    for (std::size_t k = 0; k < r; ++k)
        for (const auto& e : basis_.matrices[basis_.cartan_basis[k]].entries)
            if (e.row == e.col) diag(e.row, k) += e.value;
    const Matrix<Rational> dt = diag.transpose();
    cartan_extract_ = exact_inverse(dt * diag) * dt;

    compute_structure_constants();
    compute_killing();
    exact_ = make_typed<GaussianRational>();
    float_ = make_typed<Complex>();
}

std::shared_ptr<const LieAlgebra> LieAlgebra::build(TypeLabel type, std::size_t rank) {
    RootSystem sys = build_root_system(type, rank);
    ChevalleyBasis basis = chevalley_basis(sys);
    return std::make_shared<const LieAlgebra>(std::move(sys), std::move(basis));
}

std::string LieAlgebra::label() const {
    std::ostringstream os;
    os << type_char(type()) << rank();
    return os.str();
}

void LieAlgebra::compute_structure_constants() {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const SparseMatrix c = sparse_commutator(basis_.matrices[i], basis_.matrices[j]);
            if (c.empty()) continue;
            double residual = 0.0;
            const Coords<GaussianRational> coords = from_matrix(c.dense<GaussianRational>(), &residual);
            if (residual != 0.0) throw ConstructionError("commutator left the realization subspace");
            for (std::size_t k = 0; k < n; ++k) {
                if (coords[k].is_zero()) continue;
                constants_.push_back({i, j, k, coords[k].real()});
                constants_.push_back({j, i, k, -coords[k].real()});
            }
        }
}

void LieAlgebra::compute_killing() {
    const std::size_t n = dim();
    // ad_i as a sparse map (row k, column l) -> c_{il}^k.
    std::vector<std::unordered_map<std::size_t, Rational>> ad(n);
    for (const auto& c : constants_) ad[c.i][c.k * n + c.j] += c.value;

    killing_ = Matrix<Rational>(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational s = 0;
            for (const auto& [key, v] : ad[i]) {
                const std::size_t k = key / n;
                const std::size_t l = key % n;
                const auto it = ad[j].find(l * n + k);
                if (it != ad[j].end()) s += v * it->second;
            }
            killing_(i, j) = s;
            killing_(j, i) = s;
        }
    killing_inverse_ = exact_inverse(killing_);
}

template <class S>
LieAlgebra::Typed<S> LieAlgebra::make_typed() const {
    using T = ScalarTraits<S>;
    Typed<S> t;
    t.constants.reserve(constants_.size());
    for (const auto& c : constants_) t.constants.push_back({c.i, c.j, c.k, T::from_rational(c.value)});
    const std::size_t n = dim();
    t.killing_rows.resize(n);
    t.killing_inverse_rows.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(killing_(i, j)) != 0) t.killing_rows[i].emplace_back(j, T::from_rational(killing_(i, j)));
            if (sgn(killing_inverse_(i, j)) != 0)
                t.killing_inverse_rows[i].emplace_back(j, T::from_rational(killing_inverse_(i, j)));
        }
    return t;
}

template <>
const LieAlgebra::Typed<GaussianRational>& LieAlgebra::typed<GaussianRational>() const {
    return exact_;
}

template <>
const LieAlgebra::Typed<Complex>& LieAlgebra::typed<Complex>() const {
    return float_;
}

template <class S>
Matrix<S> LieAlgebra::to_matrix(const Coords<S>& x) const {
    check_length(*this, x, "to_matrix");
    const std::size_t N = defining_dim();
    Matrix<S> m(N, N);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (scalar_is_zero(x[i])) continue;
        for (const auto& e : basis_.matrices[i].entries)
            m(e.row, e.col) += x[i] * ScalarTraits<S>::from_rational(e.value);
    }
    return m;
}

template <class S>
Coords<S> LieAlgebra::from_matrix(const Matrix<S>& m, double* residual) const {
    using T = ScalarTraits<S>;
    const std::size_t N = defining_dim();
    if (m.rows() != N || m.cols() != N) throw std::invalid_argument("from_matrix: wrong matrix size");
    Coords<S> x(dim(), S(0));
    for (std::size_t a = 0; a < system_.roots.size(); ++a) {
        const auto [p, q] = system_.positions[a];
        x[basis_.root_vectors[a]] = m(p, q) / T::from_rational(basis_.lead_values[a]);
    }
    for (std::size_t k = 0; k < rank(); ++k) {
        S s(0);
        for (std::size_t c = 0; c < N; ++c)
            if (sgn(cartan_extract_(k, c)) != 0) s += T::from_rational(cartan_extract_(k, c)) * m(c, c);
        x[basis_.cartan_basis[k]] = s;
    }
    if (residual) {
        const Matrix<S> back = to_matrix(x);
        double worst = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                worst = std::max(worst, std::abs(T::to_complex(m(i, j) - back(i, j))));
        *residual = worst;
    }
    return x;
}

template <class S>
Coords<S> LieAlgebra::raise(const Coords<S>& covector) const {
    check_length(*this, covector, "raise");
    const auto& rows = typed<S>().killing_inverse_rows;
    Coords<S> out(dim(), S(0));
    for (std::size_t i = 0; i < dim(); ++i)
        for (const auto& [j, v] : rows[i])
            if (!scalar_is_zero(covector[j])) out[i] += v * covector[j];
    return out;
}

template <class S>
S LieAlgebra::root_value(std::size_t root, const Coords<S>& x) const {
    check_length(*this, x, "root_value");
    const auto ints = system_.cartan_integers(root);
    S s(0);
    for (std::size_t k = 0; k < rank(); ++k) s += x[basis_.cartan_basis[k]] * ScalarTraits<S>::from_int(ints[k]);
    return s;
}

template <class S>
Coords<S> bracket(const LieAlgebra& L, const Coords<S>& x, const Coords<S>& y) {
    check_length(L, x, "bracket");
    check_length(L, y, "bracket");
    Coords<S> out(L.dim(), S(0));
    for (const auto& c : L.typed<S>().constants) {
        if (scalar_is_zero(x[c.i]) || scalar_is_zero(y[c.j])) continue;
        out[c.k] += c.value * x[c.i] * y[c.j];
    }
    return out;
}

template <class S>
Matrix<S> ad_matrix(const LieAlgebra& L, const Coords<S>& x) {
    check_length(L, x, "ad_matrix");
    Matrix<S> m(L.dim(), L.dim());
    for (const auto& c : L.typed<S>().constants)
        if (!scalar_is_zero(x[c.i])) m(c.k, c.j) += c.value * x[c.i];
    return m;
}

template <class S>
S killing(const LieAlgebra& L, const Coords<S>& x, const Coords<S>& y) {
    check_length(L, x, "killing");
    check_length(L, y, "killing");
    const auto& rows = L.typed<S>().killing_rows;
    S s(0);
    for (std::size_t i = 0; i < L.dim(); ++i) {
        if (scalar_is_zero(x[i])) continue;
        S inner(0);
        for (const auto& [j, v] : rows[i]) inner += v * y[j];
        s += x[i] * inner;
    }
    return s;
}

Eigen::MatrixXcd to_eigen_ad(const LieAlgebra& L, const Element& x) { return to_eigen(ad_matrix(L, x)); }

std::size_t centralizer_dimension(const LieAlgebra& L, const ExactElement& x) {
    return L.dim() - exact_rank(ad_matrix(L, x));
}

std::size_t centralizer_dimension(const LieAlgebra& L, const Element& x, double tolerance) {
    return L.dim() - numerical_rank(to_eigen_ad(L, x), tolerance, RankScale::Relative);
}

bool is_regular(const LieAlgebra& L, const ExactElement& x) { return centralizer_dimension(L, x) == L.rank(); }

bool is_regular(const LieAlgebra& L, const Element& x, double tolerance) {
    return centralizer_dimension(L, x, tolerance) == L.rank();
}

Element orbit_push(const LieAlgebra& L, const Element& x, const Element& y) {
    const Eigen::MatrixXcd X = to_eigen(L.to_matrix(x));
    const Eigen::MatrixXcd Y = to_eigen(L.to_matrix(y));
    const Eigen::MatrixXcd g = matrix_exp(Y);
    const Eigen::MatrixXcd g_inv = matrix_exp(-Y);
    const Eigen::MatrixXcd Z = g * X * g_inv;
    double residual = 0.0;
    Element out = L.from_matrix(from_eigen(Z), &residual);
    const double scale = std::max(1.0, Z.cwiseAbs().maxCoeff());
    if (residual > 1e-8 * scale)
        throw ConstructionError("orbit_push: conjugate left the realization subspace");
    return out;
}

ExactElement unipotent_push(const LieAlgebra& L, const ExactElement& x, std::size_t root, const Rational& t) {
    const std::size_t N = L.defining_dim();
    const Matrix<GaussianRational> E = L.basis_matrices().at(L.chevalley().root_vectors.at(root)).dense<GaussianRational>();
    auto exp_nilpotent = [&](const Rational& s) {
        Matrix<GaussianRational> term = Matrix<GaussianRational>::identity(N);
        Matrix<GaussianRational> sum = term;
        for (std::size_t k = 1; k <= N; ++k) {
            term = term * E;
            term *= GaussianRational(s / Rational(static_cast<long>(k)));
            sum += term;
        }
        return sum;
    };
    const Matrix<GaussianRational> g = exp_nilpotent(t);
    const Matrix<GaussianRational> g_inv = exp_nilpotent(-t);
    double residual = 0.0;
    ExactElement out = L.from_matrix(g * L.to_matrix(x) * g_inv, &residual);
    if (residual != 0.0) throw ConstructionError("unipotent_push: conjugate left the realization subspace");
    return out;
}

std::vector<Element> tangent_basis(const LieAlgebra& L, const Element& x, double tolerance) {
    const Eigen::MatrixXcd U = column_space(to_eigen_ad(L, x), tolerance);
    const auto expected = static_cast<Eigen::Index>(L.dim() - L.rank());
    if (U.cols() != expected) {
        std::ostringstream os;
        os << "tangent_basis: image(ad_x) has dimension " << U.cols() << ", expected " << expected
           << " (x not regular at tolerance " << tolerance << ")";
        throw DomainError(os.str());
    }
    std::vector<Element> out(static_cast<std::size_t>(U.cols()), Element(L.dim()));
    for (Eigen::Index c = 0; c < U.cols(); ++c)
        for (Eigen::Index i = 0; i < U.rows(); ++i) out[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] = U(i, c);
    return out;
}

std::vector<ExactElement> tangent_basis(const LieAlgebra& L, const ExactElement& x) {
    auto rows = exact_row_space(ad_matrix(L, x).transpose());
    if (rows.size() != L.dim() - L.rank()) throw DomainError("tangent_basis: x is not regular");
    return rows;
}

template Matrix<GaussianRational> LieAlgebra::to_matrix(const Coords<GaussianRational>&) const;
template Matrix<Complex> LieAlgebra::to_matrix(const Coords<Complex>&) const;
template Coords<GaussianRational> LieAlgebra::from_matrix(const Matrix<GaussianRational>&, double*) const;
template Coords<Complex> LieAlgebra::from_matrix(const Matrix<Complex>&, double*) const;
template Coords<GaussianRational> LieAlgebra::raise(const Coords<GaussianRational>&) const;
template Coords<Complex> LieAlgebra::raise(const Coords<Complex>&) const;
template GaussianRational LieAlgebra::root_value(std::size_t, const Coords<GaussianRational>&) const;
template Complex LieAlgebra::root_value(std::size_t, const Coords<Complex>&) const;

template Coords<GaussianRational> bracket(const LieAlgebra&, const Coords<GaussianRational>&, const Coords<GaussianRational>&);
template Coords<Complex> bracket(const LieAlgebra&, const Coords<Complex>&, const Coords<Complex>&);
template Matrix<GaussianRational> ad_matrix(const LieAlgebra&, const Coords<GaussianRational>&);
template Matrix<Complex> ad_matrix(const LieAlgebra&, const Coords<Complex>&);
template GaussianRational killing(const LieAlgebra&, const Coords<GaussianRational>&, const Coords<GaussianRational>&);
template Complex killing(const LieAlgebra&, const Coords<Complex>&, const Coords<Complex>&);

}  // namespace mfslice
