#ifndef MFSLICE_LIEALG_HPP
#define MFSLICE_LIEALG_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mfslice/matrix.hpp"
#include "mfslice/numeric.hpp"
#include "mfslice/rootdata.hpp"
#include "mfslice/scalar.hpp"

namespace mfslice {

/// Nonzero structure constant: [b_i, b_j] has coefficient `value` on b_k.
struct StructureConstant {
    std::size_t i;
    std::size_t j;
    std::size_t k;
    Rational value;
};

/*
 * A classical simple Lie algebra in the Chevalley basis of its defining
 * realization. Everything structural is exact; double-precision copies of
 * the structure constants and Killing data back the floating-point mode.
 *
 * Immutable after construction; share it through std::shared_ptr.
 */
class LieAlgebra {
public:
    LieAlgebra(RootSystem system, ChevalleyBasis basis);

    static std::shared_ptr<const LieAlgebra> build(TypeLabel type, std::size_t rank);

    TypeLabel type() const { return system_.type; }
    std::size_t dim() const { return basis_.dim; }
    std::size_t rank() const { return basis_.rank; }
    std::size_t defining_dim() const { return basis_.defining_dim; }
    std::string label() const;

    const RootSystem& root_system() const { return system_; }
    const ChevalleyBasis& chevalley() const { return basis_; }
    const std::vector<SparseMatrix>& basis_matrices() const { return basis_.matrices; }
    const std::vector<StructureConstant>& structure_constants() const { return constants_; }

    const Matrix<Rational>& killing_matrix() const { return killing_; }
    const Matrix<Rational>& killing_inverse() const { return killing_inverse_; }

    /// X = sum_i x_i B_i in the defining realization.
    template <class S>
    Matrix<S> to_matrix(const Coords<S>& x) const;

    /// Coordinates of a realization matrix. Exact for matrices in the algebra;
    /// `residual` receives max |M - sum x_i B_i| when non-null.
    template <class S>
    Coords<S> from_matrix(const Matrix<S>& m, double* residual = nullptr) const;

    /// K^{-1} applied to a covector: the Killing-dual vector.
    template <class S>
    Coords<S> raise(const Coords<S>& covector) const;

    /// alpha(x) for the Cartan part of x.
    template <class S>
    S root_value(std::size_t root, const Coords<S>& x) const;

    /// Structure constants and sparse Killing rows converted to scalar type S.
    template <class S>
    struct Typed {
        struct Constant {
            std::size_t i, j, k;
            S value;
        };
        std::vector<Constant> constants;
        std::vector<std::vector<std::pair<std::size_t, S>>> killing_rows;
        std::vector<std::vector<std::pair<std::size_t, S>>> killing_inverse_rows;
    };

    template <class S>
    const Typed<S>& typed() const;

private:
    void compute_structure_constants();
    void compute_killing();

    template <class S>
    Typed<S> make_typed() const;

    RootSystem system_;
    ChevalleyBasis basis_;
    std::vector<StructureConstant> constants_;
    Matrix<Rational> killing_;
    Matrix<Rational> killing_inverse_;
    // Left inverse of the coroot diagonals: Cartan coordinates from diag(M).
    Matrix<Rational> cartan_extract_;

    Typed<GaussianRational> exact_;
    Typed<Complex> float_;
};

template <class S>
Coords<S> bracket(const LieAlgebra& L, const Coords<S>& x, const Coords<S>& y);

/// Column j is [x, b_j].
template <class S>
Matrix<S> ad_matrix(const LieAlgebra& L, const Coords<S>& x);

template <class S>
S killing(const LieAlgebra& L, const Coords<S>& x, const Coords<S>& y);

/// dim ker(ad_x), exact.
std::size_t centralizer_dimension(const LieAlgebra& L, const ExactElement& x);
/// dim ker(ad_x): singular values <= tolerance * sigma_max count as zero.
std::size_t centralizer_dimension(const LieAlgebra& L, const Element& x, double tolerance);

bool is_regular(const LieAlgebra& L, const ExactElement& x);
bool is_regular(const LieAlgebra& L, const Element& x, double tolerance = kDefaultTolerance);

/// exp(Y) X exp(-Y) in the defining realization, re-expanded in coordinates.
Element orbit_push(const LieAlgebra& L, const Element& x, const Element& y);

/// exp(t e_root) X exp(-t e_root): exact conjugation by a unipotent element.
ExactElement unipotent_push(const LieAlgebra& L, const ExactElement& x, std::size_t root, const Rational& t);

/// Orthonormal basis of image(ad_x), which is T_x O. Throws DomainError if
/// its dimension is not n - r at the given tolerance.
std::vector<Element> tangent_basis(const LieAlgebra& L, const Element& x, double tolerance = kDefaultTolerance);
/// Echelon basis of image(ad_x), exact.
std::vector<ExactElement> tangent_basis(const LieAlgebra& L, const ExactElement& x);

Eigen::MatrixXcd to_eigen_ad(const LieAlgebra& L, const Element& x);

}  // namespace mfslice

#endif  // MFSLICE_LIEALG_HPP
