#ifndef MFSLICE_ROOTDATA_HPP
#define MFSLICE_ROOTDATA_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mfslice/matrix.hpp"
#include "mfslice/scalar.hpp"

namespace mfslice {

enum class TypeLabel { A, B, C };

/// Parses "A", "B" or "C" (case-insensitive); anything else is a ConfigError.
TypeLabel parse_type(std::string_view label);
char type_char(TypeLabel type);

inline constexpr std::size_t kMaxRank = 6;

/// Size of the defining matrix realization: sl_{r+1}, so_{2r+1}, sp_{2r}.
std::size_t defining_dimension(TypeLabel type, std::size_t rank);

/*
 * Root system of a classical algebra, read off its defining realization.
 *
 * Roots are indexed as follows: positive roots first, sorted by height and
 * then by matrix position, so the simple roots are indices 0..r-1; negative
 * roots follow in the same order, so root p + P is the negative of root p.
 */
struct RootSystem {
    TypeLabel type = TypeLabel::A;
    std::size_t rank = 0;
    std::size_t defining_dim = 0;

    std::vector<std::vector<int>> roots;  // simple-root coordinates
    std::vector<std::size_t> positive_roots;
    std::vector<std::size_t> negative_roots;
    std::vector<std::size_t> simple_roots;
    std::vector<std::vector<int>> cartan_matrix;  // cartan_matrix[i][j] = alpha_j(h_{alpha_i})

    // Matrix position (row, col) in the defining realization that carries the
    // root vector of each root; upper triangular exactly for positive roots.
    std::vector<std::pair<std::size_t, std::size_t>> positions;

    std::size_t algebra_dim() const { return rank + roots.size(); }
    std::size_t positive_count() const { return positive_roots.size(); }
    std::size_t negative_of(std::size_t root) const;
    int height(std::size_t root) const;

    /// alpha(h_{alpha_k}) for k = 0..r-1.
    std::vector<int> cartan_integers(std::size_t root) const;
};

RootSystem build_root_system(TypeLabel type, std::size_t rank);

/*
 * Chevalley-type basis in the defining realization.
 *
 * Algebra basis order: e_alpha for the positive roots, e_{-alpha} for the
 * negative roots (same order as RootSystem), then the simple coroots
 * h_{alpha_1}, ..., h_{alpha_r}. Coordinates of every algebra element refer to
 * this order, so the Borel subalgebras are coordinate subspaces.
 */
struct ChevalleyBasis {
    std::size_t dim = 0;
    std::size_t rank = 0;
    std::size_t defining_dim = 0;

    std::vector<SparseMatrix> matrices;

    std::vector<std::size_t> cartan_basis;  // basis index of h_{alpha_k}
    std::vector<std::size_t> root_vectors;  // root index -> basis index
    std::vector<std::size_t> coroots;       // simple root k -> basis index
    std::vector<std::size_t> borel_plus;
    std::vector<std::size_t> borel_minus;

    // Entry of each root vector at its RootSystem position.
    std::vector<Rational> lead_values;

    ExactElement unit(std::size_t index) const;
    std::size_t positive_count() const { return (dim - rank) / 2; }
    bool is_negative_root_index(std::size_t index) const {
        return index >= positive_count() && index < 2 * positive_count();
    }
};

ChevalleyBasis chevalley_basis(const RootSystem& system);

/// True iff x has no component along the negative root vectors (exact test).
bool borel_membership(const ChevalleyBasis& basis, const ExactElement& x);

/// True iff the component of x along the negative root vectors has norm <= tolerance.
bool borel_membership(const ChevalleyBasis& basis, const Element& x, double tolerance);

}  // namespace mfslice

#endif  // MFSLICE_ROOTDATA_HPP
