#include "mfslice/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mfslice/error.hpp"
#include "mfslice/exact_linalg.hpp"

namespace mfslice {

TypeLabel parse_type(std::string_view label) {
    if (label.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(label[0]))) {
            case 'A': return TypeLabel::A;
            case 'B': return TypeLabel::B;
            case 'C': return TypeLabel::C;
            default: break;
        }
    }
    throw ConfigError("unsupported type '" + std::string(label) + "' (supported: A, B, C)");
}

char type_char(TypeLabel type) {
    switch (type) {
        case TypeLabel::A: return 'A';
        case TypeLabel::B: return 'B';
        case TypeLabel::C: return 'C';
    }
    return '?';
}

std::size_t defining_dimension(TypeLabel type, std::size_t rank) {
    switch (type) {
        case TypeLabel::A: return rank + 1;
        case TypeLabel::B: return 2 * rank + 1;
        case TypeLabel::C: return 2 * rank;
    }
    return 0;
}

namespace {

void check_rank(std::size_t rank) {
    if (rank < 1 || rank > kMaxRank) {
        std::ostringstream os;
        os << "rank " << rank << " out of range [1, " << kMaxRank << "]";
        throw ConfigError(os.str());
    }
}

std::size_t expected_dimension(TypeLabel type, std::size_t r) {
    switch (type) {
        case TypeLabel::A: return (r + 1) * (r + 1) - 1;
        case TypeLabel::B:
        case TypeLabel::C: return r * (2 * r + 1);
    }
    return 0;
}

// Defining realization. For B and C the algebra is {X : X^T J + J X = 0}
// with J anti-diagonal, J(i, N-1-i) = sign(i); the projection onto it maps
// E_ij to E_ij + theta(E_ij) with theta(X) = -J^{-1} X^T J.
struct Realization {
    TypeLabel type;
    std::size_t n;  // defining dimension N
    std::size_t rank;

    std::size_t mirror(std::size_t i) const { return n - 1 - i; }

    int form_sign(std::size_t i) const {
        if (type == TypeLabel::C && i >= rank) return -1;
        return 1;
    }

    SparseMatrix root_matrix(std::size_t i, std::size_t j) const {
        std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
        acc[{i, j}] += 1;
        if (type != TypeLabel::A) {
            // J^{-1} = J for B (symmetric form), -J for C (skew form).
            const int inverse_sign = type == TypeLabel::B ? 1 : -1;
            const int c = -inverse_sign * form_sign(i) * form_sign(mirror(j));
            acc[{mirror(j), mirror(i)}] += c;
        }
        SparseMatrix m;
        m.size = n;
        for (const auto& [pos, v] : acc)
            if (sgn(v) != 0) m.entries.push_back({pos.first, pos.second, v});
        return m;
    }

    // Diagonal Cartan elements D_k used to coordinatize root functionals.
    Rational cartan_probe(std::size_t k, std::size_t i) const {
        if (type == TypeLabel::A) {
            if (i == k) return 1;
            if (i == k + 1) return -1;
            return 0;
        }
        if (i == k) return 1;
        if (i == mirror(k)) return -1;
        return 0;
    }

    std::vector<Rational> functional(std::pair<std::size_t, std::size_t> pos) const {
        std::vector<Rational> f(rank);
        for (std::size_t k = 0; k < rank; ++k) f[k] = cartan_probe(k, pos.first) - cartan_probe(k, pos.second);
        return f;
    }
};

Rational diagonal_entry(const SparseMatrix& m, std::size_t i) { return m.at(i, i); }

// alpha(H) for a diagonal H and a root whose vector sits at `pos`.
Rational root_value(const SparseMatrix& h, std::pair<std::size_t, std::size_t> pos) {
    return diagonal_entry(h, pos.first) - diagonal_entry(h, pos.second);
}

struct RawRoot {
    std::pair<std::size_t, std::size_t> position;
    std::vector<Rational> functional;
};

}  // namespace

std::size_t RootSystem::negative_of(std::size_t root) const {
    const std::size_t p = positive_count();
    return root < p ? root + p : root - p;
}

int RootSystem::height(std::size_t root) const { return std::accumulate(roots[root].begin(), roots[root].end(), 0); }

std::vector<int> RootSystem::cartan_integers(std::size_t root) const {
    std::vector<int> out(rank, 0);
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t i = 0; i < rank; ++i) out[k] += roots[root][i] * cartan_matrix[k][i];
    return out;
}

RootSystem build_root_system(TypeLabel type, std::size_t rank) {
    check_rank(rank);
    const Realization real{type, defining_dimension(type, rank), rank};

    std::vector<RawRoot> raw;
    std::set<std::pair<std::size_t, std::size_t>> covered;
    for (std::size_t i = 0; i < real.n; ++i)
        for (std::size_t j = 0; j < real.n; ++j) {
            if (i == j || covered.count({i, j})) continue;
            const SparseMatrix m = real.root_matrix(i, j);
            if (m.empty()) continue;
            for (const auto& e : m.entries) covered.insert({e.row, e.col});
            raw.push_back({{i, j}, real.functional({i, j})});
        }

    auto find_position = [&](std::pair<std::size_t, std::size_t> pos) {
        for (std::size_t a = 0; a < raw.size(); ++a)
            if (raw[a].position == pos) return a;
        throw ConstructionError("root position not found in realization");
    };

    // Simple roots sit on the superdiagonal.
    std::vector<std::size_t> simple(rank);
    Matrix<Rational> simple_t(rank, rank);
    for (std::size_t k = 0; k < rank; ++k) {
        simple[k] = find_position({k, k + 1});
        for (std::size_t c = 0; c < rank; ++c) simple_t(c, k) = raw[simple[k]].functional[c];
    }
    const Matrix<Rational> to_simple = exact_inverse(simple_t);

    std::vector<std::vector<int>> coords(raw.size(), std::vector<int>(rank));
    for (std::size_t a = 0; a < raw.size(); ++a) {
        bool nonneg = true;
        bool nonpos = true;
        for (std::size_t k = 0; k < rank; ++k) {
            Rational m = 0;
            for (std::size_t c = 0; c < rank; ++c) m += to_simple(k, c) * raw[a].functional[c];
            if (m.get_den() != 1) throw ConstructionError("root has non-integral simple-root coordinates");
            coords[a][k] = static_cast<int>(m.get_num().get_si());
            nonneg = nonneg && coords[a][k] >= 0;
            nonpos = nonpos && coords[a][k] <= 0;
        }
        const bool upper = raw[a].position.first < raw[a].position.second;
        if (upper ? !nonneg : !nonpos) throw ConstructionError("realization ordering does not match positivity");
    }

    std::vector<std::size_t> pos_raw;
    for (std::size_t a = 0; a < raw.size(); ++a)
        if (raw[a].position.first < raw[a].position.second) pos_raw.push_back(a);
    auto height_of = [&](std::size_t a) { return std::accumulate(coords[a].begin(), coords[a].end(), 0); };
    std::sort(pos_raw.begin(), pos_raw.end(), [&](std::size_t x, std::size_t y) {
        const int hx = height_of(x);
        const int hy = height_of(y);
        if (hx != hy) return hx < hy;
        return raw[x].position < raw[y].position;
    });

    RootSystem sys;
    sys.type = type;
    sys.rank = rank;
    sys.defining_dim = real.n;
    const std::size_t p = pos_raw.size();
    sys.roots.resize(2 * p);
    sys.positions.resize(2 * p);
    for (std::size_t k = 0; k < p; ++k) {
        const std::size_t a = pos_raw[k];
        sys.roots[k] = coords[a];
        sys.positions[k] = raw[a].position;
        std::vector<int> neg(rank);
        for (std::size_t c = 0; c < rank; ++c) neg[c] = -coords[a][c];
        const auto it = std::find(coords.begin(), coords.end(), neg);
        if (it == coords.end()) throw ConstructionError("negative root missing");
        sys.roots[k + p] = neg;
        sys.positions[k + p] = raw[static_cast<std::size_t>(it - coords.begin())].position;
        sys.positive_roots.push_back(k);
        sys.negative_roots.push_back(k + p);
    }
    for (std::size_t k = 0; k < rank; ++k) {
        if (sys.height(k) != 1 || sys.positions[k] != std::make_pair(k, k + 1))
            throw ConstructionError("simple roots are not the leading positive roots");
        sys.simple_roots.push_back(k);
    }

    // Cartan matrix from the coroot directions [E_alpha, E_{-alpha}].
    sys.cartan_matrix.assign(rank, std::vector<int>(rank));
    for (std::size_t i = 0; i < rank; ++i) {
        const SparseMatrix h = sparse_commutator(real.root_matrix(i, i + 1), real.root_matrix(i + 1, i));
        const Rational self = root_value(h, sys.positions[i]);
        for (std::size_t j = 0; j < rank; ++j) {
            const Rational a = 2 * root_value(h, sys.positions[j]) / self;
            if (a.get_den() != 1) throw ConstructionError("non-integral Cartan matrix entry");
            sys.cartan_matrix[i][j] = static_cast<int>(a.get_num().get_si());
        }
    }

    if (sys.algebra_dim() != expected_dimension(type, rank))
        throw ConstructionError("root count inconsistent with the realization dimension");
    return sys;
}

ExactElement ChevalleyBasis::unit(std::size_t index) const {
    ExactElement x(dim);
    x.at(index) = GaussianRational(1);
    return x;
}

ChevalleyBasis chevalley_basis(const RootSystem& system) {
    const Realization real{system.type, system.defining_dim, system.rank};
    const std::size_t p = system.positive_count();
    const std::size_t r = system.rank;

    ChevalleyBasis basis;
    basis.dim = system.algebra_dim();
    basis.rank = r;
    basis.defining_dim = system.defining_dim;
    basis.matrices.resize(basis.dim);
    basis.lead_values.resize(2 * p);

    std::vector<SparseMatrix> coroot_of(p);
    for (std::size_t k = 0; k < p; ++k) {
        const auto pos = system.positions[k];
        const auto neg_pos = system.positions[k + p];
        SparseMatrix e_pos = real.root_matrix(pos.first, pos.second);
        e_pos = sparse_scaled(e_pos, 1 / e_pos.at(pos.first, pos.second));
        SparseMatrix e_neg = real.root_matrix(neg_pos.first, neg_pos.second);
        e_neg = sparse_scaled(e_neg, 1 / e_neg.at(neg_pos.first, neg_pos.second));
        const Rational c = root_value(sparse_commutator(e_pos, e_neg), pos);
        e_neg = sparse_scaled(e_neg, Rational(2) / c);
        coroot_of[k] = sparse_commutator(e_pos, e_neg);
        if (root_value(coroot_of[k], pos) != 2) throw ConstructionError("coroot normalization failed");

        basis.lead_values[k] = e_pos.at(pos.first, pos.second);
        basis.lead_values[k + p] = e_neg.at(neg_pos.first, neg_pos.second);
        basis.matrices[k] = std::move(e_pos);
        basis.matrices[k + p] = std::move(e_neg);
    }
    for (std::size_t k = 0; k < 2 * p; ++k) basis.root_vectors.push_back(k);
    for (std::size_t k = 0; k < r; ++k) {
        basis.matrices[2 * p + k] = coroot_of[system.simple_roots[k]];
        basis.cartan_basis.push_back(2 * p + k);
    }
    basis.coroots = basis.cartan_basis;

    for (std::size_t k = 0; k < p; ++k) {
        basis.borel_plus.push_back(k);
        basis.borel_minus.push_back(k + p);
    }
    for (auto c : basis.cartan_basis) {
        basis.borel_plus.push_back(c);
        basis.borel_minus.push_back(c);
    }
    return basis;
}

bool borel_membership(const ChevalleyBasis& basis, const ExactElement& x) {
    if (x.size() != basis.dim) throw std::invalid_argument("borel_membership: coordinate length mismatch");
    for (std::size_t i = 0; i < basis.dim; ++i)
        if (basis.is_negative_root_index(i) && !x[i].is_zero()) return false;
    return true;
}

bool borel_membership(const ChevalleyBasis& basis, const Element& x, double tolerance) {
    if (x.size() != basis.dim) throw std::invalid_argument("borel_membership: coordinate length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < basis.dim; ++i)
        if (basis.is_negative_root_index(i)) s += std::norm(x[i]);
    return std::sqrt(s) <= tolerance;
}

}  // namespace mfslice
