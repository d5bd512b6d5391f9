#include <gtest/gtest.h>

#include <set>

#include "mfslice/error.hpp"
#include "mfslice/exact_linalg.hpp"
#include "mfslice/rootdata.hpp"
#include "support.hpp"

using namespace mfslice;
using namespace mfslice::fixtures;

namespace {

// Gram matrix of the form preserved by the orthogonal / symplectic realization.
Matrix<Rational> form_matrix(TypeLabel type, std::size_t N) {
    Matrix<Rational> J(N, N);
    for (std::size_t i = 0; i < N; ++i) J(i, N - 1 - i) = (type == TypeLabel::C && i >= N / 2) ? -1 : 1;
    return J;
}

}  // namespace

TEST(ParseType, AcceptsClassicalLabels) {
    EXPECT_EQ(parse_type("A"), TypeLabel::A);
    EXPECT_EQ(parse_type("b"), TypeLabel::B);
    EXPECT_EQ(parse_type("C"), TypeLabel::C);
}

TEST(ParseType, RejectsOtherLabels) {
    for (const char* s : {"D", "E", "G", "", "AA"}) {
        try {
            parse_type(s);
            FAIL() << "accepted " << s;
        } catch (const ConfigError& e) {
            EXPECT_NE(std::string(e.what()).find("unsupported type"), std::string::npos);
        }
    }
}

TEST(RootSystem, RankOutOfRangeIsConfigError) {
    EXPECT_THROW(build_root_system(TypeLabel::A, 0), ConfigError);
    EXPECT_THROW(build_root_system(TypeLabel::B, 7), ConfigError);
}

TEST(RootSystem, SmallExamples) {
    const RootSystem a1 = build_root_system(TypeLabel::A, 1);
    EXPECT_EQ(a1.roots.size(), 2u);
    EXPECT_EQ(a1.algebra_dim(), 3u);
    const RootSystem a2 = build_root_system(TypeLabel::A, 2);
    EXPECT_EQ(a2.roots.size(), 6u);
    EXPECT_EQ(a2.algebra_dim(), 8u);
    const RootSystem c2 = build_root_system(TypeLabel::C, 2);
    EXPECT_EQ(c2.roots.size(), 8u);
    EXPECT_EQ(c2.algebra_dim(), 10u);
}

TEST(RootSystem, CountsAndDimensionsForAllRanks) {
    for (std::size_t r = 1; r <= kMaxRank; ++r) {
        EXPECT_EQ(build_root_system(TypeLabel::A, r).algebra_dim(), r * r + 2 * r);
        EXPECT_EQ(build_root_system(TypeLabel::B, r).algebra_dim(), r * (2 * r + 1));
        EXPECT_EQ(build_root_system(TypeLabel::C, r).algebra_dim(), r * (2 * r + 1));
        EXPECT_EQ(build_root_system(TypeLabel::B, r).roots.size(), 2 * r * r);
    }
}

TEST(RootSystem, CartanMatricesOfRankTwo) {
    using M = std::vector<std::vector<int>>;
    EXPECT_EQ(build_root_system(TypeLabel::A, 2).cartan_matrix, (M{{2, -1}, {-1, 2}}));
    // B2: alpha_1 = e1 - e2, alpha_2 = e2, so alpha_2(h_1) = -1 and alpha_1(h_2) = (e1 - e2, 2 e2) = -2.
    EXPECT_EQ(build_root_system(TypeLabel::B, 2).cartan_matrix, (M{{2, -1}, {-2, 2}}));
    // C2: alpha_1 = e1 - e2, alpha_2 = 2 e2, coroots e1 - e2 and e2.
    EXPECT_EQ(build_root_system(TypeLabel::C, 2).cartan_matrix, (M{{2, -2}, {-1, 2}}));
}

TEST(RootSystem, SimpleRootsComeFirstAndNegativesMirrorPositives) {
    for (const auto& c : supported_cases()) {
        const RootSystem s = build_root_system(c.type, c.rank);
        for (std::size_t k = 0; k < c.rank; ++k) {
            EXPECT_EQ(s.simple_roots[k], k);
            EXPECT_EQ(s.height(k), 1);
        }
        for (auto p : s.positive_roots) {
            const auto q = s.negative_of(p);
            for (std::size_t k = 0; k < c.rank; ++k) EXPECT_EQ(s.roots[q][k], -s.roots[p][k]);
            EXPECT_LT(s.positions[p].first, s.positions[p].second);
        }
    }
}

class ChevalleyBasisTest : public ::testing::TestWithParam<Case> {};

TEST_P(ChevalleyBasisTest, MatricesLieInTheDefiningAlgebra) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    const std::size_t N = L->defining_dim();
    const auto J = to_exact(form_matrix(L->type(), N));
    for (const auto& b : L->basis_matrices()) {
        const auto X = b.dense<GaussianRational>();
        if (L->type() == TypeLabel::A) {
            EXPECT_TRUE(X.trace().is_zero());
        } else {
            const auto lhs = X.transpose() * J + J * X;
            EXPECT_EQ(lhs, Matrix<GaussianRational>(N, N));
        }
    }
}

TEST_P(ChevalleyBasisTest, BasisMatricesAreIndependent) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    const std::size_t N = L->defining_dim();
    Matrix<GaussianRational> flat(L->dim(), N * N);
    for (std::size_t b = 0; b < L->dim(); ++b) {
        const auto X = L->basis_matrices()[b].dense<GaussianRational>();
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) flat(b, i * N + j) = X(i, j);
    }
    EXPECT_EQ(exact_rank(flat), L->dim());
}

TEST_P(ChevalleyBasisTest, RootVectorsAreAdEigenvectorsWithCartanIntegers) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    const auto& sys = L->root_system();
    const auto& basis = L->chevalley();
    // Brute force with matrix commutators: [h_k, e_beta] = beta(h_k) e_beta.
    for (std::size_t k = 0; k < L->rank(); ++k) {
        const auto H = L->basis_matrices()[basis.cartan_basis[k]].dense<GaussianRational>();
        for (std::size_t beta = 0; beta < sys.roots.size(); ++beta) {
            const auto E = L->basis_matrices()[basis.root_vectors[beta]].dense<GaussianRational>();
            auto expected = E;
            expected *= GaussianRational(sys.cartan_integers(beta)[k]);
            EXPECT_EQ(H * E - E * H, expected);
        }
    }
}

TEST_P(ChevalleyBasisTest, SimpleRootValuesOnCorootsFormTheCartanMatrix) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    const auto& sys = L->root_system();
    for (std::size_t i = 0; i < L->rank(); ++i)
        for (std::size_t j = 0; j < L->rank(); ++j) {
            const auto h = L->chevalley().unit(L->chevalley().cartan_basis[i]);
            EXPECT_EQ(L->root_value(j, h), GaussianRational(sys.cartan_matrix[i][j]));
        }
}

TEST_P(ChevalleyBasisTest, PositiveAndNegativeRootVectorsBracketToCoroots) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    const auto& sys = L->root_system();
    const auto& basis = L->chevalley();
    for (auto p : sys.positive_roots) {
        const auto e = basis.unit(basis.root_vectors[p]);
        const auto f = basis.unit(basis.root_vectors[sys.negative_of(p)]);
        const auto h = bracket(*L, e, f);
        // h_alpha is in the Cartan and alpha(h_alpha) = 2.
        for (std::size_t i = 0; i < 2 * basis.positive_count(); ++i) EXPECT_TRUE(h[i].is_zero());
        EXPECT_EQ(L->root_value(p, h), GaussianRational(2));
    }
}

TEST_P(ChevalleyBasisTest, BorelSubalgebrasPartitionTheRootVectors) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    const auto& basis = L->chevalley();
    std::set<std::size_t> plus(basis.borel_plus.begin(), basis.borel_plus.end());
    EXPECT_EQ(plus.size(), basis.positive_count() + L->rank());
    for (std::size_t i = 0; i < L->dim(); ++i) EXPECT_EQ(plus.count(i) == 1, !basis.is_negative_root_index(i));
}

INSTANTIATE_TEST_SUITE_P(Supported, ChevalleyBasisTest, ::testing::ValuesIn(supported_cases()), case_name);

TEST(ChevalleyBasis, Sl2IsTheStandardTriple) {
    const auto L = algebra(TypeLabel::A, 1);
    const auto& basis = L->chevalley();
    EXPECT_EQ(basis.unit(basis.root_vectors[0]), exact_from_rows(*L, {{0, 1}, {0, 0}}));
    EXPECT_EQ(basis.unit(basis.root_vectors[1]), exact_from_rows(*L, {{0, 0}, {1, 0}}));
    EXPECT_EQ(basis.unit(basis.cartan_basis[0]), exact_from_rows(*L, {{1, 0}, {0, -1}}));
}

TEST(ChevalleyBasis, Sl3Coroots) {
    const auto L = algebra(TypeLabel::A, 2);
    const auto& basis = L->chevalley();
    EXPECT_EQ(basis.unit(basis.cartan_basis[0]), exact_from_rows(*L, {{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}));
    EXPECT_EQ(basis.unit(basis.cartan_basis[1]), exact_from_rows(*L, {{0, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
}

TEST(ChevalleyBasis, B2HasFourPositiveRootVectors) {
    const auto L = algebra(TypeLabel::B, 2);
    EXPECT_EQ(L->chevalley().positive_count(), 4u);
}

TEST(BorelMembership, Examples) {
    const auto L2 = algebra(TypeLabel::A, 1);
    const auto& b2 = L2->chevalley();
    EXPECT_TRUE(borel_membership(b2, b2.unit(b2.cartan_basis[0])));
    EXPECT_FALSE(borel_membership(b2, b2.unit(b2.root_vectors[1])));

    const auto L3 = algebra(TypeLabel::A, 2);
    const auto& b3 = L3->chevalley();
    ExactElement x = b3.unit(b3.root_vectors[0]);
    x[b3.cartan_basis[1]] = GaussianRational(1);
    EXPECT_TRUE(borel_membership(b3, x));
    EXPECT_TRUE(borel_membership(b3, to_float(x), 1e-12));
    Element y = to_float(x);
    y[b3.root_vectors[3]] = 1e-3;
    EXPECT_FALSE(borel_membership(b3, y, 1e-12));
    EXPECT_TRUE(borel_membership(b3, y, 1e-2));
}
