#include <gtest/gtest.h>

#include "mfslice/error.hpp"
#include "mfslice/exact_linalg.hpp"
#include "mfslice/invariants.hpp"
#include "mfslice/report.hpp"
#include "support.hpp"

using namespace mfslice;
using namespace mfslice::fixtures;

namespace {

ExactElement small_integer_element(const LieAlgebra& L, Rng& rng) {
    ExactElement x(L.dim());
    for (auto& v : x) v = GaussianRational(Rational(rng.integer(-3, 3)), Rational(rng.integer(-1, 1)));
    return x;
}

Matrix<Complex> commutator(const Matrix<Complex>& X, const Matrix<Complex>& Y) { return X * Y - Y * X; }

double max_abs(const Matrix<Complex>& m) {
    double out = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out = std::max(out, std::abs(m(i, j)));
    return out;
}

// Killing form as a multiple of the trace form of the defining representation.
Rational trace_form_factor(TypeLabel type, std::size_t r) {
    switch (type) {
        case TypeLabel::A: return Rational(2 * (static_cast<long>(r) + 1));
        case TypeLabel::B: return Rational(2 * static_cast<long>(r) - 1);
        case TypeLabel::C: return Rational(2 * static_cast<long>(r) + 2);
    }
    return 0;
}

}  // namespace

TEST(Bracket, Sl2DefiningRelation) {
    const auto L = algebra(TypeLabel::A, 1);
    const auto e = exact_from_rows(*L, {{0, 1}, {0, 0}});
    const auto f = exact_from_rows(*L, {{0, 0}, {1, 0}});
    EXPECT_EQ(bracket(*L, e, f), exact_from_rows(*L, {{1, 0}, {0, -1}}));
}

TEST(Bracket, Sl3SimpleRootVectorsBracketToTheHighestRoot) {
    const auto L = algebra(TypeLabel::A, 2);
    const auto e1 = exact_from_rows(*L, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
    const auto e2 = exact_from_rows(*L, {{0, 0, 0}, {0, 0, 1}, {0, 0, 0}});
    EXPECT_EQ(bracket(*L, e1, e2), exact_from_rows(*L, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
    // The basis vector of alpha_1 + alpha_2 is E_13 itself.
    EXPECT_EQ(L->chevalley().unit(L->chevalley().root_vectors[2]), bracket(*L, e1, e2));
}

class LieAlgebraTest : public ::testing::TestWithParam<Case> {};

TEST_P(LieAlgebraTest, BracketMatchesMatrixCommutator) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Element x = rng.gaussian_element(L->dim());
        const Element y = rng.gaussian_element(L->dim());
        const auto diff = L->to_matrix(bracket(*L, x, y)) - commutator(L->to_matrix(x), L->to_matrix(y));
        EXPECT_LT(max_abs(diff), 1e-12);
        EXPECT_LT(max_abs(bracket(*L, x, x)), 1e-14);
    }
}

TEST_P(LieAlgebraTest, JacobiIdentityHoldsExactly) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    Rng rng(12);
    for (int trial = 0; trial < 3; ++trial) {
        const auto x = small_integer_element(*L, rng);
        const auto y = small_integer_element(*L, rng);
        const auto z = small_integer_element(*L, rng);
        ExactElement sum = bracket(*L, x, bracket(*L, y, z));
        const auto b = bracket(*L, y, bracket(*L, z, x));
        const auto c = bracket(*L, z, bracket(*L, x, y));
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += b[i] + c[i];
            EXPECT_TRUE(sum[i].is_zero());
        }
    }
}

TEST_P(LieAlgebraTest, StructureConstantsReproduceBasisCommutators) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    Matrix<GaussianRational> table(L->dim() * L->dim(), L->dim());
    for (const auto& c : L->structure_constants()) table(c.i * L->dim() + c.j, c.k) = GaussianRational(c.value);
    const auto& B = L->basis_matrices();
    for (std::size_t i = 0; i < L->dim(); ++i)
        for (std::size_t j = 0; j < L->dim(); ++j) {
            const auto X = B[i].dense<GaussianRational>();
            const auto Y = B[j].dense<GaussianRational>();
            Matrix<GaussianRational> expected(L->defining_dim(), L->defining_dim());
            for (std::size_t k = 0; k < L->dim(); ++k) {
                auto term = B[k].dense<GaussianRational>();
                term *= table(i * L->dim() + j, k);
                expected += term;
            }
            ASSERT_EQ(X * Y - Y * X, expected) << "pair " << i << ", " << j;
        }
}

TEST_P(LieAlgebraTest, KillingMatrixIsTraceOfAdProducts) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    const auto& K = L->killing_matrix();
    std::vector<Matrix<GaussianRational>> ad;
    for (std::size_t i = 0; i < L->dim(); ++i) ad.push_back(ad_matrix(*L, L->chevalley().unit(i)));
    for (std::size_t i = 0; i < L->dim(); ++i)
        for (std::size_t j = 0; j < L->dim(); ++j) EXPECT_EQ(GaussianRational(K(i, j)), (ad[i] * ad[j]).trace());
}

TEST_P(LieAlgebraTest, KillingFormIsAMultipleOfTheTraceForm) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    const Rational factor = trace_form_factor(L->type(), L->rank());
    Rng rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        const auto x = small_integer_element(*L, rng);
        const auto y = small_integer_element(*L, rng);
        EXPECT_EQ(killing(*L, x, y), GaussianRational(factor) * (L->to_matrix(x) * L->to_matrix(y)).trace());
    }
}

TEST_P(LieAlgebraTest, KillingFormIsInvariant) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    Rng rng(14);
    for (int trial = 0; trial < 5; ++trial) {
        const auto x = small_integer_element(*L, rng);
        const auto y = small_integer_element(*L, rng);
        const auto z = small_integer_element(*L, rng);
        EXPECT_EQ(killing(*L, bracket(*L, x, y), z), killing(*L, x, bracket(*L, y, z)));
    }
}

TEST_P(LieAlgebraTest, KillingInverseIsAnInverse) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    EXPECT_EQ(L->killing_matrix() * L->killing_inverse(), Matrix<Rational>::identity(L->dim()));
}

TEST_P(LieAlgebraTest, OrbitPushMatchesTaylorSeriesConjugation) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    Rng rng(15);
    const Element x = rng.gaussian_element(L->dim());
    Element y = rng.gaussian_element(L->dim());
    for (auto& v : y) v *= 0.3 / norm(y);
    // exp(Y) and exp(-Y) summed term by term.
    const auto Y = L->to_matrix(y);
    const std::size_t N = L->defining_dim();
    Matrix<Complex> g = Matrix<Complex>::identity(N), g_inv = g, term = g, term_inv = g;
    for (int k = 1; k < 40; ++k) {
        term = term * Y;
        term *= Complex(1.0 / k);
        term_inv = term_inv * Y;
        term_inv *= Complex(-1.0 / k);
        g += term;
        g_inv += term_inv;
    }
    const auto expected = g * L->to_matrix(x) * g_inv;
    EXPECT_LT(max_abs(L->to_matrix(orbit_push(*L, x, y)) - expected), 1e-12);
}

TEST_P(LieAlgebraTest, UnipotentPushPreservesInvariantsExactly) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    const InvariantSystem inv(L);
    Rng rng(16);
    const auto x = small_integer_element(*L, rng);
    ExactElement y = x;
    for (std::size_t root = 0; root < L->root_system().roots.size(); ++root)
        y = unipotent_push(*L, y, root, frac(static_cast<long>(root % 3) - 1, 2));
    EXPECT_EQ(inv.eval_all(y), inv.eval_all(x));
    EXPECT_NE(y, x);
}

TEST_P(LieAlgebraTest, TangentBasisIsOrthonormalAndSpansImageOfAd) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    Rng rng(17);
    const Element x = rng.gaussian_element(L->dim());
    const auto T = tangent_basis(*L, x);
    ASSERT_EQ(T.size(), L->dim() - L->rank());
    for (std::size_t a = 0; a < T.size(); ++a)
        for (std::size_t b = 0; b < T.size(); ++b) {
            Complex ip = 0;
            for (std::size_t i = 0; i < L->dim(); ++i) ip += std::conj(T[a][i]) * T[b][i];
            EXPECT_NEAR(std::abs(ip - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-12);
        }
    // Every [x, b_j] lies in the span.
    for (std::size_t j = 0; j < L->dim(); ++j) {
        Element v = bracket(*L, x, to_float(L->chevalley().unit(j)));
        for (const auto& t : T) {
            Complex c = 0;
            for (std::size_t i = 0; i < v.size(); ++i) c += std::conj(t[i]) * v[i];
            v = axpy(-c, t, v);
        }
        EXPECT_LT(max_abs(v), 1e-10);
    }
}

TEST_P(LieAlgebraTest, PrincipalElementsAreRegularAndZeroIsNot) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    EXPECT_FALSE(is_regular(*L, ExactElement(L->dim())));
    EXPECT_FALSE(is_regular(*L, Element(L->dim(), Complex(0))));
    Rng rng(18);
    for (int trial = 0; trial < 5; ++trial) EXPECT_TRUE(is_regular(*L, rng.gaussian_element(L->dim())));
}

INSTANTIATE_TEST_SUITE_P(Supported, LieAlgebraTest, ::testing::ValuesIn(supported_cases()), case_name);

TEST(AdMatrix, Sl2Examples) {
    const auto L = algebra(TypeLabel::A, 1);
    const auto h = exact_from_rows(*L, {{1, 0}, {0, -1}});
    const auto ad_h = ad_matrix(*L, h);
    // Basis order (e, f, h).
    Matrix<GaussianRational> expected(3, 3);
    expected(0, 0) = GaussianRational(2);
    expected(1, 1) = GaussianRational(-2);
    EXPECT_EQ(ad_h, expected);
    EXPECT_EQ(ad_matrix(*L, ExactElement(3)), Matrix<GaussianRational>(3, 3));

    const auto ad_e = ad_matrix(*L, exact_from_rows(*L, {{0, 1}, {0, 0}}));
    EXPECT_EQ(exact_rank(ad_e), 2u);
    EXPECT_EQ(ad_e * ad_e * ad_e, Matrix<GaussianRational>(3, 3));
}

TEST(Killing, Sl2Values) {
    const auto L = algebra(TypeLabel::A, 1);
    const auto e = exact_from_rows(*L, {{0, 1}, {0, 0}});
    const auto f = exact_from_rows(*L, {{0, 0}, {1, 0}});
    const auto h = exact_from_rows(*L, {{1, 0}, {0, -1}});
    EXPECT_EQ(killing(*L, h, h), GaussianRational(8));
    EXPECT_EQ(killing(*L, e, e), GaussianRational(0));
    EXPECT_EQ(killing(*L, e, f), GaussianRational(4));
    EXPECT_NEAR(std::abs(killing(*L, to_float(e), to_float(f)) - Complex(4)), 0.0, 1e-14);
}

TEST(IsRegular, Examples) {
    const auto L2 = algebra(TypeLabel::A, 1);
    EXPECT_TRUE(is_regular(*L2, exact_from_rows(*L2, {{0, 1}, {0, 0}})));
    EXPECT_EQ(centralizer_dimension(*L2, exact_from_rows(*L2, {{0, 1}, {0, 0}})), 1u);

    const auto L3 = algebra(TypeLabel::A, 2);
    const auto z = exact_from_rows(*L3, {{1, 0, 0}, {0, 1, 0}, {0, 0, -2}});
    EXPECT_FALSE(is_regular(*L3, z));
    EXPECT_EQ(centralizer_dimension(*L3, z), 4u);
    EXPECT_EQ(centralizer_dimension(*L3, to_float(z), 1e-8), 4u);
    EXPECT_FALSE(is_regular(*L3, to_float(z)));
}

TEST(OrbitPush, Examples) {
    const auto L = algebra(TypeLabel::A, 1);
    const Element e = float_from_rows(*L, {{0, 1}, {0, 0}});
    const Element f = float_from_rows(*L, {{0, 0}, {1, 0}});
    EXPECT_LT(distance(orbit_push(*L, e, Element(3, Complex(0))), e), 1e-15);
    const Element pushed = orbit_push(*L, e, f);
    const InvariantSystem inv(L);
    EXPECT_LT(std::abs(inv.eval(0, pushed)), 1e-12);
    EXPECT_GT(distance(pushed, e), 0.1);
}

TEST(OrbitPush, PreservesRegularityInSl3) {
    const auto L = algebra(TypeLabel::A, 2);
    Rng rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const Element x = rng.gaussian_element(8);
        ASSERT_TRUE(is_regular(*L, x));
        EXPECT_TRUE(is_regular(*L, orbit_push(*L, x, rng.gaussian_element(8))));
    }
}

TEST(TangentBasis, Sl2Examples) {
    const auto L = algebra(TypeLabel::A, 1);
    // Basis order (e, f, h): the image of ad_h is {e, f}, of ad_e is {e, h}.
    for (const auto& t : tangent_basis(*L, float_from_rows(*L, {{1, 0}, {0, -1}}))) EXPECT_LT(std::abs(t[2]), 1e-14);
    for (const auto& t : tangent_basis(*L, float_from_rows(*L, {{0, 1}, {0, 0}}))) EXPECT_LT(std::abs(t[1]), 1e-14);
    EXPECT_EQ(tangent_basis(*L, float_from_rows(*L, {{0, 1}, {0, 0}})).size(), 2u);
}

TEST(TangentBasis, NonRegularPointIsADomainError) {
    const auto L = algebra(TypeLabel::A, 2);
    EXPECT_THROW(tangent_basis(*L, float_from_rows(*L, {{1, 0, 0}, {0, 1, 0}, {0, 0, -2}})), DomainError);
}

TEST(StructureConstantsExport, ListsEveryConstantAsAFraction) {
    const auto L = algebra(TypeLabel::C, 2);
    const Json j = structure_constants_json(*L);
    EXPECT_EQ(j["n"], 10);
    EXPECT_EQ(j["r"], 2);
    EXPECT_EQ(j["type"], "C");
    ASSERT_EQ(j["constants"].size(), L->structure_constants().size());
    for (std::size_t k = 0; k < L->structure_constants().size(); ++k) {
        const auto& c = L->structure_constants()[k];
        const auto& row = j["constants"][k];
        EXPECT_EQ(row[0], c.i);
        EXPECT_EQ(frac(row[3].get<long>(), row[4].get<long>()), c.value);
    }
}
