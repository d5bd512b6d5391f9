#include <gtest/gtest.h>

#include "mfslice/error.hpp"
#include "mfslice/exact_linalg.hpp"
#include "mfslice/slodowy.hpp"
#include "mfslice/verifier.hpp"
#include "support.hpp"

using namespace mfslice;
using namespace mfslice::fixtures;

TEST(PrincipalSl2, Sl2) {
    const auto L = algebra(TypeLabel::A, 1);
    const Sl2Triple t = principal_sl2(*L);
    EXPECT_EQ(t.h, exact_from_rows(*L, {{-1, 0}, {0, 1}}));
    EXPECT_EQ(t.xi, exact_from_rows(*L, {{0, 0}, {1, 0}}));
    EXPECT_EQ(t.eta, exact_from_rows(*L, {{0, 1}, {0, 0}}));
    EXPECT_EQ(t.coefficients, (std::vector<Rational>{1}));
}

TEST(PrincipalSl2, Sl3) {
    const auto L = algebra(TypeLabel::A, 2);
    const Sl2Triple t = principal_sl2(*L);
    EXPECT_EQ(t.h, exact_from_rows(*L, {{-2, 0, 0}, {0, 0, 0}, {0, 0, 2}}));
    EXPECT_EQ(t.coefficients, (std::vector<Rational>{2, 2}));
}

TEST(PrincipalSl2, CoefficientsAreTwiceTheDualWeylVector) {
    // Half the sum of the positive coroots, written in the simple coroots.
    EXPECT_EQ(principal_sl2(*algebra(TypeLabel::A, 3)).coefficients, (std::vector<Rational>{3, 4, 3}));
    EXPECT_EQ(principal_sl2(*algebra(TypeLabel::B, 2)).coefficients, (std::vector<Rational>{4, 3}));
    EXPECT_EQ(principal_sl2(*algebra(TypeLabel::C, 2)).coefficients, (std::vector<Rational>{3, 4}));
    EXPECT_EQ(principal_sl2(*algebra(TypeLabel::B, 3)).coefficients, (std::vector<Rational>{6, 10, 6}));
    EXPECT_EQ(principal_sl2(*algebra(TypeLabel::C, 3)).coefficients, (std::vector<Rational>{5, 8, 9}));
}

TEST(SlodowySlice, Sl2) {
    const auto L = algebra(TypeLabel::A, 1);
    const auto slice = slodowy_slice(*L, principal_sl2(*L));
    ASSERT_EQ(slice.dim(), 1u);
    EXPECT_EQ(slice.kernel_basis[0], exact_from_rows(*L, {{0, 1}, {0, 0}}));
    EXPECT_EQ(slice.point(std::vector<GaussianRational>{GaussianRational(5)}), exact_from_rows(*L, {{0, 5}, {1, 0}}));
}

TEST(SlodowySlice, Sl3KernelIsEtaAndTheHighestRootVector) {
    const auto L = algebra(TypeLabel::A, 2);
    const Sl2Triple t = principal_sl2(*L);
    const auto slice = slodowy_slice(*L, t);
    ASSERT_EQ(slice.dim(), 2u);
    ExactElement eta_direction = t.eta;
    for (auto& v : eta_direction) v /= GaussianRational(2);
    EXPECT_EQ(slice.kernel_basis[0], eta_direction);
    EXPECT_EQ(slice.kernel_basis[1], exact_from_rows(*L, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
    EXPECT_EQ(slice.grades, (std::vector<int>{-2, -4}));
}

TEST(GradingCheck, Sl2AndSl3Eigenvalues) {
    const auto L2 = algebra(TypeLabel::A, 1);
    const auto t2 = principal_sl2(*L2);
    const auto g2 = ad_h_eigen_check(*L2, t2, slodowy_slice(*L2, t2));
    EXPECT_TRUE(g2.passed);
    std::vector<int> e2 = g2.borel_eigenvalues;
    std::sort(e2.begin(), e2.end());
    EXPECT_EQ(e2, (std::vector<int>{-2, 0}));

    const auto L3 = algebra(TypeLabel::A, 2);
    const auto t3 = principal_sl2(*L3);
    const auto g3 = ad_h_eigen_check(*L3, t3, slodowy_slice(*L3, t3));
    EXPECT_EQ(g3.kernel_eigenvalues, (std::vector<int>{-2, -4}));
}

class SliceTest : public ::testing::TestWithParam<Case> {};

TEST_P(SliceTest, TripleRelationsAndKernelContainment) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    const StructuralCheck c = structural_check(L);
    EXPECT_TRUE(c.triple_relations);
    EXPECT_TRUE(c.simple_values);
    EXPECT_TRUE(c.coefficients_positive);
    EXPECT_EQ(c.kernel_dim, L->rank());
    EXPECT_TRUE(c.kernel_in_borel);
    EXPECT_TRUE(c.grading);
    EXPECT_EQ(c.degree_sum, c.half_n_plus_r);
    EXPECT_TRUE(c.passed) << c.error;
    EXPECT_TRUE(is_regular(*L, principal_sl2(*L).xi));
}

TEST_P(SliceTest, GradesAreMinusTwiceTheExponents) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    const InvariantSystem inv(L);
    const auto slice = slodowy_slice(*L, principal_sl2(*L));
    // The kernel vector of grade -2m pairs with the invariant of degree m + 1.
    std::vector<int> expected;
    for (int d : inv.degrees()) expected.push_back(-2 * (d - 1));
    std::sort(expected.begin(), expected.end(), std::greater<>());
    EXPECT_EQ(slice.grades, expected);
    const GradingCheck g = ad_h_eigen_check(*L, principal_sl2(*L), slice);
    EXPECT_EQ(*std::max_element(g.borel_eigenvalues.begin(), g.borel_eigenvalues.end()), 0);
}

TEST_P(SliceTest, RandomSlicePointsAreRegular) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    const auto slice = slodowy_slice(*L, principal_sl2(*L));
    Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Complex> t(slice.dim());
        for (auto& v : t) v = rng.complex_gaussian();
        EXPECT_TRUE(is_regular(*L, slice.point(t)));
    }
}

TEST_P(SliceTest, NewtonFindsTheUniqueOrbitPoint) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    const InvariantSystem inv(L);
    const auto slice = slodowy_slice(*L, principal_sl2(*L));
    Rng rng(42);
    const Element x = rng.gaussian_element(L->dim());
    const auto values = inv.eval_all(x);
    const SliceIntersection s = intersect_orbit(inv, slice, values, 99);
    EXPECT_LE(s.residual, 1e-10);
    EXPECT_TRUE(s.unique) << "spread " << s.spread;
    EXPECT_EQ(s.converged_starts, 10u);
    const auto got = inv.eval_all(s.point);
    for (std::size_t i = 0; i < got.size(); ++i)
        EXPECT_LE(std::abs(got[i] - values[i]), 1e-10 * std::max(1.0, std::abs(values[i])));
}

TEST_P(SliceTest, ZeroTargetGivesXi) {
    const auto L = algebra(GetParam().type, GetParam().rank);
    const InvariantSystem inv(L);
    const Sl2Triple t = principal_sl2(*L);
    const auto slice = slodowy_slice(*L, t);
    const SliceIntersection s = intersect_orbit(inv, slice, std::vector<Complex>(inv.count(), Complex(0)), 5);
    EXPECT_LE(distance(s.point, to_float(t.xi)), 1e-10);
    for (const auto& v : inv.eval_all(t.xi)) EXPECT_TRUE(v.is_zero());
}

INSTANTIATE_TEST_SUITE_P(Supported, SliceTest, ::testing::ValuesIn(supported_cases()), case_name);

TEST(IntersectOrbit, Sl2LinearTarget) {
    const auto L = algebra(TypeLabel::A, 1);
    const InvariantSystem inv(L);
    const auto slice = slodowy_slice(*L, principal_sl2(*L));
    const Complex t0(1.5, -0.25);
    const SliceIntersection s = intersect_orbit(inv, slice, {2.0 * t0}, 3);
    EXPECT_LE(std::abs(s.parameters[0] - t0), 1e-12);
    const Element expected = slice.point(std::vector<Complex>{t0});
    EXPECT_LE(distance(s.point, expected), 1e-12);
}

TEST(IntersectOrbit, RejectsWrongValueCount) {
    const auto L = algebra(TypeLabel::A, 2);
    const InvariantSystem inv(L);
    const auto slice = slodowy_slice(*L, principal_sl2(*L));
    EXPECT_THROW(intersect_orbit(inv, slice, {1.0}, 1), std::invalid_argument);
}
