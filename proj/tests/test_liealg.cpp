#include <gtest/gtest.h>

#include <random>

#include <dqorbit/lie_algebra.hpp>
#include <dqorbit/poisson.hpp>
#include <dqorbit/presets.hpp>

#include "generators.hpp"

using namespace dqorbit;

namespace
{

GaussRat q(long n, long d = 1)
{
    return GaussRat::rational(n, d);
}

// Brute-force trace of ad(X_i) ad(X_j) straight from the bracket table.
GaussRat trace_form_oracle(const LieAlgebra &L, std::size_t i, std::size_t j)
{
    GaussRat t;
    const std::size_t n = L.dim();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            // ad(X_i) ad(X_j) X_a = sum_b c_ja^b [X_i, X_b]; take the X_a component
            t += L.structure_constant(j, a, b) * L.structure_constant(i, b, a);
        }
    }
    return t;
}

} // namespace

TEST(Jacobi, PresetsSatisfyJacobi)
{
    for (const auto &name : presets::names()) {
        EXPECT_TRUE(jacobi_check(presets::by_name(name)).empty()) << name;
    }
}

TEST(Jacobi, DetectsBrokenBracket)
{
    LieAlgebra L = presets::sl2();
    L.set_bracket("X", "Y", {{"H", q(1)}, {"X", q(1)}});
    auto report = jacobi_check(L);
    ASSERT_EQ(report.size(), 1u);
    EXPECT_EQ(report[0].i, 0u);
    EXPECT_EQ(report[0].j, 1u);
    EXPECT_EQ(report[0].k, 2u);
}

TEST(Killing, Sl2Unnormalised)
{
    Matrix K = killing_form(presets::sl2());
    EXPECT_EQ(K(0, 0), q(8));
    EXPECT_EQ(K(1, 2), q(4));
    EXPECT_EQ(K(2, 1), q(4));
    EXPECT_EQ(K(0, 1), q(0));
    EXPECT_EQ(K(1, 1), q(0));
    EXPECT_EQ(K(2, 2), q(0));
}

TEST(Killing, Su2NormalisedIsIdentity)
{
    EXPECT_EQ(killing_form(presets::su2()), Matrix::identity(3));
}

TEST(Killing, So21Signature)
{
    EXPECT_EQ(killing_form(presets::so21()), Matrix::diagonal({q(1), q(-1), q(-1)}));
}

TEST(Killing, AbelianIsSingular)
{
    LieAlgebra L("u1", {"Z"}, 1);
    EXPECT_THROW(killing_form(L), SingularForm);
    EXPECT_TRUE(killing_form(L, false).is_zero());
}

TEST(Killing, MatchesTraceOracle)
{
    for (const auto &name : presets::names()) {
        LieAlgebra L = presets::by_name(name);
        L.set_killing_scale(q(1));
        Matrix K = killing_form(L);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                EXPECT_EQ(K(i, j), trace_form_oracle(L, i, j)) << name;
            }
        }
    }
}

TEST(Casimir, MatchesDeclaredInvariants)
{
    for (const auto &name : presets::names()) {
        LieAlgebra L = presets::by_name(name);
        EXPECT_EQ(quadratic_casimir(L), L.invariants().at(0)) << name;
        EXPECT_TRUE(is_invariant(quadratic_casimir(L), L)) << name;
    }
    EXPECT_EQ(quadratic_casimir(presets::sl2()).str(presets::sl2().coordinate_names()), "1/4*x_H^2 + x_X*x_Y");
    EXPECT_EQ(quadratic_casimir(presets::su2()).str(presets::su2().coordinate_names()),
              "-x_E^2 - x_F^2 - x_G^2");
    EXPECT_EQ(quadratic_casimir(presets::so21()).str(presets::so21().coordinate_names()),
              "x_G^2 - x_Et^2 - x_Ft^2");
}

TEST(Adjoint, Sl2H)
{
    LieAlgebra L = presets::sl2();
    EXPECT_EQ(adjoint_matrix(L, 0), Matrix::diagonal({q(0), q(2), q(-2)}));
    EXPECT_TRUE(adjoint_matrix(L, std::vector<GaussRat>(3)).is_zero());
}

TEST(Adjoint, Su2GRotatesEF)
{
    Matrix ad = adjoint_matrix(presets::su2(), 2);
    // [G,E] = F, [G,F] = -E
    EXPECT_EQ(ad, Matrix(3, 3, {q(0), q(-1), q(0), q(1), q(0), q(0), q(0), q(0), q(0)}));
}

TEST(Regularity, Sl2Points)
{
    LieAlgebra L = presets::sl2();
    EXPECT_TRUE(is_regular(L, {q(1), q(0), q(0)}));
    EXPECT_FALSE(is_regular(L, {q(0), q(0), q(0)}));
    EXPECT_FALSE(is_regular(L, {q(0), q(1), q(0)}));
    EXPECT_EQ(jacobian_rank(L.invariants(), {q(1), q(0), q(0)}), 1u);
    EXPECT_EQ(jacobian_rank(L.invariants(), {q(0), q(0), q(0)}), 0u);
}

TEST(Regularity, CharacteristicCoefficient)
{
    // ad(H) = diag(0,2,-2): det(T - ad H) = T^3 - 4T.
    auto c = adjoint_matrix(presets::sl2(), 0).characteristic_polynomial();
    EXPECT_EQ(c, (std::vector<GaussRat>{q(0), q(-4), q(0), q(1)}));
}

TEST(Regularity, BadInvariantDataIsReported)
{
    LieAlgebra L = presets::sl2();
    // x_X^2 has a vanishing differential at the regular point (1,0,0).
    L.set_invariants({CommPoly::monomial({0, 2, 0})});
    EXPECT_THROW(regularity(L, {q(1), q(0), q(0)}), InconsistentRegularity);
}

TEST(ChangeBasis, Sl2ToSu2)
{
    LieAlgebra su2 = change_basis(presets::sl2(), presets::sl2_to_su2(), {"E", "F", "G"}, "su2");
    EXPECT_EQ(su2, presets::su2());
    EXPECT_EQ(su2.invariants().at(0), presets::su2().invariants().at(0));
}

TEST(ChangeBasis, Su2ToSo21)
{
    LieAlgebra so21 = change_basis(presets::su2(), presets::su2_to_so21(), {"G", "Et", "Ft"}, "so21");
    EXPECT_EQ(so21, presets::so21());
    // -(e^2+f^2+g^2) becomes et^2 + ft^2 - g^2: the preset's invariant up to sign
    EXPECT_EQ(so21.invariants().at(0), -presets::so21().invariants().at(0));
}

TEST(ChangeBasis, IdentityAndRoundTrip)
{
    LieAlgebra L = presets::sl2();
    EXPECT_EQ(change_basis(L, BasisChange::identity(3), L.labels()), L);
    BasisChange B = presets::sl2_to_su2();
    LieAlgebra there = change_basis(L, B, {"E", "F", "G"});
    LieAlgebra back = change_basis(there, B.inverse(), L.labels());
    EXPECT_EQ(back, L);
    EXPECT_EQ(back.invariants(), L.invariants());
}

TEST(ChangeBasis, SingularMatrixRejected)
{
    EXPECT_THROW(change_basis(presets::sl2(), BasisChange(Matrix(3, 3)), {"A", "B", "C"}), SingularMatrix);
}

TEST(ChangeBasis, KillingTransformsByCongruence)
{
    LieAlgebra L = presets::sl2();
    BasisChange B = presets::sl2_to_su2();
    LieAlgebra M = change_basis(L, B, {"E", "F", "G"});
    M.set_killing_scale(q(1));
    EXPECT_EQ(killing_form(M), B.matrix * killing_form(L) * B.matrix.transpose());
}

TEST(Automorphism, So21Involution)
{
    LieAlgebra L = presets::so21();
    BasisChange A = presets::so21_involution();
    EXPECT_TRUE(is_automorphism(L, A));
    EXPECT_EQ(A.then(A).matrix, Matrix::identity(3));
    EXPECT_FALSE(is_automorphism(L, BasisChange(Matrix::diagonal({q(1), q(-1), q(1)}))));
}

TEST(LieAlgebraProperties, RegularityInvariantUnderBasisChange)
{
    std::mt19937 rng(7);
    LieAlgebra L = presets::sl2();
    BasisChange B = presets::sl2_to_su2();
    LieAlgebra M = change_basis(L, B, {"E", "F", "G"});
    for (int t = 0; t < 50; ++t) {
        auto x = testgen::random_point(rng, 3);
        // xi(Y_a) = sum_i B_ai xi(X_i)
        auto y = B.matrix.apply(x);
        EXPECT_EQ(is_regular(L, x), is_regular(M, y));
    }
}

TEST(LieAlgebraProperties, JacobianAgreesWithCharacteristicCoefficient)
{
    std::mt19937 rng(11);
    for (const auto &name : presets::names()) {
        LieAlgebra L = presets::by_name(name);
        for (int t = 0; t < 100; ++t) {
            auto x = testgen::random_point(rng, 3, 1000);
            RegularityReport r = regularity(L, x);
            EXPECT_TRUE(r.jacobian_checked);
            EXPECT_EQ(r.regular, r.jacobian_rank == L.rank()) << name;
        }
    }
}
