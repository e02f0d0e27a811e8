#include <gtest/gtest.h>

#include <random>

#include <dqorbit/groebner.hpp>
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

CommPoly x(std::size_t i)
{
    return CommPoly::variable(3, i);
}

CommPoly constant(const HPoly &c)
{
    return CommPoly(3, c);
}

CommPoly sl2_generator(const HPoly &c0)
{
    return presets::sl2().invariants().at(0) - constant(c0);
}

} // namespace

TEST(Poisson, Coordinates)
{
    LieAlgebra L = presets::sl2();
    EXPECT_EQ(poisson_bracket(x(1), x(2), L), x(0));
    EXPECT_EQ(poisson_bracket(x(0), x(1), L), CommPoly(3, HPoly(2)) * x(1));
    CommPoly f = x(0) * x(1) + x(2).pow(3);
    EXPECT_TRUE(poisson_bracket(f, f, L).is_zero());
    EXPECT_TRUE(poisson_bracket(L.invariants()[0], x(1), L).is_zero());
}

TEST(Poisson, Invariance)
{
    LieAlgebra L = presets::sl2();
    EXPECT_TRUE(is_invariant(L.invariants()[0], L));
    EXPECT_FALSE(is_invariant(x(0), L));
    EXPECT_TRUE(is_invariant(constant(HPoly(q(7, 3))), L));
}

TEST(Groebner, Sl2Principal)
{
    HPoly c0 = HPoly(Scalar::param("c0"));
    IdealBasis I = groebner({sl2_generator(c0)}, MonomialOrder::declaration(3));
    ASSERT_EQ(I.basis().size(), 1u);
    EXPECT_EQ(I.leading_monomials()[0], (Monomial{2, 0, 0}));
    // monic form: x_H^2 + 4 x_X x_Y - 4 c0
    EXPECT_EQ(I.basis()[0], sl2_generator(c0) * HPoly(4));
}

TEST(Groebner, EmptyIdeal)
{
    IdealBasis I = groebner({}, MonomialOrder::declaration(3));
    EXPECT_TRUE(I.is_zero_ideal());
    CommPoly f = x(0) * x(0) + x(2);
    EXPECT_EQ(normal_form(f, I), f);
}

TEST(Groebner, So21Hyperboloid)
{
    LieAlgebra L = presets::so21();
    CommPoly t2 = constant(HPoly(Scalar::param("t", 2)));
    IdealBasis I = groebner({L.invariants()[0] - t2}, MonomialOrder::declaration(3));
    EXPECT_EQ(I.basis().size(), 1u);
    EXPECT_EQ(I.leading_monomials()[0], (Monomial{2, 0, 0}));
}

TEST(Groebner, CompletesNonPrincipalIdeal)
{
    // (x^2 - y, x*y - 1) needs completion: x - y^2 joins the basis.
    auto X = CommPoly::variable(2, 0), Y = CommPoly::variable(2, 1);
    CommPoly one(2, HPoly(1));
    IdealBasis I = groebner({X * X - Y, X * Y - one}, MonomialOrder::declaration(2));
    EXPECT_TRUE(normal_form(X * X - Y, I).is_zero());
    EXPECT_TRUE(normal_form(X * Y - one, I).is_zero());
    EXPECT_TRUE(normal_form(Y.pow(3) - one, I).is_zero());
    for (const auto &g : I.basis()) {
        for (const auto &lm : I.leading_monomials()) {
            if (lm != g.leading_term(I.order()).first) {
                for (const auto &t : g.terms()) {
                    EXPECT_FALSE(divides(lm, t.first));
                }
            }
        }
    }
}

TEST(Groebner, RejectsHDependentGenerators)
{
    EXPECT_THROW(groebner({x(0) * x(0) - constant(HPoly::h())}, MonomialOrder::declaration(3)), NotConstant);
}

TEST(NormalForm, Sl2HSquared)
{
    HPoly c0 = HPoly(Scalar::param("c0"));
    IdealBasis I = groebner({sl2_generator(c0)}, MonomialOrder::declaration(3));
    Division d = divide(x(0) * x(0), I);
    EXPECT_EQ(d.remainder, constant(HPoly(4) * c0) - CommPoly(3, HPoly(4)) * x(1) * x(2));
    EXPECT_EQ(d.remainder.str(presets::sl2().coordinate_names()), "4*c0 - 4*x_X*x_Y");
    ASSERT_EQ(d.quotients.size(), 1u);
    EXPECT_EQ(d.quotients[0], constant(HPoly(4)));
}

TEST(NormalForm, StandardAndGenerator)
{
    HPoly c0 = HPoly(Scalar::param("c0"));
    IdealBasis I = groebner({sl2_generator(c0)}, MonomialOrder::declaration(3));
    CommPoly f = x(0) * x(1) + x(2);
    Division d = divide(f, I);
    EXPECT_EQ(d.remainder, f);
    EXPECT_TRUE(d.quotients[0].is_zero());
    EXPECT_TRUE(normal_form(sl2_generator(c0), I).is_zero());
}

TEST(StandardMonomials, Sl2DegreeTwo)
{
    IdealBasis I = groebner({sl2_generator(HPoly(1))}, MonomialOrder::declaration(3));
    std::vector<Monomial> expected = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
                                      {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    EXPECT_EQ(standard_monomials(I, 2), expected);
    EXPECT_EQ(standard_monomials(I, 0), (std::vector<Monomial>{{0, 0, 0}}));
}

TEST(StandardMonomials, So21EliminatesFtSquared)
{
    LieAlgebra L = presets::so21();
    // precedence Ft > G > Et
    IdealBasis I = groebner({L.invariants()[0] - constant(HPoly(Scalar::param("a", 2)))}, MonomialOrder({2, 0, 1}));
    EXPECT_EQ(I.leading_monomials()[0], (Monomial{0, 0, 2}));
    auto A = standard_monomials(I, 4);
    for (const auto &m : A) {
        EXPECT_LE(m[2], 1u);
    }
    // g^m et^n ft^mu with m+n+mu <= d, mu in {0,1}: (d+1)^2 monomials
    EXPECT_EQ(A.size(), 25u);
}

TEST(Printing, DegreeThenPrecedence)
{
    auto names = presets::sl2().coordinate_names();
    CommPoly f = x(2) * x(2) + x(0) * x(1) - CommPoly(3, HPoly(2) * HPoly::h()) * x(1) + constant(HPoly(q(1, 2)));
    EXPECT_EQ(f.str(names), "1/2 - 2*h*x_X + x_H*x_X + x_Y^2");
    EXPECT_EQ(f.str(names, MonomialOrder({2, 1, 0})), "1/2 - 2*h*x_X + x_Y^2 + x_H*x_X");
}

TEST(CommPolyProperties, NormalFormLaws)
{
    std::mt19937 rng(23);
    for (const auto &name : presets::names()) {
        LieAlgebra L = presets::by_name(name);
        CommPoly g = L.invariants()[0] - constant(HPoly(q(3, 2)));
        IdealBasis I = groebner({g}, MonomialOrder::declaration(3));
        for (int t = 0; t < 40; ++t) {
            CommPoly f = testgen::random_commpoly(rng, 3, 4, 5, 1);
            CommPoly k = testgen::random_commpoly(rng, 3, 3, 4, 1);
            Division d = divide(f, I);
            EXPECT_EQ(normal_form(d.remainder, I), d.remainder);
            EXPECT_EQ(normal_form(f + k, I), d.remainder + normal_form(k, I));
            EXPECT_EQ(normal_form(f * k, I), normal_form(d.remainder * normal_form(k, I), I));
            // reconstruction with the degree bound
            EXPECT_EQ(d.quotients[0] * g + d.remainder, f);
            if (!d.quotients[0].is_zero()) {
                EXPECT_LE(d.quotients[0].degree() + 2, f.degree());
            }
            EXPECT_LE(d.remainder.degree(), f.degree());
            for (const auto &term : d.remainder.terms()) {
                EXPECT_TRUE(I.is_standard(term.first));
            }
        }
        EXPECT_EQ(normal_form(L.invariants()[0], I), constant(HPoly(q(3, 2))));
    }
}

TEST(CommPolyProperties, PoissonJacobiLeibniz)
{
    std::mt19937 rng(29);
    for (const auto &name : presets::names()) {
        LieAlgebra L = presets::by_name(name);
        for (int t = 0; t < 30; ++t) {
            CommPoly f = testgen::random_commpoly(rng, 3, 3);
            CommPoly g = testgen::random_commpoly(rng, 3, 3);
            CommPoly k = testgen::random_commpoly(rng, 3, 3);
            CommPoly jac = poisson_bracket(f, poisson_bracket(g, k, L), L)
                           + poisson_bracket(g, poisson_bracket(k, f, L), L)
                           + poisson_bracket(k, poisson_bracket(f, g, L), L);
            EXPECT_TRUE(jac.is_zero()) << name;
            EXPECT_EQ(poisson_bracket(f, g * k, L), poisson_bracket(f, g, L) * k + g * poisson_bracket(f, k, L));
            EXPECT_EQ(poisson_bracket(f, g, L), -poisson_bracket(g, f, L));
        }
    }
}
