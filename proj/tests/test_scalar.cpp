#include <gtest/gtest.h>

#include <random>

#include <dqorbit/gauss_rat.hpp>
#include <dqorbit/hpoly.hpp>
#include <dqorbit/scalar.hpp>

#include "generators.hpp"

using namespace dqorbit;

TEST(GaussRat, CanonicalForm)
{
    EXPECT_EQ(GaussRat::rational(2, 4), GaussRat::rational(1, 2));
    EXPECT_EQ(GaussRat::rational(3, -6).str(), "-1/2");
    EXPECT_EQ(GaussRat(mpq_class(1, 2), mpq_class(-3, 4)).str(), "1/2-3/4*i");
    EXPECT_EQ(GaussRat::imag_unit().str(), "i");
    EXPECT_EQ((-GaussRat::imag_unit()).str(), "-i");
    EXPECT_EQ(GaussRat(mpq_class(0), mpq_class(2, 3)).str(), "2/3*i");
    EXPECT_EQ(GaussRat(5).str(), "5");
}

TEST(GaussRat, FieldOperations)
{
    GaussRat i = GaussRat::imag_unit();
    EXPECT_EQ(i * i, GaussRat(-1));
    GaussRat z(mpq_class(3, 2), mpq_class(-1, 5));
    EXPECT_EQ(z * z.inverse(), GaussRat(1));
    EXPECT_EQ(z / z, GaussRat(1));
    EXPECT_THROW(GaussRat(1) / GaussRat(0), DivisionByZero);
}

TEST(HPoly, Arithmetic)
{
    HPoly h = HPoly::h();
    EXPECT_EQ(h + h, HPoly(2) * h);
    EXPECT_EQ((HPoly(1) + h) * (HPoly(1) - h), HPoly(1) - h * h);
    EXPECT_TRUE((HPoly() * (h + HPoly(3))).is_zero());
    EXPECT_EQ((HPoly(3) * h - h * h + HPoly(GaussRat::rational(3, 4))).str(), "3/4 + 3*h - h^2");
}

TEST(HPoly, Evaluate)
{
    HPoly p = HPoly(1) + HPoly(2) * HPoly::h();
    EXPECT_EQ(p.evaluate(GaussRat::rational(1, 2)), Scalar(GaussRat(2)));
    EXPECT_EQ(p.evaluate(GaussRat(0)), Scalar(GaussRat(1)));
    EXPECT_EQ(HPoly::h(2).evaluate(GaussRat(3)), Scalar(GaussRat(9)));
}

TEST(HPoly, DivideByH)
{
    HPoly h = HPoly::h();
    EXPECT_EQ((HPoly(2) * h + h * h).divided_by_h(), HPoly(2) + h);
    EXPECT_TRUE(HPoly().divided_by_h().is_zero());
    EXPECT_THROW((HPoly(1) + h).divided_by_h(), NotDivisible);
}

TEST(Scalar, SymbolicParameters)
{
    Scalar a = Scalar::param("a");
    Scalar c0 = Scalar::param("c0");
    Scalar s = a * a - c0 + Scalar(GaussRat(2));
    EXPECT_FALSE(s.is_constant());
    EXPECT_THROW(s.constant(), NotConstant);
    EXPECT_EQ(s - s, Scalar());
    EXPECT_EQ(s.parameters(), (std::vector<std::string>{"a", "c0"}));
    HPoly c = HPoly(c0) + HPoly(a) * HPoly::h();
    EXPECT_EQ(c.str(), "c0 + a*h");
}

TEST(HPolyProperties, RingAxioms)
{
    std::mt19937 rng(101);
    for (int t = 0; t < 200; ++t) {
        HPoly a = testgen::random_hpoly(rng, 3), b = testgen::random_hpoly(rng, 3), c = testgen::random_hpoly(rng, 3);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        GaussRat h0 = testgen::random_gauss(rng);
        EXPECT_EQ((a * b).evaluate(h0), a.evaluate(h0) * b.evaluate(h0));
        EXPECT_EQ((a * HPoly::h()).divided_by_h(), a);
        if (!a.is_zero() && !b.is_zero()) {
            EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
        }
    }
}
