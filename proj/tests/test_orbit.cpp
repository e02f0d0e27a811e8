#include <gtest/gtest.h>

#include <random>
#include <thread>

#include <dqorbit/orbit.hpp>
#include <dqorbit/presets.hpp>

#include "generators.hpp"

using namespace dqorbit;

namespace
{

GaussRat q(long n, long d = 1)
{
    return GaussRat::rational(n, d);
}

const HPoly h = HPoly::h();

// c(h) = c0 + c1 h
HPoly symbolic_constant()
{
    return HPoly(std::vector<Scalar>{Scalar::param("c0"), Scalar::param("c1")});
}

OrbitAlgebra sl2_orbit(HPoly c = symbolic_constant(), const BuildOptions &opts = {})
{
    OrbitSpec spec{presets::sl2(), {}, {std::move(c)}, std::nullopt, std::nullopt};
    return OrbitAlgebra::build(std::move(spec), MonomialOrder::declaration(3), opts);
}

OrbitAlgebra preset_orbit(const std::string &name, HPoly c)
{
    OrbitSpec spec{presets::by_name(name), {}, {std::move(c)}, std::nullopt, std::nullopt};
    return OrbitAlgebra::build(std::move(spec), MonomialOrder::declaration(3));
}

CommPoly x(std::size_t i)
{
    return CommPoly::variable(3, i);
}

CommPoly random_basis_poly(std::mt19937 &rng, const OrbitAlgebra &A, unsigned max_degree, int max_h = 1)
{
    std::vector<Monomial> basis = A.basis(max_degree);
    CommPoly p(3);
    long terms = testgen::uniform(rng, 1, 3);
    for (long t = 0; t < terms; ++t) {
        p.add_term(basis[static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<long>(basis.size()) - 1))],
                   testgen::random_hpoly(rng, max_h));
    }
    return p;
}

} // namespace

TEST(Reduce, HSquared)
{
    OrbitAlgebra A = sl2_orbit();
    UElement H2 = UElement::monomial({0, 0});
    CommPoly expected = CommPoly(3, HPoly(4) * symbolic_constant()) + x(0) * (HPoly(2) * h) - x(1) * x(2) * HPoly(4);
    EXPECT_EQ(A.reduce(H2).poly(), expected);
    EXPECT_EQ(A.str(A.reduce(H2)), "4*c0 + 4*c1*h + 2*h*x_H - 4*x_X*x_Y");
}

TEST(Reduce, BasisElementsAreFixed)
{
    OrbitAlgebra A = sl2_orbit();
    for (const auto &m : A.basis(4)) {
        EXPECT_EQ(A.reduce(UElement::monomial(Enveloping::to_pbw(m))).poly(), CommPoly::monomial(m));
    }
}

TEST(Reduce, CasimirIsItsConstant)
{
    for (const auto &name : presets::names()) {
        OrbitAlgebra A = preset_orbit(name, symbolic_constant());
        EXPECT_EQ(A.reduce(A.casimirs()[0]).poly(), CommPoly(3, symbolic_constant())) << name;
    }
}

TEST(Star, Sl2Commutator)
{
    OrbitAlgebra A = sl2_orbit();
    OrbitElement xy = A.star(x(1), x(2)), yx = A.star(x(2), x(1));
    EXPECT_EQ((xy - yx).poly(), x(0) * h);
    EXPECT_EQ(A.star(x(0), x(0)), A.reduce(UElement::monomial({0, 0})));
    // an equivalent but different product
    EXPECT_EQ(A.star(x(0), x(0), QuantizationMap::Symmetric).poly(),
              CommPoly(3, HPoly(4) * symbolic_constant()) - x(1) * x(2) * HPoly(4));
}

TEST(Quantize, CasimirUnderBothMaps)
{
    OrbitAlgebra A = sl2_orbit();
    const CommPoly &p = A.spec().invariants[0];
    EXPECT_EQ(A.quantize(p, QuantizationMap::Symmetric).poly(), CommPoly(3, symbolic_constant()));
    // The standard map first reduces p to its classical value c0.
    EXPECT_EQ(A.quantize(p, QuantizationMap::Standard).poly(), CommPoly(3, HPoly(Scalar::param("c0"))));
}

TEST(Quantize, SymmetricXY)
{
    OrbitAlgebra A = sl2_orbit();
    CommPoly xy = x(1) * x(2);
    EXPECT_EQ(A.quantize(xy, QuantizationMap::Symmetric).poly(), xy - x(0) * (HPoly(q(1, 2)) * h));
    EXPECT_EQ(A.dequantize(A.quantize(xy, QuantizationMap::Symmetric), QuantizationMap::Symmetric), xy);
}

TEST(Build, RejectsBadData)
{
    LieAlgebra L = presets::sl2();
    EXPECT_THROW(OrbitAlgebra::build(OrbitSpec{L, {x(1)}, {HPoly(1)}, std::nullopt, std::nullopt},
                                     MonomialOrder::declaration(3)),
                 NotInvariant);
    EXPECT_THROW(OrbitAlgebra::build(OrbitSpec{L, {}, {HPoly(1)}, std::vector<Scalar>{Scalar(2)}, std::nullopt},
                                     MonomialOrder::declaration(3)),
                 InconsistentConstants);
    EXPECT_THROW(OrbitAlgebra::build(OrbitSpec{L, {}, {HPoly(0)}, std::nullopt, std::vector<GaussRat>{q(0), q(0), q(0)}},
                                     MonomialOrder::declaration(3)),
                 NotRegular);
    // (2,0,0) is regular but p = 1 there, not 4
    EXPECT_THROW(OrbitAlgebra::build(OrbitSpec{L, {}, {HPoly(4)}, std::nullopt, std::vector<GaussRat>{q(2), q(0), q(0)}},
                                     MonomialOrder::declaration(3)),
                 InconsistentConstants);
    EXPECT_NO_THROW(OrbitAlgebra::build(OrbitSpec{L, {}, {HPoly(1)}, std::nullopt, std::vector<GaussRat>{q(2), q(0), q(0)}},
                                        MonomialOrder::declaration(3)));
    EXPECT_THROW(OrbitAlgebra::build(OrbitSpec{L, {}, {}, std::nullopt, std::nullopt}, MonomialOrder::declaration(3)),
                 InvalidAlgebra);
}

TEST(NegativeControl, MismatchedConstantIsNotDivisible)
{
    LieAlgebra L = presets::sl2();
    BuildOptions opts;
    opts.check_constants = false;
    OrbitAlgebra A = OrbitAlgebra::build(OrbitSpec{L, {}, {HPoly(1) + h}, std::vector<Scalar>{Scalar(2)}, std::nullopt},
                                         MonomialOrder::declaration(3), opts);
    EXPECT_THROW(A.reduce(UElement::monomial({0, 0})), NotDivisible);
    DeformationReport rep = verify_deformation(A, 2, 1);
    EXPECT_FALSE(rep.ok());
}

TEST(Deformation, PresetsPassBothMaps)
{
    for (const auto &name : presets::names()) {
        OrbitAlgebra A = preset_orbit(name, symbolic_constant());
        for (auto map : {QuantizationMap::Standard, QuantizationMap::Symmetric}) {
            DeformationReport rep = verify_deformation(A, 3, 2, map);
            EXPECT_TRUE(rep.ok()) << name << " " << to_string(map) << ": "
                                  << (rep.ok() ? "" : rep.violations[0].detail);
            EXPECT_GT(rep.pairs_checked, 0u);
            EXPECT_GT(rep.triples_checked, 0u);
        }
    }
}

TEST(OrbitProperties, IdealIsTwoSided)
{
    // reduce(a b) depends only on the classes of a and b.
    std::mt19937 rng(53);
    for (const auto &name : presets::names()) {
        OrbitAlgebra A = preset_orbit(name, symbolic_constant());
        const Enveloping &U = A.enveloping();
        for (int t = 0; t < 15; ++t) {
            UElement a = testgen::random_uelement(rng, 3, 3), b = testgen::random_uelement(rng, 3, 3);
            OrbitElement direct = A.reduce(U.multiply(a, b));
            OrbitElement via = A.multiply(A.reduce(a), A.reduce(b));
            EXPECT_EQ(direct, via) << name;
        }
    }
}

TEST(OrbitProperties, ReduceIsLinearOverCh)
{
    std::mt19937 rng(59);
    OrbitAlgebra A = sl2_orbit();
    for (int t = 0; t < 20; ++t) {
        UElement a = testgen::random_uelement(rng, 3, 4), b = testgen::random_uelement(rng, 3, 4);
        HPoly c = testgen::random_hpoly(rng, 2);
        EXPECT_EQ(A.reduce(a + b * c), A.reduce(a) + A.reduce(b) * c);
        // torsion-free: h e = 0 forces e = 0 since A is a C[h]-basis
        OrbitElement e = A.reduce(a);
        EXPECT_EQ((e * h).divided_by_h(), e);
    }
}

TEST(OrbitProperties, RoundTrip)
{
    std::mt19937 rng(61);
    for (const auto &name : presets::names()) {
        OrbitAlgebra A = preset_orbit(name, symbolic_constant());
        for (int t = 0; t < 15; ++t) {
            CommPoly f = random_basis_poly(rng, A, 4);
            for (auto map : {QuantizationMap::Standard, QuantizationMap::Symmetric}) {
                EXPECT_EQ(A.dequantize(A.quantize(f, map), map), f) << name;
            }
            EXPECT_EQ(A.reduce(A.lift(OrbitElement(f))).poly(), f);
        }
    }
}

TEST(OrbitProperties, StarLimits)
{
    std::mt19937 rng(67);
    for (const auto &name : presets::names()) {
        OrbitAlgebra A = preset_orbit(name, symbolic_constant());
        for (int t = 0; t < 15; ++t) {
            CommPoly f = random_basis_poly(rng, A, 3, 0), g = random_basis_poly(rng, A, 3, 0);
            for (auto map : {QuantizationMap::Standard, QuantizationMap::Symmetric}) {
                OrbitElement fg = A.star(f, g, map), gf = A.star(g, f, map);
                EXPECT_EQ(fg.h_component(0).poly(), A.normal_form0(f * g).h_component(0));
                CommPoly bracket = A.normal_form0(poisson_bracket(f, g, A.algebra())).h_component(0);
                EXPECT_EQ((fg - gf).divided_by_h().h_component(0).poly(), bracket) << name;
            }
        }
    }
}

TEST(OrbitProperties, OrderIndependence)
{
    // Two orders give two bases of the same quotient: reducing under one and
    // then under the other agrees with reducing under the other directly.
    std::mt19937 rng(71);
    OrbitSpec spec{presets::so21(), {}, {symbolic_constant()}, std::nullopt, std::nullopt};
    OrbitAlgebra A = OrbitAlgebra::build(spec, MonomialOrder::declaration(3));
    OrbitAlgebra B = OrbitAlgebra::build(spec, MonomialOrder({2, 0, 1}));
    for (int t = 0; t < 20; ++t) {
        UElement a = testgen::random_uelement(rng, 3, 4);
        EXPECT_EQ(B.reduce(A.lift(A.reduce(a))), B.reduce(a));
        EXPECT_EQ(A.reduce(B.lift(B.reduce(a))), A.reduce(a));
    }
}

TEST(OrbitProperties, NumericSpecializationMatchesSymbolic)
{
    std::mt19937 rng(73);
    OrbitAlgebra S = sl2_orbit();
    OrbitAlgebra N = sl2_orbit(HPoly(std::vector<Scalar>{Scalar(q(3, 4)), Scalar(q(-1, 2))}));
    for (int t = 0; t < 15; ++t) {
        UElement a = testgen::random_uelement(rng, 3, 4);
        CommPoly sym = S.reduce(a).poly();
        CommPoly num = N.reduce(a).poly();
        EXPECT_EQ(sym.substitute_params({{"c0", q(3, 4)}, {"c1", q(-1, 2)}}), num);
    }
}

TEST(OrbitProperties, SharedCacheIsThreadSafe)
{
    OrbitAlgebra A = preset_orbit("su2", symbolic_constant());
    std::vector<OrbitElement> results(4);
    std::vector<std::thread> threads;
    UElement a = A.enveloping().power(A.enveloping().generator(0) + A.enveloping().generator(2), 5);
    for (int k = 0; k < 4; ++k) {
        threads.emplace_back([&, k] { results[k] = A.reduce(a); });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (int k = 1; k < 4; ++k) {
        EXPECT_EQ(results[k], results[0]);
    }
    EXPECT_GT(A.cache_size(), 0u);
}
