#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <thread>

#include <dqorbit/poisson.hpp>
#include <dqorbit/presets.hpp>
#include <dqorbit/uea.hpp>

#include "generators.hpp"

using namespace dqorbit;

namespace
{

GaussRat q(long n, long d = 1)
{
    return GaussRat::rational(n, d);
}

const HPoly h = HPoly::h();

// Sym by the definition: average over all p! orderings of the factors,
// each ordering normalized by leftmost rewriting.
UElement symmetrize_oracle(const Enveloping &U, const Word &w)
{
    std::vector<std::size_t> perm(w.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    UElement sum;
    long count = 0;
    do {
        Word v;
        for (auto k : perm) {
            v.push_back(w[k]);
        }
        sum += U.normal_form_word(v);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum * HPoly(q(1, count));
}

void all_words(std::size_t n, std::size_t len, Word &cur, std::vector<Word> &out)
{
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        cur.push_back(i);
        all_words(n, len, cur, out);
        cur.pop_back();
    }
}

} // namespace

TEST(NormalFormWord, Sl2Examples)
{
    Enveloping U(presets::sl2());
    auto labels = U.labels();
    EXPECT_EQ(U.normal_form_word({1, 0}).str(labels), "H*X - 2*h*X");
    EXPECT_EQ(U.normal_form_word({2, 1}).str(labels), "X*Y - h*H");
    EXPECT_EQ(U.normal_form_word({0, 1, 2}), UElement::monomial({0, 1, 2}));
}

TEST(Multiply, Sl2Examples)
{
    Enveloping U(presets::sl2());
    UElement H = U.generator(0), X = U.generator(1), Y = U.generator(2);
    EXPECT_EQ(U.multiply(H, X), UElement::monomial({0, 1}));
    EXPECT_EQ(U.multiply(X, Y) - U.multiply(Y, X), H * h);
    EXPECT_EQ(U.multiply(U.power(H, 2), H), UElement::monomial({0, 0, 0}));
    EXPECT_EQ(U.multiply(U.one(), X), X);
}

TEST(Commutator, Sl2)
{
    Enveloping U(presets::sl2());
    UElement H = U.generator(0), X = U.generator(1);
    EXPECT_EQ(U.commutator(H, X), X * (HPoly(2) * h));
    UElement a = U.multiply(H, X) + X * h;
    EXPECT_TRUE(U.commutator(a, a).is_zero());
}

TEST(Symmetrize, Sl2Examples)
{
    LieAlgebra L = presets::sl2();
    Enveloping U(L);
    auto labels = U.labels();
    EXPECT_EQ(U.symmetrize(CommPoly::variable(3, 0)), U.generator(0));
    EXPECT_EQ(U.symmetrize(CommPoly::monomial({0, 1, 1})).str(labels), "X*Y - 1/2*h*H");
    UElement C = U.symmetrize(L.invariants()[0]);
    EXPECT_EQ(C.str(labels), "1/4*H^2 + X*Y - 1/2*h*H");
}

TEST(Symmetrize, CasimirAtHOneMatchesClosedForm)
{
    Enveloping U(presets::sl2());
    // (1/2)(XY + YX + (1/2) H^2), rewritten at h = 1
    UElement C = (U.normal_form_word({1, 2}) + U.normal_form_word({2, 1}) + U.normal_form_word({0, 0}) * HPoly(q(1, 2)))
                 * HPoly(q(1, 2));
    UElement S = U.symmetrize(presets::sl2().invariants()[0]);
    EXPECT_EQ(S.evaluate_h(q(1)), C.evaluate_h(q(1)));
}

TEST(Symmetrize, DegreeCap)
{
    Enveloping U(presets::sl2());
    EXPECT_THROW(U.symmetrize(CommPoly::monomial({9, 0, 0})), DegreeCapExceeded);
    EXPECT_NO_THROW(U.symmetrize(CommPoly::monomial({3, 3, 2})));
}

TEST(ProjectClassical, Examples)
{
    Enveloping U(presets::sl2());
    UElement a = UElement::monomial({1, 2}) - UElement::monomial({0}) * (HPoly(q(1, 2)) * h);
    EXPECT_EQ(U.project_classical(a), CommPoly::monomial({0, 1, 1}));
    EXPECT_TRUE(U.project_classical(U.generator(0) * h).is_zero());
}

TEST(Central, CasimirsOfPresets)
{
    for (const auto &name : presets::names()) {
        LieAlgebra L = presets::by_name(name);
        Enveloping U(L);
        EXPECT_TRUE(U.is_central(U.symmetrize(L.invariants()[0]))) << name;
        EXPECT_FALSE(U.is_central(U.generator(0))) << name;
        EXPECT_TRUE(U.is_central(U.one())) << name;
    }
}

TEST(Automorphism, So21Involution)
{
    LieAlgebra L = presets::so21();
    Enveloping U(L);
    BasisChange A = presets::so21_involution();
    EXPECT_EQ(U.apply_automorphism(U.generator(1), A), -U.generator(1));
    UElement C = U.symmetrize(L.invariants()[0]);
    EXPECT_EQ(U.apply_automorphism(C, A), C);
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        UElement a = testgen::random_uelement(rng, 3, 4);
        EXPECT_EQ(U.apply_automorphism(U.apply_automorphism(a, A), A), a);
    }
    EXPECT_THROW(U.apply_automorphism(C, BasisChange(Matrix::diagonal({q(1), q(-1), q(1)}))), NotAutomorphism);
}

TEST(Automorphism, IsAlgebraHomomorphism)
{
    LieAlgebra L = presets::so21();
    Enveloping U(L);
    BasisChange A = presets::so21_involution();
    std::mt19937 rng(6);
    for (int t = 0; t < 20; ++t) {
        UElement a = testgen::random_uelement(rng, 3, 3), b = testgen::random_uelement(rng, 3, 3);
        EXPECT_EQ(U.apply_automorphism(U.multiply(a, b), A),
                  U.multiply(U.apply_automorphism(a, A), U.apply_automorphism(b, A)));
    }
}

TEST(UeaProperties, StrategiesAgreeOnAllShortWords)
{
    for (const auto &name : presets::names()) {
        Enveloping U(presets::by_name(name));
        for (std::size_t len = 0; len <= 4; ++len) {
            std::vector<Word> words;
            Word cur;
            all_words(3, len, cur, words);
            for (const auto &w : words) {
                UElement ref = U.normal_form_word(w);
                EXPECT_EQ(U.normal_form_word(w, RewriteStrategy::Rightmost), ref);
                EXPECT_EQ(U.normal_form_word(w, RewriteStrategy::Random, 17), ref);
                EXPECT_EQ(U.normal_form_product(w), ref);
            }
        }
    }
}

TEST(UeaProperties, Associativity)
{
    std::mt19937 rng(31);
    for (const auto &name : presets::names()) {
        Enveloping U(presets::by_name(name));
        for (int t = 0; t < 30; ++t) {
            UElement a = testgen::random_uelement(rng, 3, 4), b = testgen::random_uelement(rng, 3, 4),
                     c = testgen::random_uelement(rng, 3, 4);
            EXPECT_EQ(U.multiply(U.multiply(a, b), c), U.multiply(a, U.multiply(b, c))) << name;
            UElement ab = U.multiply(a, b);
            if (!a.is_zero() && !b.is_zero() && !ab.is_zero()) {
                EXPECT_LE(ab.degree(), a.degree() + b.degree());
            }
        }
    }
}

TEST(UeaProperties, SymbolAndPoissonLimit)
{
    std::mt19937 rng(37);
    for (const auto &name : presets::names()) {
        LieAlgebra L = presets::by_name(name);
        Enveloping U(L);
        for (int t = 0; t < 30; ++t) {
            UElement a = testgen::random_uelement(rng, 3, 3), b = testgen::random_uelement(rng, 3, 3);
            CommPoly pa = U.project_classical(a), pb = U.project_classical(b);
            EXPECT_EQ(U.project_classical(U.multiply(a, b)), pa * pb);
            UElement comm = U.commutator(a, b).divided_by_h();
            EXPECT_EQ(U.project_classical(comm), poisson_bracket(pa, pb, L)) << name;
        }
    }
}

TEST(UeaProperties, SymmetrizerMatchesDefinition)
{
    std::mt19937 rng(41);
    for (const auto &name : presets::names()) {
        Enveloping U(presets::by_name(name));
        for (int t = 0; t < 15; ++t) {
            Monomial m = testgen::random_monomial(rng, 3, 5);
            Word w = Enveloping::to_pbw(m);
            UElement s = U.symmetrize(CommPoly::monomial(m));
            EXPECT_EQ(s, symmetrize_oracle(U, w));
            EXPECT_EQ(U.project_classical(s), CommPoly::monomial(m));
            for (std::size_t p = 0; p + 1 < w.size(); ++p) {
                Word v(w);
                std::swap(v[p], v[p + 1]);
                EXPECT_EQ(symmetrize_oracle(U, v), s);
            }
        }
    }
}

TEST(UeaProperties, SpecializationIsHomomorphism)
{
    std::mt19937 rng(43);
    LieAlgebra L = presets::sl2();
    Enveloping U(L);
    for (GaussRat h0 : {q(0), q(1), q(-3, 2)}) {
        // U_{h0}: bracket h0[ , ], products taken at h = 1
        Enveloping Uh0(scaled_bracket(L, h0));
        for (int t = 0; t < 15; ++t) {
            UElement a = testgen::random_uelement(rng, 3, 3), b = testgen::random_uelement(rng, 3, 3);
            UElement lhs = U.multiply(a, b).evaluate_h(h0);
            UElement rhs = Uh0.multiply(a.evaluate_h(h0), b.evaluate_h(h0)).evaluate_h(q(1));
            EXPECT_EQ(lhs, rhs);
        }
    }
}

TEST(UeaProperties, OrderCovariance)
{
    // Re-declaring the generators in another order is a change of basis;
    // products must correspond.
    LieAlgebra L = presets::sl2();
    BasisChange P(Matrix(3, 3, {q(0), q(0), q(1), q(1), q(0), q(0), q(0), q(1), q(0)})); // (Y, H, X)
    LieAlgebra M = change_basis(L, P, {"Y", "H", "X"});
    Enveloping U(L), V(M);
    std::mt19937 rng(47);
    for (int t = 0; t < 20; ++t) {
        UElement a = testgen::random_uelement(rng, 3, 3), b = testgen::random_uelement(rng, 3, 3);
        // a is written in L's basis; its image in M's basis is the linear map P^{-1}
        BasisChange to_m = P.inverse();
        UElement lhs = V.apply_linear_map(U.multiply(a, b), to_m);
        UElement rhs = V.multiply(V.apply_linear_map(a, to_m), V.apply_linear_map(b, to_m));
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(UeaProperties, SharedCacheIsThreadSafe)
{
    Enveloping U(presets::su2());
    std::vector<UElement> results(4);
    std::vector<std::thread> threads;
    for (int k = 0; k < 4; ++k) {
        threads.emplace_back([&, k] { results[k] = U.power(U.generator(0) + U.generator(1) + U.generator(2), 6); });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (int k = 1; k < 4; ++k) {
        EXPECT_EQ(results[k], results[0]);
    }
}
