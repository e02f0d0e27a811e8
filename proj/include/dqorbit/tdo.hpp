#pragma once

// sl(2) acting on homogeneous polynomials of degree m in (gamma, rho) by
// first-order differential operators. Basis index j is gamma^(m-j) rho^j.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <dqorbit/errors.hpp>
#include <dqorbit/matrix.hpp>
#include <dqorbit/orbit.hpp>
#include <dqorbit/presets.hpp>

namespace dqorbit::tdo
{

struct EulerOperators {
    Matrix g_dg; // gamma d/dgamma
    Matrix g_dr; // gamma d/drho
    Matrix r_dg; // rho d/dgamma
    Matrix r_dr; // rho d/drho
};

inline EulerOperators euler_operators(unsigned m)
{
    const std::size_t n = m + 1;
    EulerOperators e{Matrix(n, n), Matrix(n, n), Matrix(n, n), Matrix(n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        e.g_dg(j, j) = GaussRat(static_cast<long>(m - j));
        e.r_dr(j, j) = GaussRat(static_cast<long>(j));
        if (j > 0) {
            e.g_dr(j - 1, j) = GaussRat(static_cast<long>(j));
        }
        if (j < m) {
            e.r_dg(j + 1, j) = GaussRat(static_cast<long>(m - j));
        }
    }
    return e;
}

// Images of (H, X, Y).
struct SL2Matrices {
    Matrix H, X, Y;
};

// p(X) = gamma d/drho, p(Y) = rho d/dgamma, p(H) = gamma d/dgamma - rho d/drho.
inline SL2Matrices p_map(unsigned m)
{
    EulerOperators e = euler_operators(m);
    return {e.g_dg - e.r_dr, e.g_dr, e.r_dg};
}

inline Matrix commutator(const Matrix &a, const Matrix &b)
{
    return a * b - b * a;
}

inline bool satisfies_sl2_relations(const SL2Matrices &p, const GaussRat &hbar = GaussRat(1))
{
    return commutator(p.H, p.X) == p.X * (GaussRat(2) * hbar) && commutator(p.H, p.Y) == p.Y * (GaussRat(-2) * hbar)
           && commutator(p.X, p.Y) == p.H * hbar;
}

// (1/2)(XY + YX + (1/2) H^2)
inline Matrix casimir_matrix(const SL2Matrices &p)
{
    const GaussRat half = GaussRat::rational(1, 2);
    return (p.X * p.Y + p.Y * p.X + p.H * p.H * half) * half;
}

inline GaussRat expected_casimir(unsigned m)
{
    GaussRat l = GaussRat::rational(static_cast<long>(m), 2);
    return l * (l + GaussRat(1));
}

inline GaussRat casimir_scalar(unsigned m)
{
    GaussRat s;
    if (!casimir_matrix(p_map(m)).is_scalar(&s)) {
        throw NotScalar("Casimir is not scalar on P_" + std::to_string(m));
    }
    return s;
}

inline SL2Matrices rescaled_p_map(unsigned m, const GaussRat &hbar)
{
    SL2Matrices p = p_map(m);
    return {p.H * hbar, p.X * hbar, p.Y * hbar};
}

// Image of a in End(P_m) with X_k -> hbar p(X_k) and h -> hbar. The algebra
// must be sl2 in the basis (H, X, Y).
inline Matrix represent(const UElement &a, unsigned m, const GaussRat &hbar)
{
    SL2Matrices p = rescaled_p_map(m, hbar);
    const Matrix *gens[3] = {&p.H, &p.X, &p.Y};
    Matrix r(m + 1, m + 1);
    for (const auto &[mono, c] : a.terms()) {
        Matrix t = Matrix::identity(m + 1);
        for (auto k : mono) {
            t = t * *gens[k];
        }
        r += t * c.evaluate(hbar).constant();
    }
    return r;
}

// Ordered monomials in n generators of degree <= max_degree, by degree.
inline std::vector<PBWMonomial> pbw_monomials(std::size_t n, unsigned max_degree)
{
    std::vector<PBWMonomial> out{{}};
    std::vector<PBWMonomial> frontier{{}};
    for (unsigned d = 1; d <= max_degree; ++d) {
        std::vector<PBWMonomial> next;
        for (const auto &J : frontier) {
            for (std::size_t k = J.empty() ? 0 : J.back(); k < n; ++k) {
                PBWMonomial K = J;
                K.push_back(k);
                next.push_back(std::move(K));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

struct RescaledReport {
    unsigned m = 0;
    GaussRat hbar;
    GaussRat scalar;   // value of the rescaled Casimir
    GaussRat expected; // l(l + hbar), l = hbar m / 2
    bool scalar_ok = false;
    // The representation factors through U_h/I_h at h = hbar with
    // c(h) = h^2 (m/2)(m/2 + 1): checked on PBW monomials of degree <= 3.
    bool orbit_ok = false;
    bool ok() const
    {
        return scalar_ok && orbit_ok;
    }
};

inline RescaledReport rescaled_casimir_check(unsigned m, const GaussRat &hbar)
{
    RescaledReport rep;
    rep.m = m;
    rep.hbar = hbar;
    GaussRat l = hbar * GaussRat::rational(static_cast<long>(m), 2);
    rep.expected = l * (l + hbar);
    SL2Matrices p = rescaled_p_map(m, hbar);
    rep.scalar_ok = satisfies_sl2_relations(p, hbar) && casimir_matrix(p).is_scalar(&rep.scalar)
                    && rep.scalar == rep.expected;

    HPoly c(std::vector<Scalar>{Scalar(), Scalar(), Scalar(expected_casimir(m))});
    OrbitAlgebra A = OrbitAlgebra::build(OrbitSpec{presets::sl2(), {}, {c}, std::nullopt, std::nullopt},
                                         MonomialOrder::declaration(3));
    rep.orbit_ok = represent(A.casimirs()[0] - UElement(c), m, hbar).is_zero();
    for (const auto &J : pbw_monomials(3, 3)) {
        UElement x = UElement::monomial(J);
        if (!rep.orbit_ok) {
            break;
        }
        rep.orbit_ok = represent(x, m, hbar) == represent(A.lift(A.reduce(x)), m, hbar);
    }
    return rep;
}

// C = (D/2)(D/2 + 1) with D = gamma d/dgamma + rho d/drho, and D central
// among the Euler operators.
inline bool d_centrality_check(unsigned m, const SL2Matrices &p)
{
    EulerOperators e = euler_operators(m);
    Matrix D = e.g_dg + e.r_dr;
    if (!(D == Matrix::identity(m + 1) * GaussRat(static_cast<long>(m)))) {
        return false;
    }
    Matrix half_d = D * GaussRat::rational(1, 2);
    if (!(casimir_matrix(p) == half_d * (half_d + Matrix::identity(m + 1)))) {
        return false;
    }
    for (const Matrix *op : std::initializer_list<const Matrix *>{&e.g_dg, &e.g_dr, &e.r_dg, &e.r_dr, &p.H, &p.X, &p.Y}) {
        if (!commutator(D, *op).is_zero()) {
            return false;
        }
    }
    return true;
}

inline bool d_centrality_check(unsigned m)
{
    return d_centrality_check(m, p_map(m));
}

// Rank of the map from PBW monomials of degree <= max_degree (at h = 1) to
// the direct sum of End(P_m), m <= max_m. Full rank means no nonzero
// element of that degree acts trivially on every P_m.
struct FaithfulnessReport {
    std::size_t monomials = 0;
    std::size_t rank = 0;
    bool ok() const
    {
        return rank == monomials;
    }
};

inline FaithfulnessReport faithfulness(unsigned max_degree, unsigned max_m)
{
    std::vector<PBWMonomial> monos = pbw_monomials(3, max_degree);
    std::size_t rows = 0;
    for (unsigned m = 0; m <= max_m; ++m) {
        rows += (m + 1) * (m + 1);
    }
    Matrix M(rows, monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c) {
        std::size_t r = 0;
        for (unsigned m = 0; m <= max_m; ++m) {
            Matrix img = represent(UElement::monomial(monos[c]), m, GaussRat(1));
            for (std::size_t i = 0; i <= m; ++i) {
                for (std::size_t j = 0; j <= m; ++j) {
                    M(r++, c) = img(i, j);
                }
            }
        }
    }
    return {monos.size(), M.rank()};
}

struct RepcheckRow {
    unsigned m = 0;
    std::size_t dim = 0;
    GaussRat casimir;
    GaussRat rescaled;
    bool ok = false;
};

// One row per m: Casimir scalar, rescaled scalar at hbar, all checks.
inline std::vector<RepcheckRow> repcheck(unsigned max_m, const GaussRat &hbar)
{
    std::vector<RepcheckRow> rows;
    for (unsigned m = 0; m <= max_m; ++m) {
        RepcheckRow row;
        row.m = m;
        row.dim = m + 1;
        SL2Matrices p = p_map(m);
        bool ok = satisfies_sl2_relations(p);
        try {
            row.casimir = casimir_scalar(m);
        } catch (const NotScalar &) {
            ok = false;
        }
        ok = ok && row.casimir == expected_casimir(m) && d_centrality_check(m);
        RescaledReport r = rescaled_casimir_check(m, hbar);
        row.rescaled = r.scalar;
        row.ok = ok && r.ok();
        rows.push_back(row);
    }
    return rows;
}

} // namespace dqorbit::tdo
