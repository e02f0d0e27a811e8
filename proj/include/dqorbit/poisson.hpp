#pragma once

#include <cstddef>
#include <vector>

#include <dqorbit/commpoly.hpp>
#include <dqorbit/lie_algebra.hpp>
#include <dqorbit/matrix.hpp>

namespace dqorbit
{

// Lie-Poisson bracket {f, g} = sum_ij d_i f d_j g sum_k c_ij^k x_k.
inline CommPoly poisson_bracket(const CommPoly &f, const CommPoly &g, const LieAlgebra &L)
{
    const std::size_t n = L.dim();
    CommPoly r(n);
    if (f.is_zero() || g.is_zero()) {
        return r;
    }
    std::vector<CommPoly> df, dg;
    for (std::size_t i = 0; i < n; ++i) {
        df.push_back(f.derivative(i));
        dg.push_back(g.derivative(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (df[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || dg[j].is_zero()) {
                continue;
            }
            CommPoly xij(n);
            for (std::size_t k = 0; k < n; ++k) {
                const auto &c = L.structure_constant(i, j, k);
                if (!c.is_zero()) {
                    xij.add_term(unit_monomial(n, k), HPoly(c));
                }
            }
            if (!xij.is_zero()) {
                r += df[i] * dg[j] * xij;
            }
        }
    }
    return r;
}

// Infinitesimal coadjoint invariance: {p, x_i} = 0 for every coordinate.
inline bool is_invariant(const CommPoly &p, const LieAlgebra &L)
{
    for (std::size_t i = 0; i < L.dim(); ++i) {
        if (!poisson_bracket(p, CommPoly::variable(L.dim(), i), L).is_zero()) {
            return false;
        }
    }
    return true;
}

// Rank of the Jacobian matrix (d p_a / d x_i) at `point`. Coefficients must
// be free of h and of symbolic parameters.
inline std::size_t jacobian_rank(const std::vector<CommPoly> &polys, const std::vector<GaussRat> &point)
{
    const std::size_t n = point.size();
    Matrix J(polys.size(), n);
    for (std::size_t a = 0; a < polys.size(); ++a) {
        for (std::size_t i = 0; i < n; ++i) {
            HPoly v = polys[a].derivative(i).evaluate(point);
            if (!v.is_constant()) {
                throw NotConstant("jacobian_rank: coefficients depend on h");
            }
            J(a, i) = v.constant_term().constant();
        }
    }
    return J.rank();
}

// Identifies a point of the dual space (coordinates x_i = xi(X_i)) with the
// Lie algebra element K^{-1} xi through the unscaled trace form.
inline std::vector<GaussRat> dual_to_algebra(const LieAlgebra &L, const std::vector<GaussRat> &point)
{
    LieAlgebra unscaled(L);
    unscaled.set_killing_scale(GaussRat(1));
    return killing_form(unscaled).inverse().apply(point);
}

// Coefficients q_0..q_n of det(T - ad(xi)) for a point xi of the dual space.
inline std::vector<GaussRat> characteristic_coefficients(const LieAlgebra &L, const std::vector<GaussRat> &point)
{
    return adjoint_matrix(L, dual_to_algebra(L, point)).characteristic_polynomial();
}

struct RegularityReport {
    bool regular = false;           // q_m(xi) != 0
    GaussRat q_m;                   // coefficient of T^m
    bool jacobian_checked = false;  // invariants were available
    std::size_t jacobian_rank = 0;
};

// Regularity via the lowest characteristic coefficient q_m (m = rank). When
// invariants are declared, their differentials must be independent at every
// regular point; a regular point with dependent differentials raises
// InconsistentRegularity.
inline RegularityReport regularity(const LieAlgebra &L, const std::vector<GaussRat> &point)
{
    if (point.size() != L.dim()) {
        throw std::invalid_argument("regularity: point has wrong dimension");
    }
    RegularityReport rep;
    auto q = characteristic_coefficients(L, point);
    rep.q_m = q.at(L.rank());
    rep.regular = !rep.q_m.is_zero();
    if (!L.invariants().empty()) {
        rep.jacobian_checked = true;
        rep.jacobian_rank = jacobian_rank(L.invariants(), point);
        if (rep.regular && rep.jacobian_rank != L.rank()) {
            throw InconsistentRegularity("point is regular but the invariant differentials have rank "
                                         + std::to_string(rep.jacobian_rank) + " < "
                                         + std::to_string(L.rank()));
        }
    }
    return rep;
}

inline bool is_regular(const LieAlgebra &L, const std::vector<GaussRat> &point)
{
    return regularity(L, point).regular;
}

} // namespace dqorbit
