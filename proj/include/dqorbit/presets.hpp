#pragma once

#include <string>
#include <vector>

#include <dqorbit/commpoly.hpp>
#include <dqorbit/errors.hpp>
#include <dqorbit/lie_algebra.hpp>

namespace dqorbit::presets
{

namespace detail
{

inline GaussRat q(long num, long den = 1)
{
    return GaussRat::rational(num, den);
}

inline GaussRat qi(long num, long den = 1)
{
    return GaussRat::rational(num, den) * GaussRat::imag_unit();
}

inline CommPoly quadratic(std::size_t n, std::size_t a, std::size_t b, const GaussRat &c)
{
    Monomial m(n, 0);
    ++m[a];
    ++m[b];
    return CommPoly::monomial(m, HPoly(c));
}

} // namespace detail

// [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H; invariant (1/4)x_H^2 + x_X x_Y.
inline LieAlgebra sl2()
{
    using detail::q;
    LieAlgebra L("sl2", {"H", "X", "Y"}, 1);
    L.set_bracket("H", "X", {{"X", q(2)}});
    L.set_bracket("H", "Y", {{"Y", q(-2)}});
    L.set_bracket("X", "Y", {{"H", q(1)}});
    L.set_invariants({detail::quadratic(3, 0, 0, q(1, 4)) + detail::quadratic(3, 1, 2, q(1))});
    L.set_casimir_scale(q(2));
    return L;
}

// Compact real form: [E,F] = G, [F,G] = E, [G,E] = F. With the -1/2
// normalisation the Killing form is the identity.
inline LieAlgebra su2()
{
    using detail::q;
    LieAlgebra L("su2", {"E", "F", "G"}, 1);
    L.set_bracket("E", "F", {{"G", q(1)}});
    L.set_bracket("F", "G", {{"E", q(1)}});
    L.set_bracket("G", "E", {{"F", q(1)}});
    L.set_invariants({detail::quadratic(3, 0, 0, q(-1)) + detail::quadratic(3, 1, 1, q(-1))
                      + detail::quadratic(3, 2, 2, q(-1))});
    L.set_killing_scale(q(-1, 2));
    L.set_casimir_scale(q(-1));
    return L;
}

// [G,Et] = Ft, [G,Ft] = -Et, [Et,Ft] = -G with Et = iE, Ft = iF.
inline LieAlgebra so21()
{
    using detail::q;
    LieAlgebra L("so21", {"G", "Et", "Ft"}, 1);
    L.set_bracket("G", "Et", {{"Ft", q(1)}});
    L.set_bracket("G", "Ft", {{"Et", q(-1)}});
    L.set_bracket("Et", "Ft", {{"G", q(-1)}});
    L.set_invariants({detail::quadratic(3, 0, 0, q(1)) + detail::quadratic(3, 1, 1, q(-1))
                      + detail::quadratic(3, 2, 2, q(-1))});
    L.set_killing_scale(q(-1, 2));
    L.set_casimir_scale(q(1));
    return L;
}

inline std::vector<std::string> names()
{
    return {"sl2", "su2", "so21"};
}

inline LieAlgebra by_name(const std::string &name)
{
    if (name == "sl2") {
        return sl2();
    }
    if (name == "su2") {
        return su2();
    }
    if (name == "so21") {
        return so21();
    }
    throw UnknownIdentifier("unknown preset " + name);
}

// (H,X,Y) -> (E,F,G): E = (X-Y)/2, F = (i/2)(X+Y), G = (i/2)H.
inline BasisChange sl2_to_su2()
{
    using detail::q;
    using detail::qi;
    return BasisChange(Matrix(3, 3, {q(0), q(1, 2), q(-1, 2), q(0), qi(1, 2), qi(1, 2), qi(1, 2), q(0), q(0)}));
}

// (E,F,G) -> (G,Et,Ft): Et = iE, Ft = iF.
inline BasisChange su2_to_so21()
{
    using detail::q;
    using detail::qi;
    return BasisChange(Matrix(3, 3, {q(0), q(0), q(1), qi(1), q(0), q(0), q(0), qi(1), q(0)}));
}

// The involution G -> -G, Et -> -Et, Ft -> Ft of so21.
inline BasisChange so21_involution()
{
    using detail::q;
    return BasisChange(Matrix::diagonal({q(-1), q(-1), q(1)}));
}

} // namespace dqorbit::presets
