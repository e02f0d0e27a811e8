#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <dqorbit/commpoly.hpp>
#include <dqorbit/errors.hpp>
#include <dqorbit/groebner.hpp>
#include <dqorbit/lie_algebra.hpp>
#include <dqorbit/poisson.hpp>
#include <dqorbit/uea.hpp>

namespace dqorbit
{

// Data of I_h = (P_i - c_i(h)) and I_0 = (p_i - c_i0).
struct OrbitSpec {
    LieAlgebra algebra;
    // p_1..p_m; the algebra's declared invariants when empty.
    std::vector<CommPoly> invariants;
    // c_i(h)
    std::vector<HPoly> constants;
    // c_i0; taken as c_i(0) when absent.
    std::optional<std::vector<Scalar>> classical_constants;
    // Optional point of the orbit that must be regular.
    std::optional<std::vector<GaussRat>> witness;
};

enum class QuantizationMap { Standard, Symmetric };

inline std::string to_string(QuantizationMap m)
{
    return m == QuantizationMap::Standard ? "standard" : "symmetric";
}

inline QuantizationMap quantization_map_from_string(const std::string &s)
{
    if (s == "standard") {
        return QuantizationMap::Standard;
    }
    if (s == "symmetric") {
        return QuantizationMap::Symmetric;
    }
    throw UnknownIdentifier("unknown quantization map " + s);
}

struct BuildOptions {
    // Reject c_i(0) != c_i0. Disabled only to build deliberately broken
    // algebras for negative controls.
    bool check_constants = true;
    unsigned symmetrize_cap = 8;
};

// Element of U_h/I_h in the standard-monomial basis A. The polynomial is
// supported on A; its coefficients live in C[h].
class OrbitElement
{
public:
    OrbitElement() = default;
    explicit OrbitElement(CommPoly p) : m_poly(std::move(p)) {}

    const CommPoly &poly() const noexcept
    {
        return m_poly;
    }
    bool is_zero() const noexcept
    {
        return m_poly.is_zero();
    }
    HPoly coeff(const Monomial &m) const
    {
        return m_poly.coeff(m);
    }

    OrbitElement operator-() const
    {
        return OrbitElement(-m_poly);
    }
    OrbitElement &operator+=(const OrbitElement &o)
    {
        m_poly += o.m_poly;
        return *this;
    }
    OrbitElement &operator-=(const OrbitElement &o)
    {
        m_poly -= o.m_poly;
        return *this;
    }
    friend OrbitElement operator+(OrbitElement a, const OrbitElement &b)
    {
        return a += b;
    }
    friend OrbitElement operator-(OrbitElement a, const OrbitElement &b)
    {
        return a -= b;
    }
    friend OrbitElement operator*(OrbitElement a, const HPoly &c)
    {
        a.m_poly *= c;
        return a;
    }
    friend OrbitElement operator*(const HPoly &c, OrbitElement a)
    {
        a.m_poly *= c;
        return a;
    }
    friend bool operator==(const OrbitElement &a, const OrbitElement &b)
    {
        return a.m_poly == b.m_poly;
    }

    OrbitElement evaluate_h(const GaussRat &h0) const
    {
        return OrbitElement(m_poly.evaluate_h(h0));
    }
    OrbitElement h_component(std::size_t k) const
    {
        return OrbitElement(m_poly.h_component(k));
    }
    OrbitElement divided_by_h() const
    {
        return OrbitElement(m_poly.divided_by_h());
    }

private:
    CommPoly m_poly;
};

// U_h/I_h with its reduction to the basis A.
class OrbitAlgebra
{
public:
    static OrbitAlgebra build(OrbitSpec spec, const MonomialOrder &order, const BuildOptions &opts = {})
    {
        return OrbitAlgebra(std::move(spec), order, opts);
    }

    const OrbitSpec &spec() const noexcept
    {
        return m_state->spec;
    }
    const LieAlgebra &algebra() const noexcept
    {
        return m_state->spec.algebra;
    }
    const Enveloping &enveloping() const noexcept
    {
        return m_state->U;
    }
    const MonomialOrder &order() const noexcept
    {
        return m_state->ideal0.order();
    }
    const IdealBasis &ideal0() const noexcept
    {
        return m_state->ideal0;
    }
    // P_i = Sym(p_i)
    const std::vector<UElement> &casimirs() const noexcept
    {
        return m_state->casimirs;
    }
    const std::vector<Scalar> &classical_constants() const noexcept
    {
        return m_state->c0;
    }
    std::size_t dim() const noexcept
    {
        return algebra().dim();
    }
    std::vector<std::string> coordinate_names() const
    {
        return algebra().coordinate_names();
    }

    std::vector<Monomial> basis(unsigned max_degree) const
    {
        return standard_monomials(ideal0(), max_degree);
    }
    bool in_basis(const Monomial &m) const
    {
        return ideal0().is_standard(m);
    }
    bool is_supported_on_basis(const CommPoly &p) const
    {
        for (const auto &t : p.terms()) {
            if (!in_basis(t.first)) {
                return false;
            }
        }
        return true;
    }

    // Normal form modulo I_0 (coefficients in C[h] handled termwise).
    CommPoly normal_form0(const CommPoly &f) const
    {
        return normal_form(f, ideal0());
    }

    // Reduction modulo I_h. For a PBW monomial X_J write
    //   x_J = r + sum_i b_i (p_i - c_i0)   (division modulo I_0),
    //   X_J - lift(r) - sum_i lift(b_i)(P_i - c_i(h)) = h B,
    // with deg B < |J|, so X_J = r + h reduce(B) in U_h/I_h.
    OrbitElement reduce(const UElement &a) const
    {
        CommPoly r(dim());
        for (const auto &[m, c] : a.terms()) {
            r += reduce_monomial(m) * c;
        }
        return OrbitElement(std::move(r));
    }

    UElement lift(const OrbitElement &e) const
    {
        return enveloping().lift(e.poly());
    }

    UElement multiply_lifted(const OrbitElement &a, const OrbitElement &b) const
    {
        return enveloping().multiply(lift(a), lift(b));
    }

    // Product in U_h/I_h.
    OrbitElement multiply(const OrbitElement &a, const OrbitElement &b) const
    {
        return reduce(multiply_lifted(a, b));
    }

    // standard: ordered lift of the normal form modulo I_0;
    // symmetric: Sym(f). Both are then reduced modulo I_h.
    OrbitElement quantize(const CommPoly &f, QuantizationMap map = QuantizationMap::Standard) const
    {
        if (map == QuantizationMap::Standard) {
            return reduce(enveloping().lift(normal_form0(f)));
        }
        CommPoly r(dim());
        for (const auto &[m, c] : f.terms()) {
            r += symmetric_monomial(m) * c;
        }
        return OrbitElement(std::move(r));
    }

    // Inverse of quantize on A-supported polynomials. The symmetric map is
    // the identity plus h times a degree-lowering map, so the fixed-point
    // iteration f <- f + (e - Q(f)) terminates.
    CommPoly dequantize(const OrbitElement &e, QuantizationMap map = QuantizationMap::Standard) const
    {
        if (!is_supported_on_basis(e.poly())) {
            throw std::invalid_argument("dequantize: element is not supported on the basis A");
        }
        if (map == QuantizationMap::Standard) {
            return e.poly();
        }
        CommPoly f = e.poly();
        const long cap = std::max<long>(e.poly().degree(), 0) + 2;
        for (long it = 0; it <= cap; ++it) {
            CommPoly residual = e.poly() - quantize(f, map).poly();
            if (residual.is_zero()) {
                return f;
            }
            f += residual;
        }
        throw NonTermination("dequantize: symmetric map did not converge");
    }

    // f * g = Q^{-1}(reduce(lift Q(f) . lift Q(g))). For the standard map Q
    // is the identity on A and the result is the product in U_h/I_h.
    OrbitElement star(const CommPoly &f, const CommPoly &g, QuantizationMap map = QuantizationMap::Standard) const
    {
        OrbitElement prod = multiply(quantize(f, map), quantize(g, map));
        return OrbitElement(dequantize(prod, map));
    }

    std::string str(const OrbitElement &e) const
    {
        return e.poly().str(coordinate_names(), order());
    }
    std::string str(const CommPoly &p) const
    {
        return p.str(coordinate_names(), order());
    }

    std::size_t cache_size() const
    {
        std::lock_guard<std::mutex> lock(m_state->mutex);
        return m_state->cache.size();
    }

private:
    struct State {
        State(OrbitSpec s, Enveloping u, BuildOptions o) : spec(std::move(s)), U(std::move(u)), opts(o) {}
        OrbitSpec spec;
        Enveloping U;
        BuildOptions opts;
        std::vector<Scalar> c0;
        IdealBasis ideal0;
        std::vector<UElement> casimirs;
        std::vector<UElement> relators; // P_i - c_i(h)
        std::mutex mutex;
        std::map<PBWMonomial, CommPoly, PBWLess> cache;
        std::map<Monomial, CommPoly> symmetric;
    };

    OrbitAlgebra(OrbitSpec spec, const MonomialOrder &order, const BuildOptions &opts)
    {
        if (spec.invariants.empty()) {
            spec.invariants = spec.algebra.invariants();
        }
        const LieAlgebra &L = spec.algebra;
        const std::size_t m = spec.invariants.size();
        if (m == 0) {
            throw InvalidAlgebra("orbit needs at least one invariant polynomial");
        }
        if (spec.constants.size() != m) {
            throw InvalidAlgebra("orbit needs one constant c_i(h) per invariant");
        }
        if (order.nvars() != L.dim()) {
            throw std::invalid_argument("monomial order has wrong number of variables");
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (!spec.invariants[i].is_h_free()) {
                throw NotInvariant("invariant p_" + std::to_string(i + 1) + " depends on h");
            }
            if (!is_invariant(spec.invariants[i], L)) {
                throw NotInvariant("p_" + std::to_string(i + 1) + " is not coadjoint invariant");
            }
        }
        std::vector<Scalar> c0;
        for (std::size_t i = 0; i < m; ++i) {
            c0.push_back(spec.constants[i].constant_term());
        }
        if (spec.classical_constants) {
            if (spec.classical_constants->size() != m) {
                throw InconsistentConstants("one classical constant per invariant required");
            }
            for (std::size_t i = 0; i < m && opts.check_constants; ++i) {
                if (!((*spec.classical_constants)[i] == c0[i])) {
                    throw InconsistentConstants("c_" + std::to_string(i + 1) + "(0) = " + c0[i].str()
                                                + " differs from the classical constant "
                                                + (*spec.classical_constants)[i].str());
                }
            }
            c0 = *spec.classical_constants;
        }
        if (spec.witness) {
            const auto &w = *spec.witness;
            if (!is_regular(L, w)) {
                throw NotRegular("witness point is not regular");
            }
            for (std::size_t i = 0; i < m; ++i) {
                HPoly v = spec.invariants[i].evaluate(w);
                if (c0[i].is_constant() && v.is_constant() && !(v.constant_term() == c0[i])) {
                    throw InconsistentConstants("witness point does not lie on the orbit: p_" + std::to_string(i + 1)
                                                + " = " + v.str() + " but c_" + std::to_string(i + 1)
                                                + "0 = " + c0[i].str());
                }
            }
        }

        std::vector<CommPoly> gens;
        for (std::size_t i = 0; i < m; ++i) {
            gens.push_back(spec.invariants[i] - CommPoly(L.dim(), HPoly(c0[i])));
        }
        Enveloping U(L);
        m_state = std::make_shared<State>(std::move(spec), U, opts);
        m_state->c0 = c0;
        m_state->ideal0 = groebner(gens, order);
        for (std::size_t i = 0; i < m; ++i) {
            UElement P = U.symmetrize(m_state->spec.invariants[i], opts.symmetrize_cap);
            if (!U.is_central(P)) {
                throw NotCentral("Sym(p_" + std::to_string(i + 1) + ") is not central");
            }
            m_state->casimirs.push_back(P);
            m_state->relators.push_back(P - UElement(m_state->spec.constants[i]));
        }
    }

    CommPoly symmetric_monomial(const Monomial &m) const
    {
        {
            std::lock_guard<std::mutex> lock(m_state->mutex);
            auto it = m_state->symmetric.find(m);
            if (it != m_state->symmetric.end()) {
                return it->second;
            }
        }
        CommPoly r = reduce(enveloping().symmetrize(CommPoly::monomial(m), m_state->opts.symmetrize_cap)).poly();
        std::lock_guard<std::mutex> lock(m_state->mutex);
        m_state->symmetric.emplace(m, r);
        return r;
    }

    CommPoly reduce_monomial(const PBWMonomial &J) const
    {
        {
            std::lock_guard<std::mutex> lock(m_state->mutex);
            auto it = m_state->cache.find(J);
            if (it != m_state->cache.end()) {
                return it->second;
            }
        }
        const Enveloping &U = m_state->U;
        Monomial xj = U.to_monomial(J);
        CommPoly result(dim());
        if (in_basis(xj)) {
            result.add_term(xj, HPoly(1));
        } else {
            Division d = divide(CommPoly::monomial(xj), ideal0());
            UElement A = UElement::monomial(J) - U.lift(d.remainder);
            for (std::size_t i = 0; i < d.quotients.size(); ++i) {
                if (!d.quotients[i].is_zero()) {
                    A -= U.multiply(U.lift(d.quotients[i]), m_state->relators[i]);
                }
            }
            if (!A.h_component(0).is_zero()) {
                throw NotDivisible("reduction of " + UElement::monomial(J).str(U.labels())
                                   + " is not divisible by h; I_h and I_0 do not match at h = 0");
            }
            UElement B = A.divided_by_h();
            if (B.degree() >= static_cast<long>(J.size())) {
                throw NonTermination("reduction ladder did not lower the degree at "
                                     + UElement::monomial(J).str(U.labels()));
            }
            result = d.remainder;
            result += reduce(B).poly() * HPoly::h();
        }
        std::lock_guard<std::mutex> lock(m_state->mutex);
        m_state->cache.emplace(J, result);
        return result;
    }

    std::shared_ptr<State> m_state;
};

// Witness of a failed deformation axiom.
struct DeformationViolation {
    std::string axiom; // "classical-limit", "poisson", "associativity", "error"
    std::vector<Monomial> inputs;
    std::string detail;
};

struct DeformationReport {
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    std::vector<DeformationViolation> violations;
    bool ok() const
    {
        return violations.empty();
    }
};

// Checks on A-monomials: f*g = fg mod (h, I_0); (f*g - g*f)/h = {f,g} mod
// (h, I_0) for degrees <= max_degree; associativity for degrees <=
// assoc_degree. Exceptions are recorded as violations.
inline DeformationReport verify_deformation(const OrbitAlgebra &A, unsigned max_degree, unsigned assoc_degree,
                                            QuantizationMap map = QuantizationMap::Standard)
{
    DeformationReport rep;
    auto mono = [](const Monomial &m) { return CommPoly::monomial(m); };
    auto record = [&](std::string axiom, std::vector<Monomial> in, std::string detail) {
        rep.violations.push_back({std::move(axiom), std::move(in), std::move(detail)});
    };
    std::vector<Monomial> basis;
    try {
        basis = A.basis(max_degree);
    } catch (const std::exception &e) {
        record("error", {}, e.what());
        return rep;
    }
    for (const auto &a : basis) {
        for (const auto &b : basis) {
            ++rep.pairs_checked;
            try {
                CommPoly f = mono(a), g = mono(b);
                OrbitElement fg = A.star(f, g, map);
                OrbitElement gf = A.star(g, f, map);
                CommPoly classical = A.normal_form0(f * g);
                if (!(fg.h_component(0).poly() == classical.h_component(0))) {
                    record("classical-limit", {a, b},
                           A.str(fg.h_component(0)) + " != " + A.str(classical.h_component(0)));
                }
                OrbitElement comm = fg - gf;
                if (!comm.h_component(0).is_zero()) {
                    record("poisson", {a, b}, "commutator not divisible by h");
                    continue;
                }
                CommPoly first = comm.divided_by_h().h_component(0).poly();
                CommPoly pb = A.normal_form0(poisson_bracket(f, g, A.algebra())).h_component(0);
                if (!(first == pb)) {
                    record("poisson", {a, b}, A.str(first) + " != " + A.str(pb));
                }
            } catch (const std::exception &e) {
                record("error", {a, b}, e.what());
            }
        }
    }
    std::vector<Monomial> small;
    for (const auto &m : basis) {
        if (total_degree(m) <= assoc_degree) {
            small.push_back(m);
        }
    }
    for (const auto &a : small) {
        for (const auto &b : small) {
            for (const auto &c : small) {
                ++rep.triples_checked;
                try {
                    CommPoly f = mono(a), g = mono(b), k = mono(c);
                    OrbitElement left = A.star(A.star(f, g, map).poly(), k, map);
                    OrbitElement right = A.star(f, A.star(g, k, map).poly(), map);
                    if (!(left == right)) {
                        record("associativity", {a, b, c}, A.str(left) + " != " + A.str(right));
                    }
                } catch (const std::exception &e) {
                    record("error", {a, b, c}, e.what());
                }
            }
        }
    }
    return rep;
}

} // namespace dqorbit
