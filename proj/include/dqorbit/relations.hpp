#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <dqorbit/detail/format.hpp>
#include <dqorbit/errors.hpp>
#include <dqorbit/orbit.hpp>

namespace dqorbit
{

struct NamedElement {
    std::string name;
    UElement value;
};

// Noncommutative polynomial in named generators; terms kept in the order
// they were produced.
struct GeneratorPoly {
    std::vector<std::pair<Word, HPoly>> terms;

    bool is_zero() const
    {
        return terms.empty();
    }

    // Value in U_h.
    UElement evaluate(const Enveloping &U, const std::vector<NamedElement> &gens) const
    {
        UElement r;
        for (const auto &[w, c] : terms) {
            UElement p = U.one();
            for (auto k : w) {
                p = U.multiply(p, gens.at(k).value);
            }
            r += p * c;
        }
        return r;
    }

    std::string str(const std::vector<NamedElement> &gens) const
    {
        std::vector<detail::PrintedTerm> printed;
        for (const auto &[w, c] : terms) {
            c.append_printed(printed, word_factors(w, gens));
        }
        return detail::render_sum(printed);
    }

    static std::vector<std::string> word_factors(const Word &w, const std::vector<NamedElement> &gens)
    {
        std::vector<std::string> f;
        for (std::size_t i = 0; i < w.size();) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) {
                ++j;
            }
            f.push_back(detail::power(gens.at(w[i]).name, static_cast<unsigned>(j - i)));
            i = j;
        }
        return f;
    }
    static std::string word_str(const Word &w, const std::vector<NamedElement> &gens)
    {
        std::string s;
        for (const auto &f : word_factors(w, gens)) {
            s += (s.empty() ? "" : "*") + f;
        }
        return s.empty() ? "1" : s;
    }
};

// Greedy rewriting of an element of U_h/I_h as a polynomial of degree <= 2
// in the generators. Candidate words are tried by length, then
// lexicographically; the first whose reduction has the current leading
// monomial (with constant leading coefficient) is subtracted. Words in
// `excluded` are skipped. Returns nothing when the greedy step gets stuck.
inline std::optional<GeneratorPoly> rewrite_in_generators(const OrbitAlgebra &A, const std::vector<NamedElement> &gens,
                                                          OrbitElement target, const std::vector<Word> &excluded = {})
{
    const Enveloping &U = A.enveloping();
    std::vector<std::pair<Word, OrbitElement>> cands;
    auto add_candidate = [&](const Word &w) {
        for (const auto &e : excluded) {
            if (e == w) {
                return;
            }
        }
        GeneratorPoly g{{{w, HPoly(1)}}};
        cands.emplace_back(w, A.reduce(g.evaluate(U, gens)));
    };
    add_candidate({});
    for (std::size_t a = 0; a < gens.size(); ++a) {
        add_candidate({a});
    }
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = 0; b < gens.size(); ++b) {
            add_candidate({a, b});
        }
    }

    GeneratorPoly out;
    const MonomialOrder &order = A.order();
    while (!target.is_zero()) {
        const auto [lm, lc] = target.poly().leading_term(order);
        bool found = false;
        for (const auto &[w, e] : cands) {
            if (e.is_zero()) {
                continue;
            }
            const auto &[cm, cc] = e.poly().leading_term(order);
            if (cm != lm || !cc.is_constant() || !cc.constant_term().is_constant()) {
                continue;
            }
            HPoly factor = lc * HPoly(GaussRat(1) / cc.constant_term().constant());
            out.terms.emplace_back(w, factor);
            target -= e * factor;
            found = true;
            break;
        }
        if (!found) {
            return std::nullopt;
        }
    }
    return out;
}

struct Relation {
    std::string lhs;
    OrbitElement value;
    std::optional<GeneratorPoly> rewriting;
    // rhs in the generators when a rewriting exists, otherwise in the A-basis
    std::string rhs;
};

// For every pair a < b the commutator g_b g_a - g_a g_b, then each square
// g_a^2 that can be rewritten without itself.
inline std::vector<Relation> relations_table(const std::vector<NamedElement> &gens, const OrbitAlgebra &A)
{
    const Enveloping &U = A.enveloping();
    std::vector<Relation> out;
    auto finish = [&](std::string lhs, OrbitElement value, std::optional<GeneratorPoly> rw) {
        std::string rhs = rw ? rw->str(gens) : A.str(value);
        out.push_back({std::move(lhs), std::move(value), std::move(rw), std::move(rhs)});
    };
    for (std::size_t b = 0; b < gens.size(); ++b) {
        for (std::size_t a = 0; a < b; ++a) {
            OrbitElement v = A.reduce(U.commutator(gens[b].value, gens[a].value));
            std::string lhs = gens[b].name + "*" + gens[a].name + " - " + gens[a].name + "*" + gens[b].name;
            finish(std::move(lhs), v, rewrite_in_generators(A, gens, v));
        }
    }
    for (std::size_t a = 0; a < gens.size(); ++a) {
        OrbitElement v = A.reduce(U.multiply(gens[a].value, gens[a].value));
        auto rw = rewrite_in_generators(A, gens, v, {{a, a}});
        if (rw) {
            finish(detail::power(gens[a].name, 2), v, std::move(rw));
        }
    }
    return out;
}

// V_1 = X_0^2, V_2 = X_1^2, V_3 = X_0 X_1, V_4 = X_2: for so(2,1) in the
// basis (G, Et, Ft) these generate the subalgebra fixed by diag(-1,-1,1).
inline std::vector<NamedElement> involution_generators(const Enveloping &U)
{
    if (U.dim() != 3) {
        throw std::invalid_argument("involution generators need a three-dimensional algebra");
    }
    return {{"V1", UElement::monomial({0, 0})},
            {"V2", UElement::monomial({1, 1})},
            {"V3", UElement::monomial({0, 1})},
            {"V4", UElement::monomial({2})}};
}

struct InvariantSubalgebraReport {
    std::vector<std::string> non_invariant_generators;
    // classical relations that fail modulo I_0, printed
    std::vector<std::string> failed_classical_relations;
    std::vector<Relation> table;
    bool ok() const
    {
        return non_invariant_generators.empty() && failed_classical_relations.empty();
    }
};

// Checks the fixed subalgebra of an involution on U_h/I_h: invariance of
// the generators V_k, the classical relations v_3^2 = v_1 v_2 and
// v_1 - v_2 - v_4^2 = c_0 modulo I_0, and produces the quantum table.
inline InvariantSubalgebraReport invariant_subalgebra_demo(const OrbitAlgebra &A, const BasisChange &aut)
{
    const Enveloping &U = A.enveloping();
    const std::size_t n = A.dim();
    if (aut.dim() != n) {
        throw std::invalid_argument("automorphism has the wrong dimension");
    }
    if (!(aut.then(aut).matrix == Matrix::identity(n))) {
        throw NotInvolution("map is not an involution");
    }
    for (std::size_t i = 0; i < A.casimirs().size(); ++i) {
        if (!(U.apply_linear_map(A.casimirs()[i], aut) == A.casimirs()[i])) {
            throw CasimirNotFixed("map does not fix the Casimir P_" + std::to_string(i + 1));
        }
    }
    if (!is_automorphism(A.algebra(), aut)) {
        throw NotAutomorphism("map does not preserve the bracket");
    }

    InvariantSubalgebraReport rep;
    std::vector<NamedElement> gens = involution_generators(U);
    for (const auto &g : gens) {
        if (!(U.apply_automorphism(g.value, aut) == g.value)) {
            rep.non_invariant_generators.push_back(g.name);
        }
    }

    std::vector<CommPoly> v;
    for (const auto &g : gens) {
        v.push_back(U.project_classical(g.value));
    }
    const Scalar &c0 = A.classical_constants().at(0);
    std::vector<std::pair<std::string, CommPoly>> classical = {
        {"v3^2 - v1*v2", v[2] * v[2] - v[0] * v[1]},
        {"v1 - v2 - v4^2 - c0", v[0] - v[1] - v[3] * v[3] - CommPoly(n, HPoly(c0))},
    };
    for (const auto &[name, rel] : classical) {
        CommPoly r = A.normal_form0(rel);
        if (!r.is_zero()) {
            rep.failed_classical_relations.push_back(name + " = " + A.str(r));
        }
    }
    rep.table = relations_table(gens, A);
    return rep;
}

} // namespace dqorbit
