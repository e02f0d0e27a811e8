#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include <dqorbit/commpoly.hpp>
#include <dqorbit/errors.hpp>

namespace dqorbit
{

// Reduced Groebner basis of an ideal with h-free coefficients, remembering
// how each basis element is built from the original generators.
class IdealBasis
{
public:
    IdealBasis() = default;

    const std::vector<CommPoly> &generators() const noexcept
    {
        return m_generators;
    }
    const std::vector<CommPoly> &basis() const noexcept
    {
        return m_basis;
    }
    const std::vector<Monomial> &leading_monomials() const noexcept
    {
        return m_leading;
    }
    // basis()[k] = sum_i cofactors()[k][i] * generators()[i]
    const std::vector<std::vector<CommPoly>> &cofactors() const noexcept
    {
        return m_cofactors;
    }
    const MonomialOrder &order() const noexcept
    {
        return m_order;
    }
    std::size_t nvars() const noexcept
    {
        return m_nvars;
    }
    bool is_zero_ideal() const noexcept
    {
        return m_basis.empty();
    }

    bool is_standard(const Monomial &m) const
    {
        for (const auto &lm : m_leading) {
            if (divides(lm, m)) {
                return false;
            }
        }
        return true;
    }

private:
    friend IdealBasis groebner(const std::vector<CommPoly> &, const MonomialOrder &);

    std::size_t m_nvars = 0;
    MonomialOrder m_order;
    std::vector<CommPoly> m_generators;
    std::vector<CommPoly> m_basis;
    std::vector<Monomial> m_leading;
    std::vector<std::vector<CommPoly>> m_cofactors;
};

namespace detail
{

// Polynomial together with its expression in the original generators.
struct Tracked {
    CommPoly poly;
    std::vector<CommPoly> cof;
};

inline GaussRat scalar_leading_coeff(const CommPoly &p, const MonomialOrder &order)
{
    const auto &c = p.leading_term(order).second;
    if (!c.is_constant()) {
        throw NotConstant("Groebner basis requires h-free coefficients");
    }
    return c.constant_term().constant();
}

inline void scale(Tracked &t, const HPoly &c)
{
    t.poly *= c;
    for (auto &x : t.cof) {
        x *= c;
    }
}

// t -= c * m * g
inline void subtract_multiple(Tracked &t, const HPoly &c, const Monomial &m, const Tracked &g)
{
    CommPoly mono = CommPoly::monomial(m, c);
    t.poly -= mono * g.poly;
    for (std::size_t i = 0; i < t.cof.size(); ++i) {
        t.cof[i] -= mono * g.cof[i];
    }
}

// Full reduction of t modulo the monic polynomials in G.
inline void reduce_fully(Tracked &t, const std::vector<Tracked> &G, const MonomialOrder &order, std::size_t skip)
{
    CommPoly rest = t.poly;
    CommPoly remainder(t.poly.nvars());
    Tracked acc{CommPoly(t.poly.nvars()), t.cof};
    while (!rest.is_zero()) {
        auto lt = rest.leading_term(order);
        bool reduced = false;
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (k == skip) {
                continue;
            }
            const auto &lm = G[k].poly.leading_term(order).first;
            if (divides(lm, lt.first)) {
                Monomial q = mono_div(lt.first, lm);
                CommPoly mono = CommPoly::monomial(q, lt.second);
                rest -= mono * G[k].poly;
                for (std::size_t i = 0; i < acc.cof.size(); ++i) {
                    acc.cof[i] -= mono * G[k].cof[i];
                }
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.add_term(lt.first, lt.second);
            rest.add_term(lt.first, -lt.second);
        }
    }
    t.poly = std::move(remainder);
    t.cof = std::move(acc.cof);
}

inline void make_monic(Tracked &t, const MonomialOrder &order)
{
    if (t.poly.is_zero()) {
        return;
    }
    GaussRat lc = scalar_leading_coeff(t.poly, order);
    if (!lc.is_one()) {
        scale(t, HPoly(lc.inverse()));
    }
}

} // namespace detail

// Buchberger completion followed by inter-reduction. Pairs with coprime
// leading monomials are skipped, as are pairs covered by the chain
// criterion.
inline IdealBasis groebner(const std::vector<CommPoly> &gens, const MonomialOrder &order)
{
    IdealBasis out;
    out.m_order = order;
    out.m_nvars = order.nvars();
    out.m_generators = gens;
    const std::size_t n = order.nvars();
    const std::size_t m = gens.size();

    std::vector<detail::Tracked> G;
    for (std::size_t i = 0; i < m; ++i) {
        if (gens[i].nvars() != n && !gens[i].is_zero()) {
            throw std::invalid_argument("groebner: generator has wrong number of variables");
        }
        if (!gens[i].is_h_free()) {
            throw NotConstant("groebner: generator coefficients must be free of h");
        }
        detail::Tracked t{gens[i], std::vector<CommPoly>(m, CommPoly(n))};
        t.cof[i] = CommPoly(n, HPoly(1));
        detail::reduce_fully(t, G, order, G.size());
        if (t.poly.is_zero()) {
            continue;
        }
        detail::make_monic(t, order);
        G.push_back(std::move(t));
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < G.size(); ++a) {
        for (std::size_t b = a + 1; b < G.size(); ++b) {
            pairs.emplace_back(a, b);
        }
    }
    auto lm = [&](std::size_t k) { return G[k].poly.leading_term(order).first; };
    while (!pairs.empty()) {
        auto [a, b] = pairs.back();
        pairs.pop_back();
        Monomial la = lm(a), lb = lm(b);
        Monomial l = mono_lcm(la, lb);
        if (mono_mul(la, lb) == l) {
            continue; // coprime leading monomials
        }
        bool chain = false;
        for (std::size_t c = 0; c < G.size() && !chain; ++c) {
            if (c == a || c == b || !divides(lm(c), l)) {
                continue;
            }
            auto pending = [&](std::size_t x, std::size_t y) {
                auto key = std::minmax(x, y);
                return std::find(pairs.begin(), pairs.end(), std::pair<std::size_t, std::size_t>(key.first, key.second))
                       != pairs.end();
            };
            chain = !pending(a, c) && !pending(b, c);
        }
        if (chain) {
            continue;
        }
        detail::Tracked s{CommPoly(n), std::vector<CommPoly>(m, CommPoly(n))};
        detail::Tracked ta = G[a], tb = G[b];
        detail::Tracked sa{CommPoly(n), std::vector<CommPoly>(m, CommPoly(n))};
        detail::subtract_multiple(sa, HPoly(-1), mono_div(l, la), ta);
        detail::subtract_multiple(sa, HPoly(1), mono_div(l, lb), tb);
        s = std::move(sa);
        detail::reduce_fully(s, G, order, G.size());
        if (s.poly.is_zero()) {
            continue;
        }
        detail::make_monic(s, order);
        G.push_back(std::move(s));
        for (std::size_t k = 0; k + 1 < G.size(); ++k) {
            pairs.emplace_back(k, G.size() - 1);
        }
    }

    // Drop elements whose leading monomial is divisible by another's.
    std::vector<detail::Tracked> minimal;
    for (std::size_t a = 0; a < G.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
            if (a == b) {
                continue;
            }
            auto la = lm(a), lb = lm(b);
            if (divides(lb, la) && (la != lb || b < a)) {
                redundant = true;
            }
        }
        if (!redundant) {
            minimal.push_back(G[a]);
        }
    }
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        detail::reduce_fully(minimal[k], minimal, order, k);
        detail::make_monic(minimal[k], order);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const detail::Tracked &x, const detail::Tracked &y) {
        return order.less(x.poly.leading_term(order).first, y.poly.leading_term(order).first);
    });
    for (auto &t : minimal) {
        out.m_leading.push_back(t.poly.leading_term(order).first);
        out.m_basis.push_back(std::move(t.poly));
        out.m_cofactors.push_back(std::move(t.cof));
    }
    return out;
}

// Remainder of multivariate division together with quotients expressed in
// the original generators: f = sum_i quotients[i] * generators[i] + remainder.
struct Division {
    CommPoly remainder;
    std::vector<CommPoly> quotients;
};

// Coefficients may depend on h; since the basis is h-free the division acts
// on each power of h separately.
inline Division divide(const CommPoly &f, const IdealBasis &I)
{
    const std::size_t n = I.nvars();
    const auto &order = I.order();
    Division d{CommPoly(n), std::vector<CommPoly>(I.generators().size(), CommPoly(n))};
    if (I.is_zero_ideal()) {
        d.remainder = f;
        return d;
    }
    std::vector<CommPoly> q(I.basis().size(), CommPoly(n));
    CommPoly rest = f;
    while (!rest.is_zero()) {
        auto lt = rest.leading_term(order);
        bool reduced = false;
        for (std::size_t k = 0; k < I.basis().size(); ++k) {
            const auto &lm = I.leading_monomials()[k];
            if (divides(lm, lt.first)) {
                CommPoly mono = CommPoly::monomial(mono_div(lt.first, lm), lt.second);
                rest -= mono * I.basis()[k];
                q[k] += mono;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            d.remainder.add_term(lt.first, lt.second);
            rest.add_term(lt.first, -lt.second);
        }
    }
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k].is_zero()) {
            continue;
        }
        for (std::size_t i = 0; i < d.quotients.size(); ++i) {
            d.quotients[i] += q[k] * I.cofactors()[k][i];
        }
    }
    return d;
}

inline CommPoly normal_form(const CommPoly &f, const IdealBasis &I)
{
    return divide(f, I).remainder;
}

// Monomials of degree <= max_degree not divisible by any leading monomial,
// ordered by degree and, within a degree, greatest first.
inline std::vector<Monomial> standard_monomials(const IdealBasis &I, unsigned max_degree)
{
    const std::size_t n = I.nvars();
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    // enumerate all exponent vectors with total degree <= max_degree
    auto rec = [&](auto &&self, std::size_t var, unsigned left) -> void {
        if (var == n) {
            if (I.is_standard(cur)) {
                out.push_back(cur);
            }
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            cur[var] = e;
            self(self, var + 1, left - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, max_degree);
    const auto &order = I.order();
    std::sort(out.begin(), out.end(), [&](const Monomial &a, const Monomial &b) {
        auto da = total_degree(a), db = total_degree(b);
        if (da != db) {
            return da < db;
        }
        return order.compare(a, b) > 0;
    });
    return out;
}

} // namespace dqorbit
