#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <dqorbit/detail/format.hpp>
#include <dqorbit/errors.hpp>
#include <dqorbit/hpoly.hpp>

namespace dqorbit
{

// Exponent vector of a commutative monomial in n variables.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial &m)
{
    return std::accumulate(m.begin(), m.end(), 0u);
}

inline bool divides(const Monomial &a, const Monomial &b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

inline Monomial mono_mul(const Monomial &a, const Monomial &b)
{
    Monomial r(a);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] += b[i];
    }
    return r;
}

// b / a; the caller guarantees a | b.
inline Monomial mono_div(const Monomial &b, const Monomial &a)
{
    Monomial r(b);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] -= a[i];
    }
    return r;
}

inline Monomial mono_lcm(const Monomial &a, const Monomial &b)
{
    Monomial r(a);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = std::max(a[i], b[i]);
    }
    return r;
}

inline Monomial unit_monomial(std::size_t n, std::size_t var)
{
    Monomial m(n, 0);
    m[var] = 1;
    return m;
}

// Degree-lexicographic order. precedence[0] is the greatest variable; among
// monomials of equal total degree the one with the larger exponent in the
// earliest differing variable (in precedence order) is greater.
class MonomialOrder
{
public:
    MonomialOrder() = default;
    explicit MonomialOrder(std::vector<std::size_t> precedence) : m_precedence(std::move(precedence))
    {
        std::vector<std::size_t> sorted(m_precedence);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] != i) {
                throw std::invalid_argument("monomial order precedence must be a permutation");
            }
        }
    }

    // Declaration order x_0 > x_1 > ... > x_{n-1}.
    static MonomialOrder declaration(std::size_t n)
    {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), std::size_t{0});
        return MonomialOrder(std::move(p));
    }

    const std::vector<std::size_t> &precedence() const noexcept
    {
        return m_precedence;
    }
    std::size_t nvars() const noexcept
    {
        return m_precedence.size();
    }

    // Three-way comparison: negative if a < b.
    int compare(const Monomial &a, const Monomial &b) const
    {
        auto da = total_degree(a), db = total_degree(b);
        if (da != db) {
            return da < db ? -1 : 1;
        }
        for (auto v : m_precedence) {
            if (a[v] != b[v]) {
                return a[v] < b[v] ? -1 : 1;
            }
        }
        return 0;
    }
    bool less(const Monomial &a, const Monomial &b) const
    {
        return compare(a, b) < 0;
    }

    friend bool operator==(const MonomialOrder &a, const MonomialOrder &b)
    {
        return a.m_precedence == b.m_precedence;
    }

private:
    std::vector<std::size_t> m_precedence;
};

// Storage order for CommPoly terms: degree, then lexicographic on the raw
// exponent vector. Independent of any active MonomialOrder.
struct StorageLess {
    bool operator()(const Monomial &a, const Monomial &b) const
    {
        auto da = total_degree(a), db = total_degree(b);
        if (da != db) {
            return da < db;
        }
        return a < b;
    }
};

// Polynomial on the dual of the Lie algebra with coefficients in C[h]
// (and optional symbolic parameters).
class CommPoly
{
public:
    using Terms = std::map<Monomial, HPoly, StorageLess>;

    CommPoly() = default;
    explicit CommPoly(std::size_t nvars) : m_nvars(nvars) {}
    CommPoly(std::size_t nvars, HPoly c) : m_nvars(nvars)
    {
        add_term(Monomial(nvars, 0), std::move(c));
    }

    static CommPoly variable(std::size_t nvars, std::size_t var)
    {
        CommPoly p(nvars);
        p.add_term(unit_monomial(nvars, var), HPoly(1));
        return p;
    }
    static CommPoly monomial(Monomial m, HPoly c = HPoly(1))
    {
        CommPoly p(m.size());
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    std::size_t nvars() const noexcept
    {
        return m_nvars;
    }
    const Terms &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }

    // -1 for the zero polynomial.
    long degree() const
    {
        long d = -1;
        for (const auto &t : m_terms) {
            d = std::max<long>(d, total_degree(t.first));
        }
        return d;
    }

    HPoly coeff(const Monomial &m) const
    {
        auto it = m_terms.find(m);
        return it == m_terms.end() ? HPoly() : it->second;
    }

    void add_term(const Monomial &m, const HPoly &c)
    {
        if (m.size() != m_nvars) {
            throw std::invalid_argument("monomial has wrong number of variables");
        }
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }

    // True when no coefficient involves h.
    bool is_h_free() const
    {
        for (const auto &t : m_terms) {
            if (!t.second.is_constant()) {
                return false;
            }
        }
        return true;
    }

    // Greatest monomial under `order`; requires a nonzero polynomial.
    const std::pair<const Monomial, HPoly> &leading_term(const MonomialOrder &order) const
    {
        if (m_terms.empty()) {
            throw std::logic_error("leading term of zero polynomial");
        }
        auto best = m_terms.begin();
        for (auto it = std::next(best); it != m_terms.end(); ++it) {
            if (order.less(best->first, it->first)) {
                best = it;
            }
        }
        return *best;
    }

    CommPoly operator-() const
    {
        CommPoly r(*this);
        for (auto &t : r.m_terms) {
            t.second = -t.second;
        }
        return r;
    }
    CommPoly &operator+=(const CommPoly &o)
    {
        adopt_nvars(o);
        for (const auto &t : o.m_terms) {
            add_term(t.first, t.second);
        }
        return *this;
    }
    CommPoly &operator-=(const CommPoly &o)
    {
        adopt_nvars(o);
        for (const auto &t : o.m_terms) {
            add_term(t.first, -t.second);
        }
        return *this;
    }
    CommPoly &operator*=(const HPoly &c)
    {
        if (c.is_zero()) {
            m_terms.clear();
            return *this;
        }
        for (auto it = m_terms.begin(); it != m_terms.end();) {
            it->second *= c;
            it = it->second.is_zero() ? m_terms.erase(it) : std::next(it);
        }
        return *this;
    }

    friend CommPoly operator+(CommPoly a, const CommPoly &b)
    {
        return a += b;
    }
    friend CommPoly operator-(CommPoly a, const CommPoly &b)
    {
        return a -= b;
    }
    friend CommPoly operator*(CommPoly a, const HPoly &c)
    {
        return a *= c;
    }
    friend CommPoly operator*(const HPoly &c, CommPoly a)
    {
        return a *= c;
    }
    friend CommPoly operator*(const CommPoly &a, const CommPoly &b)
    {
        CommPoly r(std::max(a.m_nvars, b.m_nvars));
        if (a.is_zero() || b.is_zero()) {
            return r;
        }
        if (a.m_nvars != b.m_nvars) {
            throw std::invalid_argument("product of polynomials in different variable counts");
        }
        for (const auto &x : a.m_terms) {
            for (const auto &y : b.m_terms) {
                r.add_term(mono_mul(x.first, y.first), x.second * y.second);
            }
        }
        return r;
    }
    friend bool operator==(const CommPoly &a, const CommPoly &b)
    {
        return a.m_terms == b.m_terms && (a.m_nvars == b.m_nvars || a.m_terms.empty());
    }

    CommPoly pow(unsigned e) const
    {
        CommPoly r(m_nvars, HPoly(1));
        for (unsigned k = 0; k < e; ++k) {
            r = r * *this;
        }
        return r;
    }

    CommPoly derivative(std::size_t var) const
    {
        CommPoly r(m_nvars);
        for (const auto &t : m_terms) {
            if (t.first[var] == 0) {
                continue;
            }
            Monomial m(t.first);
            HPoly c = t.second * HPoly(static_cast<long>(m[var]));
            --m[var];
            r.add_term(m, c);
        }
        return r;
    }

    // Value at a point of the dual space (coordinates x_i = point[i]).
    HPoly evaluate(const std::vector<GaussRat> &point) const
    {
        if (point.size() != m_nvars) {
            throw std::invalid_argument("evaluation point has wrong dimension");
        }
        HPoly r;
        for (const auto &t : m_terms) {
            GaussRat v(1);
            for (std::size_t i = 0; i < m_nvars; ++i) {
                for (unsigned e = 0; e < t.first[i]; ++e) {
                    v *= point[i];
                }
            }
            r += t.second * HPoly(v);
        }
        return r;
    }

    // Substitutes h = h0 in every coefficient.
    CommPoly evaluate_h(const GaussRat &h0) const
    {
        CommPoly r(m_nvars);
        for (const auto &t : m_terms) {
            r.add_term(t.first, HPoly(t.second.evaluate(h0)));
        }
        return r;
    }

    CommPoly substitute_params(const std::map<std::string, GaussRat> &values) const
    {
        CommPoly r(m_nvars);
        for (const auto &t : m_terms) {
            r.add_term(t.first, t.second.substitute_params(values));
        }
        return r;
    }

    // Replaces x_i by values[i] (all in a common variable count).
    CommPoly substitute(const std::vector<CommPoly> &values, std::size_t target_nvars) const
    {
        if (values.size() != m_nvars) {
            throw std::invalid_argument("substitution needs one value per variable");
        }
        CommPoly r(target_nvars);
        for (const auto &t : m_terms) {
            CommPoly term(target_nvars, t.second);
            for (std::size_t i = 0; i < m_nvars; ++i) {
                for (unsigned e = 0; e < t.first[i]; ++e) {
                    term = term * values[i];
                }
            }
            r += term;
        }
        return r;
    }

    // Coefficient of h^k in every term.
    CommPoly h_component(std::size_t k) const
    {
        CommPoly r(m_nvars);
        for (const auto &t : m_terms) {
            r.add_term(t.first, HPoly(t.second.coeff(k)));
        }
        return r;
    }

    CommPoly divided_by_h() const
    {
        CommPoly r(m_nvars);
        for (const auto &t : m_terms) {
            r.add_term(t.first, t.second.divided_by_h());
        }
        return r;
    }

    std::vector<std::string> parameters() const
    {
        std::vector<std::string> out;
        for (const auto &t : m_terms) {
            auto p = t.second.parameters();
            out.insert(out.end(), p.begin(), p.end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Terms sorted for output: total degree ascending, and within a degree
    // the greatest monomial under `order` first.
    std::vector<std::pair<Monomial, HPoly>> sorted_terms(const MonomialOrder &order) const
    {
        std::vector<std::pair<Monomial, HPoly>> v(m_terms.begin(), m_terms.end());
        std::stable_sort(v.begin(), v.end(), [&](const auto &a, const auto &b) {
            auto da = total_degree(a.first), db = total_degree(b.first);
            if (da != db) {
                return da < db;
            }
            return order.compare(a.first, b.first) > 0;
        });
        return v;
    }

    std::string str(const std::vector<std::string> &names, const MonomialOrder &order) const
    {
        std::vector<detail::PrintedTerm> printed;
        for (const auto &[m, c] : sorted_terms(order)) {
            std::vector<std::string> tail;
            for (std::size_t v = 0; v < m.size(); ++v) {
                if (m[v]) {
                    tail.push_back(detail::power(names.at(v), m[v]));
                }
            }
            c.append_printed(printed, tail);
        }
        return detail::render_sum(printed);
    }
    std::string str(const std::vector<std::string> &names) const
    {
        return str(names, MonomialOrder::declaration(m_nvars));
    }

private:
    void adopt_nvars(const CommPoly &o)
    {
        if (m_terms.empty() && m_nvars == 0) {
            m_nvars = o.m_nvars;
        }
        if (!o.m_terms.empty() && o.m_nvars != m_nvars) {
            throw std::invalid_argument("sum of polynomials in different variable counts");
        }
    }

    std::size_t m_nvars = 0;
    Terms m_terms;
};

} // namespace dqorbit
