#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <dqorbit/detail/format.hpp>
#include <dqorbit/errors.hpp>
#include <dqorbit/gauss_rat.hpp>

namespace dqorbit
{

// Product of symbolic parameters, sorted by name, exponents positive.
using ParamMono = std::vector<std::pair<std::string, unsigned>>;

inline unsigned param_degree(const ParamMono &m)
{
    unsigned d = 0;
    for (const auto &p : m) {
        d += p.second;
    }
    return d;
}

inline bool param_mono_less(const ParamMono &a, const ParamMono &b)
{
    auto da = param_degree(a), db = param_degree(b);
    if (da != db) {
        return da < db;
    }
    return a < b;
}

inline ParamMono param_mono_mul(const ParamMono &a, const ParamMono &b)
{
    ParamMono out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

// Exact scalar: a polynomial over the Gaussian rationals in opaque symbolic
// parameters (orbit constants such as "a" or "c0"). With no parameters it
// is a single GaussRat.
class Scalar
{
public:
    using Term = std::pair<ParamMono, GaussRat>;

    Scalar() = default;
    Scalar(long n) : Scalar(GaussRat(n)) {}
    Scalar(GaussRat g)
    {
        if (!g.is_zero()) {
            m_terms.emplace_back(ParamMono{}, std::move(g));
        }
    }

    static Scalar param(const std::string &name, unsigned exponent = 1)
    {
        Scalar s;
        if (exponent == 0) {
            return Scalar(1);
        }
        s.m_terms.emplace_back(ParamMono{{name, exponent}}, GaussRat(1));
        return s;
    }

    const std::vector<Term> &terms() const noexcept
    {
        return m_terms;
    }

    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    bool is_constant() const noexcept
    {
        return m_terms.empty() || (m_terms.size() == 1 && m_terms.front().first.empty());
    }
    // Throws NotConstant when parameters are present.
    GaussRat constant() const
    {
        if (!is_constant()) {
            throw NotConstant("scalar depends on symbolic parameters: " + str());
        }
        return m_terms.empty() ? GaussRat() : m_terms.front().second;
    }

    // Replaces the named parameters by numbers; others are kept.
    Scalar substitute_params(const std::map<std::string, GaussRat> &values) const
    {
        Scalar r;
        for (const auto &[mono, c] : m_terms) {
            Scalar term(c);
            for (const auto &[name, e] : mono) {
                auto it = values.find(name);
                if (it == values.end()) {
                    term *= param(name, e);
                    continue;
                }
                for (unsigned k = 0; k < e; ++k) {
                    term *= Scalar(it->second);
                }
            }
            r += term;
        }
        return r;
    }

    std::vector<std::string> parameters() const
    {
        std::vector<std::string> out;
        for (const auto &t : m_terms) {
            for (const auto &p : t.first) {
                out.push_back(p.first);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    Scalar operator-() const
    {
        Scalar r(*this);
        for (auto &t : r.m_terms) {
            t.second = -t.second;
        }
        return r;
    }

    Scalar &operator+=(const Scalar &o)
    {
        merge(o, false);
        return *this;
    }
    Scalar &operator-=(const Scalar &o)
    {
        merge(o, true);
        return *this;
    }
    Scalar &operator*=(const Scalar &o)
    {
        *this = *this * o;
        return *this;
    }
    Scalar &operator*=(const GaussRat &g)
    {
        if (g.is_zero()) {
            m_terms.clear();
            return *this;
        }
        for (auto &t : m_terms) {
            t.second *= g;
        }
        return *this;
    }
    Scalar &operator/=(const GaussRat &g)
    {
        return *this *= g.inverse();
    }

    friend Scalar operator+(Scalar a, const Scalar &b)
    {
        return a += b;
    }
    friend Scalar operator-(Scalar a, const Scalar &b)
    {
        return a -= b;
    }
    friend Scalar operator*(const Scalar &a, const Scalar &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        if (a.is_constant() && b.is_constant()) {
            return Scalar(a.m_terms.front().second * b.m_terms.front().second);
        }
        Scalar r;
        for (const auto &x : a.m_terms) {
            Scalar partial;
            for (const auto &y : b.m_terms) {
                partial.m_terms.emplace_back(param_mono_mul(x.first, y.first), x.second * y.second);
            }
            std::sort(partial.m_terms.begin(), partial.m_terms.end(),
                      [](const Term &l, const Term &rr) { return param_mono_less(l.first, rr.first); });
            r += partial;
        }
        return r;
    }
    friend Scalar operator*(Scalar a, const GaussRat &g)
    {
        return a *= g;
    }
    friend Scalar operator/(Scalar a, const GaussRat &g)
    {
        return a /= g;
    }
    friend bool operator==(const Scalar &a, const Scalar &b)
    {
        return a.m_terms == b.m_terms;
    }

    // Each term as (coefficient, parameter factors) for expanded printing.
    std::vector<detail::PrintedTerm> printed_terms() const
    {
        std::vector<detail::PrintedTerm> out;
        for (const auto &t : m_terms) {
            detail::PrintedTerm pt{t.second, {}};
            for (const auto &p : t.first) {
                pt.factors.push_back(detail::power(p.first, p.second));
            }
            out.push_back(std::move(pt));
        }
        return out;
    }

    std::string str() const
    {
        return detail::render_sum(printed_terms());
    }
    friend std::ostream &operator<<(std::ostream &os, const Scalar &s)
    {
        return os << s.str();
    }

private:
    void merge(const Scalar &o, bool negate)
    {
        if (o.is_zero()) {
            return;
        }
        if (is_constant() && o.is_constant()) {
            GaussRat v = constant();
            if (negate) {
                v -= o.m_terms.front().second;
            } else {
                v += o.m_terms.front().second;
            }
            *this = Scalar(std::move(v));
            return;
        }
        std::vector<Term> out;
        out.reserve(m_terms.size() + o.m_terms.size());
        auto i = m_terms.begin();
        auto j = o.m_terms.begin();
        while (i != m_terms.end() || j != o.m_terms.end()) {
            if (j == o.m_terms.end() || (i != m_terms.end() && param_mono_less(i->first, j->first))) {
                out.push_back(std::move(*i++));
            } else if (i == m_terms.end() || param_mono_less(j->first, i->first)) {
                out.emplace_back(j->first, negate ? -j->second : j->second);
                ++j;
            } else {
                GaussRat v = negate ? i->second - j->second : i->second + j->second;
                if (!v.is_zero()) {
                    out.emplace_back(std::move(i->first), std::move(v));
                }
                ++i;
                ++j;
            }
        }
        m_terms = std::move(out);
    }

    std::vector<Term> m_terms;
};

} // namespace dqorbit
