#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <dqorbit/detail/format.hpp>
#include <dqorbit/errors.hpp>
#include <dqorbit/scalar.hpp>

namespace dqorbit
{

// Polynomial in the deformation parameter h; coefficient k multiplies h^k.
// Trailing zeros are always trimmed, so the zero polynomial is empty.
class HPoly
{
public:
    HPoly() = default;
    HPoly(long n) : HPoly(Scalar(n)) {}
    HPoly(GaussRat g) : HPoly(Scalar(std::move(g))) {}
    HPoly(Scalar s)
    {
        if (!s.is_zero()) {
            m_coeffs.push_back(std::move(s));
        }
    }
    explicit HPoly(std::vector<Scalar> coeffs) : m_coeffs(std::move(coeffs))
    {
        trim();
    }

    // h^k.
    static HPoly h(std::size_t k = 1)
    {
        std::vector<Scalar> c(k + 1);
        c[k] = Scalar(1);
        return HPoly(std::move(c));
    }

    const std::vector<Scalar> &coeffs() const noexcept
    {
        return m_coeffs;
    }
    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    // -1 for the zero polynomial.
    long degree() const noexcept
    {
        return static_cast<long>(m_coeffs.size()) - 1;
    }
    bool is_constant() const noexcept
    {
        return m_coeffs.size() <= 1;
    }
    Scalar coeff(std::size_t k) const
    {
        return k < m_coeffs.size() ? m_coeffs[k] : Scalar();
    }
    Scalar constant_term() const
    {
        return coeff(0);
    }

    HPoly operator-() const
    {
        HPoly r(*this);
        for (auto &c : r.m_coeffs) {
            c = -c;
        }
        return r;
    }
    HPoly &operator+=(const HPoly &o)
    {
        if (o.m_coeffs.size() > m_coeffs.size()) {
            m_coeffs.resize(o.m_coeffs.size());
        }
        for (std::size_t k = 0; k < o.m_coeffs.size(); ++k) {
            m_coeffs[k] += o.m_coeffs[k];
        }
        trim();
        return *this;
    }
    HPoly &operator-=(const HPoly &o)
    {
        if (o.m_coeffs.size() > m_coeffs.size()) {
            m_coeffs.resize(o.m_coeffs.size());
        }
        for (std::size_t k = 0; k < o.m_coeffs.size(); ++k) {
            m_coeffs[k] -= o.m_coeffs[k];
        }
        trim();
        return *this;
    }
    HPoly &operator*=(const HPoly &o)
    {
        *this = *this * o;
        return *this;
    }

    friend HPoly operator+(HPoly a, const HPoly &b)
    {
        return a += b;
    }
    friend HPoly operator-(HPoly a, const HPoly &b)
    {
        return a -= b;
    }
    friend HPoly operator*(const HPoly &a, const HPoly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Scalar> out(a.m_coeffs.size() + b.m_coeffs.size() - 1);
        for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
            if (a.m_coeffs[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
                out[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
            }
        }
        return HPoly(std::move(out));
    }
    friend bool operator==(const HPoly &a, const HPoly &b)
    {
        return a.m_coeffs == b.m_coeffs;
    }

    HPoly shifted(std::size_t k) const
    {
        if (is_zero() || k == 0) {
            return *this;
        }
        std::vector<Scalar> out(k);
        out.insert(out.end(), m_coeffs.begin(), m_coeffs.end());
        return HPoly(std::move(out));
    }

    // Exact quotient by h; the constant term must vanish.
    HPoly divided_by_h() const
    {
        if (is_zero()) {
            return {};
        }
        if (!m_coeffs.front().is_zero()) {
            throw NotDivisible("polynomial " + str() + " is not divisible by h");
        }
        return HPoly(std::vector<Scalar>(m_coeffs.begin() + 1, m_coeffs.end()));
    }

    // Horner evaluation at h = h0.
    Scalar evaluate(const GaussRat &h0) const
    {
        Scalar acc;
        for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
            acc *= h0;
            acc += *it;
        }
        return acc;
    }

    HPoly substitute_params(const std::map<std::string, GaussRat> &values) const
    {
        std::vector<Scalar> c;
        for (const auto &s : m_coeffs) {
            c.push_back(s.substitute_params(values));
        }
        return HPoly(std::move(c));
    }

    std::vector<std::string> parameters() const
    {
        std::vector<std::string> out;
        for (const auto &c : m_coeffs) {
            auto p = c.parameters();
            out.insert(out.end(), p.begin(), p.end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Expanded summands, lowest power of h first, each followed by `tail`.
    void append_printed(std::vector<detail::PrintedTerm> &out, const std::vector<std::string> &tail = {}) const
    {
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            for (auto &t : m_coeffs[k].printed_terms()) {
                if (k > 0) {
                    t.factors.push_back(detail::power("h", static_cast<unsigned>(k)));
                }
                t.factors.insert(t.factors.end(), tail.begin(), tail.end());
                out.push_back(std::move(t));
            }
        }
    }

    std::string str() const
    {
        std::vector<detail::PrintedTerm> terms;
        append_printed(terms);
        return detail::render_sum(terms);
    }
    friend std::ostream &operator<<(std::ostream &os, const HPoly &p)
    {
        return os << p.str();
    }

private:
    void trim()
    {
        while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
            m_coeffs.pop_back();
        }
    }

    std::vector<Scalar> m_coeffs;
};

} // namespace dqorbit
