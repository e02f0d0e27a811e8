#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include <dqorbit/errors.hpp>

namespace dqorbit
{

// Exact Gaussian rational re + im*i. Both parts are kept canonical by GMP
// (lowest terms, positive denominator), so equality is structural.
class GaussRat
{
public:
    GaussRat() = default;
    GaussRat(long n) : m_re(n) {}
    GaussRat(mpq_class re) : m_re(std::move(re))
    {
        m_re.canonicalize();
    }
    GaussRat(mpq_class re, mpq_class im) : m_re(std::move(re)), m_im(std::move(im))
    {
        m_re.canonicalize();
        m_im.canonicalize();
    }

    static GaussRat rational(long num, long den)
    {
        if (den == 0) {
            throw DivisionByZero("zero denominator");
        }
        return GaussRat(mpq_class(num, den));
    }
    static GaussRat imag_unit()
    {
        return GaussRat(mpq_class(0), mpq_class(1));
    }

    const mpq_class &re() const noexcept
    {
        return m_re;
    }
    const mpq_class &im() const noexcept
    {
        return m_im;
    }

    bool is_zero() const noexcept
    {
        return sgn(m_re) == 0 && sgn(m_im) == 0;
    }
    bool is_one() const noexcept
    {
        return m_re == 1 && sgn(m_im) == 0;
    }
    bool is_real() const noexcept
    {
        return sgn(m_im) == 0;
    }

    GaussRat conj() const
    {
        return GaussRat(m_re, -m_im);
    }
    GaussRat inverse() const
    {
        if (is_zero()) {
            throw DivisionByZero("inverse of zero");
        }
        mpq_class n = m_re * m_re + m_im * m_im;
        return GaussRat(m_re / n, -m_im / n);
    }

    GaussRat operator-() const
    {
        return GaussRat(-m_re, -m_im);
    }
    GaussRat &operator+=(const GaussRat &o)
    {
        m_re += o.m_re;
        m_im += o.m_im;
        return *this;
    }
    GaussRat &operator-=(const GaussRat &o)
    {
        m_re -= o.m_re;
        m_im -= o.m_im;
        return *this;
    }
    GaussRat &operator*=(const GaussRat &o)
    {
        if (is_real() && o.is_real()) {
            m_re *= o.m_re;
            return *this;
        }
        mpq_class re = m_re * o.m_re - m_im * o.m_im;
        mpq_class im = m_re * o.m_im + m_im * o.m_re;
        m_re = std::move(re);
        m_im = std::move(im);
        return *this;
    }
    GaussRat &operator/=(const GaussRat &o)
    {
        if (o.is_real()) {
            if (sgn(o.m_re) == 0) {
                throw DivisionByZero("division by zero");
            }
            m_re /= o.m_re;
            m_im /= o.m_re;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend GaussRat operator+(GaussRat a, const GaussRat &b)
    {
        return a += b;
    }
    friend GaussRat operator-(GaussRat a, const GaussRat &b)
    {
        return a -= b;
    }
    friend GaussRat operator*(GaussRat a, const GaussRat &b)
    {
        return a *= b;
    }
    friend GaussRat operator/(GaussRat a, const GaussRat &b)
    {
        return a /= b;
    }
    friend bool operator==(const GaussRat &a, const GaussRat &b)
    {
        return a.m_re == b.m_re && a.m_im == b.m_im;
    }

    // Total order used only to make containers deterministic.
    friend bool lex_less(const GaussRat &a, const GaussRat &b)
    {
        int c = cmp(a.m_re, b.m_re);
        return c != 0 ? c < 0 : cmp(a.m_im, b.m_im) < 0;
    }

    // Canonical text: "a/b", "a/b*i", "a/b+c/d*i"; the unit imaginary part
    // prints as a bare "i".
    std::string str() const
    {
        std::string out;
        if (sgn(m_im) == 0) {
            return m_re.get_str();
        }
        if (sgn(m_re) != 0) {
            out = m_re.get_str();
            if (sgn(m_im) > 0) {
                out += '+';
            }
        }
        if (m_im == 1) {
            out += "i";
        } else if (m_im == -1) {
            out += "-i";
        } else {
            out += m_im.get_str() + "*i";
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const GaussRat &g)
    {
        return os << g.str();
    }

private:
    mpq_class m_re{0};
    mpq_class m_im{0};
};

} // namespace dqorbit
