#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <dqorbit/errors.hpp>
#include <dqorbit/gauss_rat.hpp>

namespace dqorbit
{

// Dense exact matrix, row-major.
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<GaussRat> data)
        : m_rows(rows), m_cols(cols), m_data(std::move(data))
    {
        if (m_data.size() != rows * cols) {
            throw std::invalid_argument("matrix data has wrong size");
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = GaussRat(1);
        }
        return m;
    }
    static Matrix diagonal(const std::vector<GaussRat> &d)
    {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            m(i, i) = d[i];
        }
        return m;
    }

    std::size_t rows() const noexcept
    {
        return m_rows;
    }
    std::size_t cols() const noexcept
    {
        return m_cols;
    }
    bool is_square() const noexcept
    {
        return m_rows == m_cols;
    }

    GaussRat &operator()(std::size_t i, std::size_t j)
    {
        return m_data[i * m_cols + j];
    }
    const GaussRat &operator()(std::size_t i, std::size_t j) const
    {
        return m_data[i * m_cols + j];
    }

    bool is_zero() const
    {
        for (const auto &x : m_data) {
            if (!x.is_zero()) {
                return false;
            }
        }
        return true;
    }

    // True iff the matrix equals s*Id for some s; the scalar is written to *s.
    bool is_scalar(GaussRat *s = nullptr) const
    {
        if (!is_square()) {
            return false;
        }
        GaussRat d = m_rows ? (*this)(0, 0) : GaussRat();
        for (std::size_t i = 0; i < m_rows; ++i) {
            for (std::size_t j = 0; j < m_cols; ++j) {
                const auto &x = (*this)(i, j);
                if (i == j ? !(x == d) : !x.is_zero()) {
                    return false;
                }
            }
        }
        if (s) {
            *s = d;
        }
        return true;
    }

    GaussRat trace() const
    {
        GaussRat t;
        for (std::size_t i = 0; i < std::min(m_rows, m_cols); ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    Matrix transpose() const
    {
        Matrix t(m_cols, m_rows);
        for (std::size_t i = 0; i < m_rows; ++i) {
            for (std::size_t j = 0; j < m_cols; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    Matrix &operator+=(const Matrix &o)
    {
        check_same(o);
        for (std::size_t k = 0; k < m_data.size(); ++k) {
            m_data[k] += o.m_data[k];
        }
        return *this;
    }
    Matrix &operator-=(const Matrix &o)
    {
        check_same(o);
        for (std::size_t k = 0; k < m_data.size(); ++k) {
            m_data[k] -= o.m_data[k];
        }
        return *this;
    }
    Matrix &operator*=(const GaussRat &s)
    {
        for (auto &x : m_data) {
            x *= s;
        }
        return *this;
    }
    Matrix operator-() const
    {
        Matrix r(*this);
        return r *= GaussRat(-1);
    }

    friend Matrix operator+(Matrix a, const Matrix &b)
    {
        return a += b;
    }
    friend Matrix operator-(Matrix a, const Matrix &b)
    {
        return a -= b;
    }
    friend Matrix operator*(Matrix a, const GaussRat &s)
    {
        return a *= s;
    }
    friend Matrix operator*(const GaussRat &s, Matrix a)
    {
        return a *= s;
    }
    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.m_cols != b.m_rows) {
            throw std::invalid_argument("matrix product dimension mismatch");
        }
        Matrix r(a.m_rows, b.m_cols);
        for (std::size_t i = 0; i < a.m_rows; ++i) {
            for (std::size_t k = 0; k < a.m_cols; ++k) {
                const auto &x = a(i, k);
                if (x.is_zero()) {
                    continue;
                }
                for (std::size_t j = 0; j < b.m_cols; ++j) {
                    if (!b(k, j).is_zero()) {
                        r(i, j) += x * b(k, j);
                    }
                }
            }
        }
        return r;
    }
    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_data == b.m_data;
    }

    std::vector<GaussRat> apply(const std::vector<GaussRat> &v) const
    {
        if (v.size() != m_cols) {
            throw std::invalid_argument("matrix-vector dimension mismatch");
        }
        std::vector<GaussRat> r(m_rows);
        for (std::size_t i = 0; i < m_rows; ++i) {
            for (std::size_t j = 0; j < m_cols; ++j) {
                r[i] += (*this)(i, j) * v[j];
            }
        }
        return r;
    }

    // Row-reduces a copy; returns the rank and (for square input) the
    // determinant.
    std::size_t rank() const
    {
        Matrix m(*this);
        return m.eliminate(nullptr, nullptr);
    }

    GaussRat determinant() const
    {
        if (!is_square()) {
            throw std::invalid_argument("determinant of non-square matrix");
        }
        Matrix m(*this);
        GaussRat det;
        m.eliminate(&det, nullptr);
        return det;
    }

    Matrix inverse() const
    {
        if (!is_square()) {
            throw SingularMatrix("inverse of non-square matrix");
        }
        Matrix m(*this);
        Matrix inv = identity(m_rows);
        if (m.eliminate(nullptr, &inv) != m_rows) {
            throw SingularMatrix("matrix is singular");
        }
        return inv;
    }

    // Coefficients c_0..c_n of det(T*Id - A) = sum_k c_k T^k, computed with
    // the Faddeev-LeVerrier recursion.
    std::vector<GaussRat> characteristic_polynomial() const
    {
        if (!is_square()) {
            throw std::invalid_argument("characteristic polynomial of non-square matrix");
        }
        const std::size_t n = m_rows;
        std::vector<GaussRat> c(n + 1);
        c[n] = GaussRat(1);
        Matrix m(n, n);
        for (std::size_t k = 1; k <= n; ++k) {
            m = (*this) * m;
            for (std::size_t i = 0; i < n; ++i) {
                m(i, i) += c[n - k + 1];
            }
            Matrix am = (*this) * m;
            c[n - k] = -am.trace() / GaussRat(static_cast<long>(k));
        }
        return c;
    }

    std::string str() const
    {
        std::string out;
        for (std::size_t i = 0; i < m_rows; ++i) {
            out += "[";
            for (std::size_t j = 0; j < m_cols; ++j) {
                if (j) {
                    out += ", ";
                }
                out += (*this)(i, j).str();
            }
            out += "]\n";
        }
        return out;
    }

private:
    void check_same(const Matrix &o) const
    {
        if (m_rows != o.m_rows || m_cols != o.m_cols) {
            throw std::invalid_argument("matrix dimension mismatch");
        }
    }

    // Gauss-Jordan elimination in place. Mirrors row operations on *aug when
    // given and accumulates the determinant in *det.
    std::size_t eliminate(GaussRat *det, Matrix *aug)
    {
        GaussRat d(1);
        std::size_t r = 0;
        for (std::size_t c = 0; c < m_cols && r < m_rows; ++c) {
            std::size_t p = r;
            while (p < m_rows && (*this)(p, c).is_zero()) {
                ++p;
            }
            if (p == m_rows) {
                d = GaussRat();
                continue;
            }
            if (p != r) {
                swap_rows(p, r);
                if (aug) {
                    aug->swap_rows(p, r);
                }
                d = -d;
            }
            GaussRat piv = (*this)(r, c);
            d *= piv;
            GaussRat inv = piv.inverse();
            scale_row(r, inv);
            if (aug) {
                aug->scale_row(r, inv);
            }
            for (std::size_t i = 0; i < m_rows; ++i) {
                if (i == r || (*this)(i, c).is_zero()) {
                    continue;
                }
                GaussRat f = (*this)(i, c);
                add_row(i, r, -f);
                if (aug) {
                    aug->add_row(i, r, -f);
                }
            }
            ++r;
        }
        if (r < m_rows) {
            d = GaussRat();
        }
        if (det) {
            *det = d;
        }
        return r;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < m_cols; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }
    void scale_row(std::size_t a, const GaussRat &s)
    {
        for (std::size_t j = 0; j < m_cols; ++j) {
            (*this)(a, j) *= s;
        }
    }
    void add_row(std::size_t dst, std::size_t src, const GaussRat &f)
    {
        for (std::size_t j = 0; j < m_cols; ++j) {
            if (!(*this)(src, j).is_zero()) {
                (*this)(dst, j) += f * (*this)(src, j);
            }
        }
    }

    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<GaussRat> m_data;
};

} // namespace dqorbit
