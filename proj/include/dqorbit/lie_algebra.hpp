#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <dqorbit/commpoly.hpp>
#include <dqorbit/errors.hpp>
#include <dqorbit/gauss_rat.hpp>
#include <dqorbit/matrix.hpp>

namespace dqorbit
{

// Finite-dimensional Lie algebra given by structure constants
// [X_i, X_j] = sum_k c_ij^k X_k. Antisymmetry is enforced on insertion.
class LieAlgebra
{
public:
    LieAlgebra() = default;
    LieAlgebra(std::string name, std::vector<std::string> labels, std::size_t rank = 1)
        : m_name(std::move(name)), m_labels(std::move(labels)), m_rank(rank),
          m_structure(m_labels.size() * m_labels.size() * m_labels.size())
    {
        if (m_labels.empty()) {
            throw InvalidAlgebra("Lie algebra needs at least one generator");
        }
        for (std::size_t a = 0; a < m_labels.size(); ++a) {
            for (std::size_t b = a + 1; b < m_labels.size(); ++b) {
                if (m_labels[a] == m_labels[b]) {
                    throw InvalidAlgebra("duplicate generator label " + m_labels[a]);
                }
            }
        }
    }

    const std::string &name() const noexcept
    {
        return m_name;
    }
    std::size_t dim() const noexcept
    {
        return m_labels.size();
    }
    const std::vector<std::string> &labels() const noexcept
    {
        return m_labels;
    }
    std::size_t rank() const noexcept
    {
        return m_rank;
    }
    void set_rank(std::size_t r)
    {
        m_rank = r;
    }

    // Coordinate function names on the dual space ("x_H" for label "H").
    std::vector<std::string> coordinate_names() const
    {
        std::vector<std::string> out;
        for (const auto &l : m_labels) {
            out.push_back("x_" + l);
        }
        return out;
    }

    std::size_t index_of(const std::string &label) const
    {
        for (std::size_t i = 0; i < m_labels.size(); ++i) {
            if (m_labels[i] == label) {
                return i;
            }
        }
        throw UnknownIdentifier("no generator named " + label);
    }

    const GaussRat &structure_constant(std::size_t i, std::size_t j, std::size_t k) const
    {
        return m_structure[(i * dim() + j) * dim() + k];
    }

    // Sets [X_i, X_j] = sum_k coeffs[k] X_k (and the antisymmetric partner).
    void set_bracket(std::size_t i, std::size_t j, const std::vector<GaussRat> &coeffs)
    {
        if (i >= dim() || j >= dim() || coeffs.size() != dim()) {
            throw InvalidAlgebra("bracket index out of range");
        }
        if (i == j) {
            for (const auto &c : coeffs) {
                if (!c.is_zero()) {
                    throw InvalidAlgebra("[X,X] must vanish");
                }
            }
            return;
        }
        for (std::size_t k = 0; k < dim(); ++k) {
            at(i, j, k) = coeffs[k];
            at(j, i, k) = -coeffs[k];
        }
    }
    void set_bracket(const std::string &a, const std::string &b, const std::vector<std::pair<std::string, GaussRat>> &rhs)
    {
        std::vector<GaussRat> coeffs(dim());
        for (const auto &[l, c] : rhs) {
            coeffs[index_of(l)] += c;
        }
        set_bracket(index_of(a), index_of(b), coeffs);
    }

    std::vector<GaussRat> bracket(std::size_t i, std::size_t j) const
    {
        std::vector<GaussRat> r(dim());
        for (std::size_t k = 0; k < dim(); ++k) {
            r[k] = structure_constant(i, j, k);
        }
        return r;
    }

    // Bracket of two coefficient vectors.
    std::vector<GaussRat> bracket(const std::vector<GaussRat> &u, const std::vector<GaussRat> &v) const
    {
        std::vector<GaussRat> r(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (u[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < dim(); ++j) {
                if (v[j].is_zero()) {
                    continue;
                }
                GaussRat uv = u[i] * v[j];
                for (std::size_t k = 0; k < dim(); ++k) {
                    const auto &c = structure_constant(i, j, k);
                    if (!c.is_zero()) {
                        r[k] += uv * c;
                    }
                }
            }
        }
        return r;
    }

    const std::vector<CommPoly> &invariants() const noexcept
    {
        return m_invariants;
    }
    void set_invariants(std::vector<CommPoly> inv)
    {
        for (const auto &p : inv) {
            if (p.nvars() != dim() && !p.is_zero()) {
                throw InvalidAlgebra("invariant polynomial has wrong number of variables");
            }
        }
        if (!inv.empty() && inv.size() != m_rank) {
            throw InvalidAlgebra("number of invariants (" + std::to_string(inv.size()) + ") differs from rank ("
                                 + std::to_string(m_rank) + ")");
        }
        m_invariants = std::move(inv);
    }

    // Normalisation of the Killing form: K = killing_scale * Tr(ad ad).
    const GaussRat &killing_scale() const noexcept
    {
        return m_killing_scale;
    }
    void set_killing_scale(GaussRat s)
    {
        m_killing_scale = std::move(s);
    }
    // Overall factor applied to the inverse-Killing quadratic Casimir.
    const GaussRat &casimir_scale() const noexcept
    {
        return m_casimir_scale;
    }
    void set_casimir_scale(GaussRat s)
    {
        m_casimir_scale = std::move(s);
    }

    friend bool operator==(const LieAlgebra &a, const LieAlgebra &b)
    {
        return a.m_labels == b.m_labels && a.m_structure == b.m_structure;
    }

private:
    GaussRat &at(std::size_t i, std::size_t j, std::size_t k)
    {
        return m_structure[(i * dim() + j) * dim() + k];
    }

    std::string m_name;
    std::vector<std::string> m_labels;
    std::size_t m_rank = 1;
    std::vector<GaussRat> m_structure;
    std::vector<CommPoly> m_invariants;
    GaussRat m_killing_scale{1};
    GaussRat m_casimir_scale{1};
};

// A triple (i, j, k) whose Jacobi sum is nonzero.
struct JacobiViolation {
    std::size_t i, j, k;
    std::vector<GaussRat> residual;
};

inline std::vector<JacobiViolation> jacobi_check(const LieAlgebra &L)
{
    const std::size_t n = L.dim();
    std::vector<JacobiViolation> out;
    auto unit = [n](std::size_t a) {
        std::vector<GaussRat> v(n);
        v[a] = GaussRat(1);
        return v;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                auto x = unit(i), y = unit(j), z = unit(k);
                auto t1 = L.bracket(x, L.bracket(y, z));
                auto t2 = L.bracket(y, L.bracket(z, x));
                auto t3 = L.bracket(z, L.bracket(x, y));
                bool zero = true;
                for (std::size_t c = 0; c < n; ++c) {
                    t1[c] += t2[c] + t3[c];
                    zero = zero && t1[c].is_zero();
                }
                if (!zero) {
                    out.push_back({i, j, k, std::move(t1)});
                }
            }
        }
    }
    return out;
}

// Matrix of ad(v): column j holds the coordinates of [v, X_j].
inline Matrix adjoint_matrix(const LieAlgebra &L, const std::vector<GaussRat> &v)
{
    const std::size_t n = L.dim();
    if (v.size() != n) {
        throw std::invalid_argument("adjoint_matrix: vector has wrong dimension");
    }
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const auto &c = L.structure_constant(i, j, k);
                if (!c.is_zero()) {
                    m(k, j) += v[i] * c;
                }
            }
        }
    }
    return m;
}

inline Matrix adjoint_matrix(const LieAlgebra &L, std::size_t generator)
{
    std::vector<GaussRat> v(L.dim());
    v.at(generator) = GaussRat(1);
    return adjoint_matrix(L, v);
}

// Trace form scaled by L.killing_scale(). Throws SingularForm for a
// degenerate form unless `require_nondegenerate` is false.
inline Matrix killing_form(const LieAlgebra &L, bool require_nondegenerate = true)
{
    const std::size_t n = L.dim();
    std::vector<Matrix> ad;
    for (std::size_t i = 0; i < n; ++i) {
        ad.push_back(adjoint_matrix(L, i));
    }
    Matrix K(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            K(i, j) = K(j, i) = (ad[i] * ad[j]).trace() * L.killing_scale();
        }
    }
    if (require_nondegenerate && K.determinant().is_zero()) {
        throw SingularForm("Killing form of " + L.name() + " is degenerate (algebra not semisimple)");
    }
    return K;
}

// casimir_scale * sum_ij g^ij x_i x_j with g^ij the inverse of the scaled
// Killing form.
inline CommPoly quadratic_casimir(const LieAlgebra &L)
{
    const std::size_t n = L.dim();
    Matrix g = killing_form(L).inverse();
    CommPoly p(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (g(i, j).is_zero()) {
                continue;
            }
            Monomial m(n, 0);
            ++m[i];
            ++m[j];
            p.add_term(m, HPoly(g(i, j) * L.casimir_scale()));
        }
    }
    return p;
}

// Linear map X_a -> sum_j rows(a, j) X_j given as a square matrix. Used both
// for changes of basis (new generators in terms of old) and automorphisms.
struct BasisChange {
    Matrix matrix;

    explicit BasisChange(Matrix m) : matrix(std::move(m))
    {
        if (!matrix.is_square()) {
            throw SingularMatrix("basis change must be square");
        }
    }
    static BasisChange identity(std::size_t n)
    {
        return BasisChange(Matrix::identity(n));
    }
    std::size_t dim() const
    {
        return matrix.rows();
    }
    bool invertible() const
    {
        return !matrix.determinant().is_zero();
    }
    BasisChange inverse() const
    {
        return BasisChange(matrix.inverse());
    }
    // Image of a coefficient vector v = sum v_a X_a.
    std::vector<GaussRat> image(const std::vector<GaussRat> &v) const
    {
        return matrix.transpose().apply(v);
    }
    BasisChange then(const BasisChange &next) const
    {
        // (next o this)(X_a) = sum_j M_aj next(X_j)
        return BasisChange(matrix * next.matrix);
    }
};

// True iff the linear map phi(X_a) = sum_j M_aj X_j preserves brackets.
inline bool is_automorphism(const LieAlgebra &L, const BasisChange &phi)
{
    const std::size_t n = L.dim();
    if (phi.dim() != n || !phi.invertible()) {
        return false;
    }
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<GaussRat> pa(n), ea(n);
        for (std::size_t j = 0; j < n; ++j) {
            pa[j] = phi.matrix(a, j);
        }
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<GaussRat> pb(n);
            for (std::size_t j = 0; j < n; ++j) {
                pb[j] = phi.matrix(b, j);
            }
            if (!(L.bracket(pa, pb) == phi.image(L.bracket(a, b)))) {
                return false;
            }
        }
    }
    return true;
}

// Substitutes x_i = sum_a C_ai y_a into p.
inline CommPoly transform_coordinates(const CommPoly &p, const BasisChange &C)
{
    const std::size_t n = C.dim();
    std::vector<CommPoly> values;
    for (std::size_t i = 0; i < n; ++i) {
        CommPoly xi(n);
        for (std::size_t a = 0; a < n; ++a) {
            if (!C.matrix(a, i).is_zero()) {
                xi.add_term(unit_monomial(n, a), HPoly(C.matrix(a, i)));
            }
        }
        values.push_back(std::move(xi));
    }
    return p.substitute(values, n);
}

// Re-expresses L in the basis Y_a = sum_i B_ai X_i. Structure constants,
// declared invariants and normalisations are carried over.
inline LieAlgebra change_basis(const LieAlgebra &L, const BasisChange &B, std::vector<std::string> labels,
                               std::string name = {})
{
    const std::size_t n = L.dim();
    if (B.dim() != n) {
        throw SingularMatrix("basis change has wrong dimension");
    }
    Matrix inv = B.matrix.inverse();
    LieAlgebra out(name.empty() ? L.name() : std::move(name), std::move(labels), L.rank());
    if (out.dim() != n) {
        throw InvalidAlgebra("basis change needs one label per generator");
    }
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<GaussRat> ya(n);
        for (std::size_t i = 0; i < n; ++i) {
            ya[i] = B.matrix(a, i);
        }
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<GaussRat> yb(n);
            for (std::size_t i = 0; i < n; ++i) {
                yb[i] = B.matrix(b, i);
            }
            auto old = L.bracket(ya, yb);
            // old coordinates -> new: X_k = sum_c inv(k, c) Y_c
            std::vector<GaussRat> coeffs(n);
            for (std::size_t k = 0; k < n; ++k) {
                if (old[k].is_zero()) {
                    continue;
                }
                for (std::size_t c = 0; c < n; ++c) {
                    coeffs[c] += old[k] * inv(k, c);
                }
            }
            out.set_bracket(a, b, coeffs);
        }
    }
    // x_i(xi) = xi(X_i), y_a = sum_i B_ai x_i, so x = B^{-1} y.
    std::vector<CommPoly> inv_new;
    BasisChange back(inv.transpose());
    for (const auto &p : L.invariants()) {
        inv_new.push_back(transform_coordinates(p, back));
    }
    out.set_invariants(std::move(inv_new));
    out.set_killing_scale(L.killing_scale());
    out.set_casimir_scale(L.casimir_scale());
    return out;
}

// Same vector space with bracket h0 * [ , ].
inline LieAlgebra scaled_bracket(const LieAlgebra &L, const GaussRat &h0)
{
    LieAlgebra out(L.name(), L.labels(), L.rank());
    for (std::size_t i = 0; i < L.dim(); ++i) {
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            auto c = L.bracket(i, j);
            for (auto &x : c) {
                x *= h0;
            }
            out.set_bracket(i, j, c);
        }
    }
    out.set_invariants(L.invariants());
    out.set_killing_scale(L.killing_scale());
    out.set_casimir_scale(L.casimir_scale());
    return out;
}

} // namespace dqorbit
