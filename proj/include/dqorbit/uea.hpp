#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <dqorbit/commpoly.hpp>
#include <dqorbit/detail/format.hpp>
#include <dqorbit/errors.hpp>
#include <dqorbit/hpoly.hpp>
#include <dqorbit/lie_algebra.hpp>

namespace dqorbit
{

// Arbitrary sequence of generator indices (an element of the tensor algebra).
using Word = std::vector<std::size_t>;

// Non-decreasing index sequence X_{i1} ... X_{ik}, i1 <= ... <= ik.
using PBWMonomial = std::vector<std::size_t>;

struct PBWLess {
    bool operator()(const PBWMonomial &a, const PBWMonomial &b) const
    {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    }
};

inline bool is_ordered(const Word &w)
{
    return std::is_sorted(w.begin(), w.end());
}

// Element of U_h in the PBW basis.
class UElement
{
public:
    using Terms = std::map<PBWMonomial, HPoly, PBWLess>;

    UElement() = default;
    explicit UElement(const HPoly &c)
    {
        add_term({}, c);
    }
    static UElement monomial(PBWMonomial m, HPoly c = HPoly(1))
    {
        if (!is_ordered(m)) {
            throw std::invalid_argument("PBW monomial must be non-decreasing");
        }
        UElement u;
        u.add_term(m, c);
        return u;
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
    long degree() const
    {
        return m_terms.empty() ? -1 : static_cast<long>(m_terms.rbegin()->first.size());
    }
    HPoly coeff(const PBWMonomial &m) const
    {
        auto it = m_terms.find(m);
        return it == m_terms.end() ? HPoly() : it->second;
    }

    void add_term(const PBWMonomial &m, const HPoly &c)
    {
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

    UElement operator-() const
    {
        UElement r(*this);
        for (auto &t : r.m_terms) {
            t.second = -t.second;
        }
        return r;
    }
    UElement &operator+=(const UElement &o)
    {
        for (const auto &t : o.m_terms) {
            add_term(t.first, t.second);
        }
        return *this;
    }
    UElement &operator-=(const UElement &o)
    {
        for (const auto &t : o.m_terms) {
            add_term(t.first, -t.second);
        }
        return *this;
    }
    UElement &operator*=(const HPoly &c)
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
    friend UElement operator+(UElement a, const UElement &b)
    {
        return a += b;
    }
    friend UElement operator-(UElement a, const UElement &b)
    {
        return a -= b;
    }
    friend UElement operator*(UElement a, const HPoly &c)
    {
        return a *= c;
    }
    friend UElement operator*(const HPoly &c, UElement a)
    {
        return a *= c;
    }
    friend bool operator==(const UElement &a, const UElement &b)
    {
        return a.m_terms == b.m_terms;
    }

    // Coefficientwise h = h0.
    UElement evaluate_h(const GaussRat &h0) const
    {
        UElement r;
        for (const auto &t : m_terms) {
            r.add_term(t.first, HPoly(t.second.evaluate(h0)));
        }
        return r;
    }
    UElement divided_by_h() const
    {
        UElement r;
        for (const auto &t : m_terms) {
            r.add_term(t.first, t.second.divided_by_h());
        }
        return r;
    }
    UElement h_component(std::size_t k) const
    {
        UElement r;
        for (const auto &t : m_terms) {
            r.add_term(t.first, HPoly(t.second.coeff(k)));
        }
        return r;
    }
    bool is_h_free() const
    {
        for (const auto &t : m_terms) {
            if (!t.second.is_constant()) {
                return false;
            }
        }
        return true;
    }

    // Highest PBW degree first; within a degree ascending index order.
    std::string str(const std::vector<std::string> &labels) const
    {
        std::vector<detail::PrintedTerm> printed;
        std::vector<std::pair<PBWMonomial, HPoly>> v(m_terms.begin(), m_terms.end());
        std::stable_sort(v.begin(), v.end(),
                         [](const auto &a, const auto &b) { return a.first.size() > b.first.size(); });
        for (const auto &[m, c] : v) {
            c.append_printed(printed, factors(m, labels));
        }
        return detail::render_sum(printed);
    }

    static std::vector<std::string> factors(const PBWMonomial &m, const std::vector<std::string> &labels)
    {
        std::vector<std::string> out;
        for (std::size_t k = 0; k < m.size();) {
            std::size_t e = 1;
            while (k + e < m.size() && m[k + e] == m[k]) {
                ++e;
            }
            out.push_back(detail::power(labels.at(m[k]), static_cast<unsigned>(e)));
            k += e;
        }
        return out;
    }

private:
    Terms m_terms;
};

enum class RewriteStrategy { Leftmost, Rightmost, Random };

// U_h of a Lie algebra: T(g)[h] modulo X_a X_b - X_b X_a - h[X_a, X_b].
// Copies share a synchronized product cache.
class Enveloping
{
public:
    explicit Enveloping(LieAlgebra L) : m_state(std::make_shared<State>(std::move(L))) {}

    const LieAlgebra &algebra() const noexcept
    {
        return m_state->algebra;
    }
    std::size_t dim() const noexcept
    {
        return m_state->algebra.dim();
    }
    const std::vector<std::string> &labels() const noexcept
    {
        return m_state->algebra.labels();
    }

    UElement generator(std::size_t i) const
    {
        check_index(i);
        return UElement::monomial({i});
    }
    UElement one() const
    {
        return UElement(HPoly(1));
    }

    // Rewrites a word with X_a X_b -> X_b X_a + h sum_k c_ab^k X_k (a > b).
    // Leftmost and Rightmost pick the first/last descent; Random picks any
    // descent using `seed`. Leftmost results are memoized.
    UElement normal_form_word(const Word &w, RewriteStrategy s = RewriteStrategy::Leftmost,
                              unsigned seed = 0) const
    {
        for (auto i : w) {
            check_index(i);
        }
        if (s == RewriteStrategy::Leftmost) {
            return rewrite_leftmost(w);
        }
        std::mt19937 rng(seed);
        std::map<Word, HPoly> pending{{w, HPoly(1)}};
        UElement out;
        while (!pending.empty()) {
            // longest words first so that every word is expanded once
            auto it = std::prev(pending.end());
            for (auto j = pending.begin(); j != pending.end(); ++j) {
                if (j->first.size() > it->first.size()) {
                    it = j;
                }
            }
            Word word = it->first;
            HPoly c = it->second;
            pending.erase(it);
            std::vector<std::size_t> descents;
            for (std::size_t p = 0; p + 1 < word.size(); ++p) {
                if (word[p] > word[p + 1]) {
                    descents.push_back(p);
                }
            }
            if (descents.empty()) {
                out.add_term(word, c);
                continue;
            }
            std::size_t p = s == RewriteStrategy::Rightmost
                                ? descents.back()
                                : descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
            for (auto &[next, coeff] : rewrite_once(word, p)) {
                auto [slot, inserted] = pending.try_emplace(next, coeff * c);
                if (!inserted) {
                    slot->second += coeff * c;
                    if (slot->second.is_zero()) {
                        pending.erase(slot);
                    }
                }
            }
        }
        return out;
    }

    UElement multiply(const UElement &a, const UElement &b) const
    {
        UElement r;
        for (const auto &[mb, cb] : b.terms()) {
            UElement partial = a;
            for (auto k : mb) {
                UElement next;
                for (const auto &[m, c] : partial.terms()) {
                    UElement p = times_generator(m, k);
                    p *= c;
                    next += p;
                }
                partial = std::move(next);
            }
            partial *= cb;
            r += partial;
        }
        return r;
    }

    UElement commutator(const UElement &a, const UElement &b) const
    {
        return multiply(a, b) - multiply(b, a);
    }

    UElement power(const UElement &a, unsigned e) const
    {
        UElement r = one();
        for (unsigned k = 0; k < e; ++k) {
            r = multiply(r, a);
        }
        return r;
    }

    // Ordered lift: x^e -> X_0^{e_0} X_1^{e_1} ... (already a PBW monomial).
    UElement lift(const CommPoly &f) const
    {
        UElement r;
        for (const auto &[m, c] : f.terms()) {
            r.add_term(to_pbw(m), c);
        }
        return r;
    }

    static PBWMonomial to_pbw(const Monomial &m)
    {
        PBWMonomial w;
        for (std::size_t i = 0; i < m.size(); ++i) {
            w.insert(w.end(), m[i], i);
        }
        return w;
    }
    Monomial to_monomial(const PBWMonomial &w) const
    {
        Monomial m(dim(), 0);
        for (auto i : w) {
            ++m.at(i);
        }
        return m;
    }

    // (1/p!) sum over permutations of each degree-p monomial, in normal form.
    // Equal factors make many permutations coincide, so only distinct
    // arrangements are visited, weighted by their multiplicity.
    UElement symmetrize(const CommPoly &f, unsigned degree_cap = 8) const
    {
        UElement r;
        for (const auto &[m, c] : f.terms()) {
            unsigned p = total_degree(m);
            if (p > degree_cap) {
                throw DegreeCapExceeded("symmetrizer degree " + std::to_string(p) + " exceeds cap "
                                        + std::to_string(degree_cap));
            }
            Word w = to_pbw(m);
            UElement sum;
            do {
                sum += normal_form_product(w);
            } while (std::next_permutation(w.begin(), w.end()));
            mpz_class weight = 1, total = 1;
            for (unsigned k = 2; k <= p; ++k) {
                total *= k;
            }
            for (auto e : m) {
                for (unsigned k = 2; k <= e; ++k) {
                    weight *= k;
                }
            }
            sum *= HPoly(GaussRat(mpq_class(weight, total))) * c;
            r += sum;
        }
        return r;
    }

    // h = 0 and X_i -> x_i.
    CommPoly project_classical(const UElement &a) const
    {
        CommPoly p(dim());
        for (const auto &[m, c] : a.terms()) {
            p.add_term(to_monomial(m), HPoly(c.constant_term()));
        }
        return p;
    }

    bool is_central(const UElement &a) const
    {
        for (std::size_t i = 0; i < dim(); ++i) {
            if (!commutator(a, generator(i)).is_zero()) {
                return false;
            }
        }
        return true;
    }

    // Extends X_a -> sum_j M_aj X_j multiplicatively without checking that
    // the map preserves brackets.
    UElement apply_linear_map(const UElement &a, const BasisChange &phi) const
    {
        if (phi.dim() != dim()) {
            throw std::invalid_argument("linear map has wrong dimension");
        }
        std::vector<UElement> images;
        for (std::size_t i = 0; i < dim(); ++i) {
            UElement img;
            for (std::size_t j = 0; j < dim(); ++j) {
                img.add_term({j}, HPoly(phi.matrix(i, j)));
            }
            images.push_back(std::move(img));
        }
        UElement r;
        for (const auto &[m, c] : a.terms()) {
            UElement t = one();
            for (auto i : m) {
                t = multiply(t, images[i]);
            }
            t *= c;
            r += t;
        }
        return r;
    }

    UElement apply_automorphism(const UElement &a, const BasisChange &phi) const
    {
        if (!is_automorphism(algebra(), phi)) {
            throw NotAutomorphism("linear map does not preserve the bracket of " + algebra().name());
        }
        return apply_linear_map(a, phi);
    }

    // Normal form of the product X_{w1} X_{w2} ... computed by insertion.
    UElement normal_form_product(const Word &w) const
    {
        UElement r = one();
        for (auto k : w) {
            check_index(k);
            UElement next;
            for (const auto &[m, c] : r.terms()) {
                UElement p = times_generator(m, k);
                p *= c;
                next += p;
            }
            r = std::move(next);
        }
        return r;
    }

    std::size_t cache_size() const
    {
        std::lock_guard<std::mutex> lock(m_state->mutex);
        return m_state->products.size() + m_state->words.size();
    }

private:
    struct State {
        explicit State(LieAlgebra L) : algebra(std::move(L)) {}
        LieAlgebra algebra;
        std::mutex mutex;
        std::map<std::pair<PBWMonomial, std::size_t>, UElement> products;
        std::map<Word, UElement> words;
    };

    void check_index(std::size_t i) const
    {
        if (i >= dim()) {
            throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
        }
    }

    // Words produced by one rewrite at descent position p.
    std::vector<std::pair<Word, HPoly>> rewrite_once(const Word &w, std::size_t p) const
    {
        std::vector<std::pair<Word, HPoly>> out;
        Word swapped(w);
        std::swap(swapped[p], swapped[p + 1]);
        out.emplace_back(std::move(swapped), HPoly(1));
        const auto &L = algebra();
        for (std::size_t k = 0; k < dim(); ++k) {
            const auto &c = L.structure_constant(w[p], w[p + 1], k);
            if (c.is_zero()) {
                continue;
            }
            Word shorter(w.begin(), w.begin() + static_cast<long>(p));
            shorter.push_back(k);
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(p) + 2, w.end());
            out.emplace_back(std::move(shorter), HPoly(c) * HPoly::h());
        }
        return out;
    }

    UElement rewrite_leftmost(const Word &w) const
    {
        std::size_t p = 0;
        while (p + 1 < w.size() && w[p] <= w[p + 1]) {
            ++p;
        }
        if (p + 1 >= w.size()) {
            return UElement::monomial(w);
        }
        {
            std::lock_guard<std::mutex> lock(m_state->mutex);
            auto it = m_state->words.find(w);
            if (it != m_state->words.end()) {
                return it->second;
            }
        }
        UElement r;
        for (const auto &[next, c] : rewrite_once(w, p)) {
            r += rewrite_leftmost(next) * c;
        }
        std::lock_guard<std::mutex> lock(m_state->mutex);
        m_state->words.emplace(w, r);
        return r;
    }

    // m * X_k for a PBW monomial m. With m = m' X_j and j > k:
    // m' X_j X_k = (m' X_k) X_j + h sum_l c_jk^l m' X_l.
    UElement times_generator(const PBWMonomial &m, std::size_t k) const
    {
        if (m.empty() || m.back() <= k) {
            PBWMonomial r(m);
            r.push_back(k);
            return UElement::monomial(std::move(r));
        }
        auto key = std::make_pair(m, k);
        {
            std::lock_guard<std::mutex> lock(m_state->mutex);
            auto it = m_state->products.find(key);
            if (it != m_state->products.end()) {
                return it->second;
            }
        }
        const std::size_t j = m.back();
        PBWMonomial prefix(m.begin(), m.end() - 1);
        UElement r;
        const UElement head = times_generator(prefix, k);
        for (const auto &[mm, c] : head.terms()) {
            UElement t = times_generator(mm, j);
            t *= c;
            r += t;
        }
        const auto &L = algebra();
        for (std::size_t l = 0; l < dim(); ++l) {
            const auto &c = L.structure_constant(j, k, l);
            if (c.is_zero()) {
                continue;
            }
            UElement t = times_generator(prefix, l);
            t *= HPoly(c) * HPoly::h();
            r += t;
        }
        std::lock_guard<std::mutex> lock(m_state->mutex);
        m_state->products.emplace(std::move(key), r);
        return r;
    }

    std::shared_ptr<State> m_state;
};

} // namespace dqorbit
