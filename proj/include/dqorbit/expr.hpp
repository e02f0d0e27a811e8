#pragma once

// Expression parsing. Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' INTEGER)?
//   primary := NUMBER | IDENT | '(' expr ')'
// `h` is the deformation parameter and `i` the imaginary unit. Division is
// only by nonzero numbers. Juxtaposition is an error.

#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <dqorbit/commpoly.hpp>
#include <dqorbit/errors.hpp>
#include <dqorbit/lie_algebra.hpp>
#include <dqorbit/uea.hpp>

namespace dqorbit
{

struct ParseOptions {
    // Unknown identifiers become symbolic parameters instead of errors.
    bool allow_parameters = false;
};

namespace detail
{

struct Token {
    enum Kind { Number, Ident, Op, End } kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string &s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                ++j;
            }
            out.push_back({Token::Number, s.substr(i, j - i), i});
            i = j;
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
                ++j;
            }
            out.push_back({Token::Ident, s.substr(i, j - i), i});
            i = j;
        } else if (std::string("+-*/^()").find(static_cast<char>(c)) != std::string::npos) {
            out.push_back({Token::Op, std::string(1, static_cast<char>(c)), i});
            ++i;
        } else {
            throw SyntaxError(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
        }
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

// Value-type operations the parser needs.
template <class V>
struct ExprOps {
    std::function<V(const HPoly &)> constant;
    // nullopt for an unknown name
    std::function<std::optional<V>(const std::string &)> identifier;
    std::function<V(const V &, const V &)> multiply;
    std::function<V(const V &, unsigned)> power;
    // the value as a number when it is one
    std::function<std::optional<GaussRat>(const V &)> as_number;
    bool allow_parameters = false;
};

template <class V>
class ExprParser
{
public:
    ExprParser(const std::string &text, ExprOps<V> ops) : m_tokens(tokenize(text)), m_ops(std::move(ops)) {}

    V parse()
    {
        V v = expr();
        if (peek().kind != Token::End) {
            throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
        }
        return v;
    }

private:
    const Token &peek() const
    {
        return m_tokens[m_pos];
    }
    bool accept(const char *op)
    {
        if (peek().kind == Token::Op && peek().text == op) {
            ++m_pos;
            return true;
        }
        return false;
    }

    V expr()
    {
        V v = term();
        for (;;) {
            if (accept("+")) {
                v += term();
            } else if (accept("-")) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    V term()
    {
        V v = unary();
        for (;;) {
            if (accept("*")) {
                v = m_ops.multiply(v, unary());
            } else if (peek().kind == Token::Op && peek().text == "/") {
                std::size_t at = peek().pos;
                ++m_pos;
                std::optional<GaussRat> d = m_ops.as_number(unary());
                if (!d) {
                    throw SyntaxError("division by a non-number", at);
                }
                if (d->is_zero()) {
                    throw DivisionByZero("division by zero at position " + std::to_string(at));
                }
                v = v * HPoly(GaussRat(1) / *d);
            } else if (peek().kind == Token::Number || peek().kind == Token::Ident
                       || (peek().kind == Token::Op && peek().text == "(")) {
                throw SyntaxError("missing '*' before '" + peek().text + "'", peek().pos);
            } else {
                return v;
            }
        }
    }

    V unary()
    {
        if (accept("-")) {
            return -unary();
        }
        if (accept("+")) {
            return unary();
        }
        return power();
    }

    V power()
    {
        V base = primary();
        if (accept("^")) {
            const Token &t = peek();
            if (t.kind != Token::Number) {
                throw SyntaxError("exponent must be a nonnegative integer", t.pos);
            }
            ++m_pos;
            unsigned long e = std::stoul(t.text);
            if (e > 1000) {
                throw SyntaxError("exponent too large", t.pos);
            }
            return m_ops.power(base, static_cast<unsigned>(e));
        }
        return base;
    }

    V primary()
    {
        const Token t = peek();
        switch (t.kind) {
        case Token::Number:
            ++m_pos;
            return m_ops.constant(HPoly(GaussRat(mpq_class(t.text))));
        case Token::Ident: {
            ++m_pos;
            if (t.text == "h") {
                return m_ops.constant(HPoly::h());
            }
            if (t.text == "i") {
                return m_ops.constant(HPoly(GaussRat::imag_unit()));
            }
            if (auto v = m_ops.identifier(t.text)) {
                return *v;
            }
            if (m_ops.allow_parameters) {
                return m_ops.constant(HPoly(Scalar::param(t.text)));
            }
            throw UnknownIdentifier("unknown identifier '" + t.text + "' at position " + std::to_string(t.pos));
        }
        case Token::Op:
            if (t.text == "(") {
                ++m_pos;
                V v = expr();
                if (!accept(")")) {
                    throw SyntaxError("expected ')'", peek().pos);
                }
                return v;
            }
            throw SyntaxError("unexpected '" + t.text + "'", t.pos);
        case Token::End:
            break;
        }
        throw SyntaxError("unexpected end of input", t.pos);
    }

    std::vector<Token> m_tokens;
    std::size_t m_pos = 0;
    ExprOps<V> m_ops;
};

// label or x_label -> index
inline std::optional<std::size_t> generator_index(const LieAlgebra &L, const std::string &name)
{
    const auto &labels = L.labels();
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (name == labels[k] || name == "x_" + labels[k]) {
            return k;
        }
    }
    return std::nullopt;
}

} // namespace detail

// Polynomial on the dual; identifiers are x_<label> or the label itself.
inline CommPoly parse_commutative(const std::string &text, const LieAlgebra &L, const ParseOptions &opts = {})
{
    const std::size_t n = L.dim();
    detail::ExprOps<CommPoly> ops;
    ops.constant = [n](const HPoly &c) { return CommPoly(n, c); };
    ops.identifier = [&L, n](const std::string &s) -> std::optional<CommPoly> {
        if (auto k = detail::generator_index(L, s)) {
            return CommPoly::variable(n, *k);
        }
        return std::nullopt;
    };
    ops.multiply = [](const CommPoly &a, const CommPoly &b) { return a * b; };
    ops.power = [](const CommPoly &a, unsigned e) { return a.pow(e); };
    ops.as_number = [n](const CommPoly &a) -> std::optional<GaussRat> {
        if (a.is_zero()) {
            return GaussRat();
        }
        if (a.size() != 1 || total_degree(a.terms().begin()->first) != 0) {
            return std::nullopt;
        }
        const HPoly &c = a.terms().begin()->second;
        if (!c.is_constant() || !c.constant_term().is_constant()) {
            return std::nullopt;
        }
        return c.constant_term().constant();
    };
    ops.allow_parameters = opts.allow_parameters;
    return detail::ExprParser<CommPoly>(text, std::move(ops)).parse();
}

// Element of U_h; '*' is the (order-significant) product of U_h and the
// result is in PBW normal form.
inline UElement parse_noncommutative(const std::string &text, const Enveloping &U, const ParseOptions &opts = {})
{
    const LieAlgebra &L = U.algebra();
    detail::ExprOps<UElement> ops;
    ops.constant = [](const HPoly &c) { return UElement(c); };
    ops.identifier = [&L, &U](const std::string &s) -> std::optional<UElement> {
        if (auto k = detail::generator_index(L, s)) {
            return U.generator(*k);
        }
        return std::nullopt;
    };
    ops.multiply = [&U](const UElement &a, const UElement &b) { return U.multiply(a, b); };
    ops.power = [&U](const UElement &a, unsigned e) { return U.power(a, e); };
    ops.as_number = [](const UElement &a) -> std::optional<GaussRat> {
        if (a.is_zero()) {
            return GaussRat();
        }
        if (a.size() != 1 || !a.terms().begin()->first.empty()) {
            return std::nullopt;
        }
        const HPoly &c = a.terms().begin()->second;
        if (!c.is_constant() || !c.constant_term().is_constant()) {
            return std::nullopt;
        }
        return c.constant_term().constant();
    };
    ops.allow_parameters = opts.allow_parameters;
    return detail::ExprParser<UElement>(text, std::move(ops)).parse();
}

// Polynomial in h with symbolic parameters, e.g. "a^2 - c1*h".
inline HPoly parse_hpoly(const std::string &text)
{
    detail::ExprOps<HPoly> ops;
    ops.constant = [](const HPoly &c) { return c; };
    ops.identifier = [](const std::string &) -> std::optional<HPoly> { return std::nullopt; };
    ops.multiply = [](const HPoly &a, const HPoly &b) { return a * b; };
    ops.power = [](const HPoly &a, unsigned e) {
        HPoly r(1);
        for (unsigned k = 0; k < e; ++k) {
            r *= a;
        }
        return r;
    };
    ops.as_number = [](const HPoly &a) -> std::optional<GaussRat> {
        if (!a.is_constant() || !a.constant_term().is_constant()) {
            return std::nullopt;
        }
        return a.constant_term().constant();
    };
    ops.allow_parameters = true;
    return detail::ExprParser<HPoly>(text, std::move(ops)).parse();
}

// Scalar (no h), e.g. "a^2" or "1/2+3/4*i".
inline Scalar parse_scalar(const std::string &text)
{
    HPoly p = parse_hpoly(text);
    if (!p.is_constant()) {
        throw NotConstant("'" + text + "' depends on h");
    }
    return p.constant_term();
}

// Plain Gaussian rational in its textual form.
inline GaussRat parse_gauss(const std::string &text)
{
    return parse_scalar(text).constant();
}

} // namespace dqorbit
