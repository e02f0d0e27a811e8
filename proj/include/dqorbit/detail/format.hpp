#pragma once

#include <string>
#include <vector>

#include <dqorbit/gauss_rat.hpp>

namespace dqorbit::detail
{

// One printed summand: a coefficient and the product of symbolic factors.
struct PrintedTerm {
    GaussRat coeff;
    std::vector<std::string> factors;
};

inline bool leads_negative(const GaussRat &c)
{
    if (c.is_real()) {
        return sgn(c.re()) < 0;
    }
    return sgn(c.re()) == 0 && sgn(c.im()) < 0;
}

inline std::string join_factors(const std::vector<std::string> &factors)
{
    std::string out;
    for (const auto &f : factors) {
        if (!out.empty()) {
            out += '*';
        }
        out += f;
    }
    return out;
}

inline std::string power(const std::string &base, unsigned e)
{
    return e == 1 ? base : base + "^" + std::to_string(e);
}

// Renders "c1*f1 + c2*f2 - ..." with the sign pulled out of purely real or
// purely imaginary coefficients. Mixed Gaussian coefficients are
// parenthesised so the output parses back unchanged.
inline std::string render_sum(const std::vector<PrintedTerm> &terms)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &t : terms) {
        bool neg = leads_negative(t.coeff);
        GaussRat mag = neg ? -t.coeff : t.coeff;
        std::string body;
        std::string fs = join_factors(t.factors);
        if (fs.empty()) {
            body = mag.str();
            if (!mag.is_real() && sgn(mag.re()) != 0) {
                body = "(" + body + ")";
            }
        } else if (mag.is_one()) {
            body = fs;
        } else if (mag.is_real() || sgn(mag.re()) == 0) {
            body = mag.str() + "*" + fs;
        } else {
            body = "(" + mag.str() + ")*" + fs;
        }
        if (first) {
            out = neg ? "-" + body : body;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

} // namespace dqorbit::detail
