#pragma once

#include "sltriv/param_poly.hpp"
#include "sltriv/scalar.hpp"

#include <string>

// LaTeX forms of coefficients and parameter polynomials (amsmath only).
namespace sltriv::latex {

inline std::string rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    std::string s = q < 0 ? "-" : "";
    return s + "\\tfrac{" + Integer(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
}

inline std::string poly(const LambdaPoly& p, const std::string& var = "\\lambda") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& a = p.coeff(i);
        if (a == 0) continue;
        bool neg = a < 0;
        Rational m = neg ? Rational(-a) : a;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        if (i == 0) {
            out += rational(m);
        } else {
            if (m != 1) out += rational(m);
            out += var;
            if (i > 1) out += "^{" + std::to_string(i) + "}";
        }
    }
    return out;
}

inline std::string scalar(const Scalar& s) {
    if (s.modulus() && !s.is_constant()) {
        auto r = s.modulus()->radical(s.value().num());
        std::string out;
        if (r.p != 0) out = rational(r.p);
        if (r.q != 0) {
            Rational q = r.q;
            if (q < 0) {
                out += "-";
                q = -q;
            } else if (!out.empty()) {
                out += "+";
            }
            if (q != 1) out += rational(q);
            out += "\\sqrt{" + r.d.get_str() + "}";
        }
        return out.empty() ? "0" : out;
    }
    const LambdaScalar& v = s.value();
    if (v.is_polynomial()) return poly(v.num());
    return "\\frac{" + poly(v.num()) + "}{" + poly(v.den()) + "}";
}

inline std::string param_poly(const ParamPoly& p, const Weight& base) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = scalar(c);
        bool neg = !c.is_compound() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string ms;
        for (const auto& s : m) ms += s.latex(base);
        if (c.is_compound()) cs = "\\left(" + cs + "\\right)";
        if (ms.empty()) out += cs;
        else if (cs == "1") out += ms;
        else out += cs + "\\," + ms;
    }
    return out;
}

/// Wraps a body in a minimal standalone document.
inline std::string document(const std::string& title, const std::string& body) {
    return "\\documentclass{article}\n\\usepackage{amsmath}\n\\usepackage{amssymb}\n\\begin{document}\n\\section*{" + title +
           "}\n" + body + "\\end{document}\n";
}

}  // namespace sltriv::latex
