#pragma once

#include "sltriv/weight.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sltriv {

/// Deformation parameter t[base+src, base+tgt].
struct ParamSymbol {
    long src = 0;
    long tgt = 0;

    long span() const { return tgt - src; }
    friend bool operator==(const ParamSymbol& a, const ParamSymbol& b) { return a.src == b.src && a.tgt == b.tgt; }
    friend bool operator!=(const ParamSymbol& a, const ParamSymbol& b) { return !(a == b); }
    friend bool operator<(const ParamSymbol& a, const ParamSymbol& b) {
        return a.src != b.src ? a.src < b.src : a.tgt < b.tgt;
    }

    std::string render(const Weight& base) const {
        return "t[" + DensityWeight(base, src).label() + "," + DensityWeight(base, tgt).label() + "]";
    }
    std::string latex(const Weight& base) const {
        return "t_{" + DensityWeight(base, src).latex() + "," + DensityWeight(base, tgt).latex() + "}";
    }
};

/// Multiset of parameters, kept sorted.
using ParamMonomial = std::vector<ParamSymbol>;

inline ParamMonomial mono_mul(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial r;
    r.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline bool mono_divides(const ParamMonomial& d, const ParamMonomial& m) {
    return std::includes(m.begin(), m.end(), d.begin(), d.end());
}

inline ParamMonomial mono_div(const ParamMonomial& m, const ParamMonomial& d) {
    ParamMonomial r;
    std::set_difference(m.begin(), m.end(), d.begin(), d.end(), std::back_inserter(r));
    return r;
}

/// Graded order; within a degree, the parameter that sorts first by
/// (source, target) is the most significant variable.
struct MonoLess {
    bool operator()(const ParamMonomial& a, const ParamMonomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return b[i] < a[i];
        }
        return false;
    }
};

/// Polynomial in the deformation parameters with field coefficients.
class ParamPoly {
public:
    using Terms = std::map<ParamMonomial, Scalar, MonoLess>;

    ParamPoly() = default;
    ParamPoly(const Scalar& c) {  // NOLINT
        if (!c.is_zero()) t_.emplace(ParamMonomial{}, c);
    }
    ParamPoly(long c) : ParamPoly(Scalar(c)) {}  // NOLINT
    ParamPoly(int c) : ParamPoly(Scalar(static_cast<long>(c))) {}  // NOLINT
    ParamPoly(const Rational& c) : ParamPoly(Scalar(c)) {}  // NOLINT

    static ParamPoly var(const ParamSymbol& s) { return term(Scalar(1), {s}); }
    static ParamPoly term(const Scalar& c, ParamMonomial m) {
        ParamPoly p;
        std::sort(m.begin(), m.end());
        if (!c.is_zero()) p.t_.emplace(std::move(m), c);
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    int degree() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.size()); }
    bool is_homogeneous() const {
        return t_.empty() || t_.begin()->first.size() == t_.rbegin()->first.size();
    }
    const ParamMonomial& lead_monomial() const { return t_.rbegin()->first; }
    const Scalar& lead_coeff() const { return t_.rbegin()->second; }
    Scalar coeff(const ParamMonomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Scalar() : it->second;
    }

    void add_term(const ParamMonomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    ParamPoly operator-() const {
        ParamPoly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    ParamPoly& operator+=(const ParamPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ma, ca] : a.t_) {
            for (const auto& [mb, cb] : b.t_) r.add_term(mono_mul(ma, mb), ca * cb);
        }
        return r;
    }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    friend ParamPoly operator*(const ParamPoly& a, const Scalar& s) { return a.scaled(s); }
    friend ParamPoly operator*(const Scalar& s, const ParamPoly& a) { return a.scaled(s); }
    ParamPoly scaled(const Scalar& s) const {
        if (s.is_zero()) return {};
        ParamPoly r = *this;
        for (auto& [m, c] : r.t_) c *= s;
        return r;
    }
    ParamPoly mul_monomial(const ParamMonomial& m) const {
        ParamPoly r;
        for (const auto& [mm, c] : t_) r.t_.emplace(mono_mul(mm, m), c);
        return r;
    }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        if (a.t_.size() != b.t_.size()) return false;
        auto it = b.t_.begin();
        for (const auto& [m, c] : a.t_) {
            if (m != it->first || c != it->second) return false;
            ++it;
        }
        return true;
    }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    /// Scaled so the leading coefficient is 1.
    ParamPoly normalized() const {
        if (t_.empty()) return *this;
        return scaled(Scalar(1) / lead_coeff());
    }

    std::set<ParamSymbol> variables() const {
        std::set<ParamSymbol> v;
        for (const auto& [m, c] : t_) v.insert(m.begin(), m.end());
        return v;
    }

    /// Evaluates with the given parameter values; missing parameters are 0.
    Scalar evaluate(const std::map<ParamSymbol, Scalar>& point) const {
        Scalar r;
        for (const auto& [m, c] : t_) {
            Scalar v = c;
            for (const auto& s : m) {
                auto it = point.find(s);
                if (it == point.end()) {
                    v = Scalar();
                    break;
                }
                v *= it->second;
            }
            r += v;
        }
        return r;
    }

    /// Drops every term containing a parameter outside `keep`.
    ParamPoly restricted(const std::set<ParamSymbol>& keep) const {
        ParamPoly r;
        for (const auto& [m, c] : t_) {
            bool ok = std::all_of(m.begin(), m.end(), [&](const ParamSymbol& s) { return keep.count(s) > 0; });
            if (ok) r.t_.emplace(m, c);
        }
        return r;
    }

    /// Terms from the leading monomial down, e.g. "t[l,l+3]*t[l+3,l+7] - 3/2*t[l,l+4]*t[l+4,l+7]".
    std::string render(const Weight& base) const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string cs = c.render();
            bool neg = !c.is_compound() && !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string ms;
            for (size_t i = 0; i < m.size(); ++i) ms += (i ? "*" : "") + m[i].render(base);
            if (ms.empty()) {
                out += c.is_compound() ? "(" + cs + ")" : cs;
            } else if (cs == "1") {
                out += ms;
            } else {
                out += (c.is_compound() ? "(" + cs + ")" : cs) + "*" + ms;
            }
        }
        return out;
    }

private:
    Terms t_;
};

/// Rewrites p modulo monomial and binomial generators: a monomial generator
/// sends its monomial (and multiples) to 0, a binomial one rewrites its larger
/// monomial as a multiple of the smaller.
inline ParamPoly parampoly_reduce(const ParamPoly& p, const std::vector<ParamPoly>& generators) {
    struct Rule {
        ParamMonomial lhs;
        ParamMonomial rhs;
        Scalar factor;  // lhs -> factor * rhs; zero factor means lhs -> 0
    };
    std::vector<Rule> rules;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (g.size() > 2) throw std::invalid_argument("unsupported ideal shape");
        auto it = g.terms().rbegin();
        Rule r;
        r.lhs = it->first;
        Scalar lc = it->second;
        if (g.size() == 2) {
            ++it;
            r.rhs = it->first;
            r.factor = -it->second / lc;
        }
        rules.push_back(std::move(r));
    }
    ParamPoly cur = p;
    ParamPoly done;
    while (!cur.is_zero()) {
        // Take the largest term; rewrite it or move it to the result.
        ParamMonomial m = cur.lead_monomial();
        Scalar c = cur.lead_coeff();
        cur.add_term(m, -c);
        const Rule* hit = nullptr;
        for (const auto& r : rules) {
            if (mono_divides(r.lhs, m)) {
                hit = &r;
                break;
            }
        }
        if (!hit) {
            done.add_term(m, c);
            continue;
        }
        if (!hit->factor.is_zero()) cur.add_term(mono_mul(mono_div(m, hit->lhs), hit->rhs), c * hit->factor);
    }
    return done;
}

}  // namespace sltriv
