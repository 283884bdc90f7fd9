#pragma once

#include "sltriv/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sltriv {

/// Univariate polynomial in the weight symbol l with rational coefficients.
/// Coefficient i multiplies l^i; no trailing zeros; zero is empty.
class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(const Rational& c) {  // NOLINT: constants convert implicitly
        if (c != 0) c_.push_back(c);
    }
    LambdaPoly(long c) : LambdaPoly(Rational(c)) {}  // NOLINT
    explicit LambdaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static LambdaPoly symbol() { return LambdaPoly(std::vector<Rational>{0, 1}); }
    static LambdaPoly monomial(const Rational& c, int deg) {
        std::vector<Rational> v(static_cast<size_t>(deg) + 1);
        v[static_cast<size_t>(deg)] = c;
        return LambdaPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : Rational(0);
    }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational constant() const { return c_.empty() ? Rational(0) : c_.front(); }

    Rational eval(const Rational& x) const {
        Rational r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    LambdaPoly operator-() const {
        LambdaPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    LambdaPoly& operator+=(const LambdaPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    LambdaPoly& operator-=(const LambdaPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return LambdaPoly(std::move(r));
    }
    LambdaPoly& operator*=(const LambdaPoly& o) { return *this = *this * o; }
    LambdaPoly scaled(const Rational& s) const {
        if (s == 0) return {};
        LambdaPoly r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LambdaPoly& a, const LambdaPoly& b) { return !(a == b); }
    friend bool operator<(const LambdaPoly& a, const LambdaPoly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (size_t i = a.c_.size(); i-- > 0;) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

    /// Euclidean division: returns (quotient, remainder).
    static std::pair<LambdaPoly, LambdaPoly> divmod(const LambdaPoly& a, const LambdaPoly& b) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        if (a.degree() < b.degree()) return {LambdaPoly(), a};
        std::vector<Rational> r = a.c_;
        std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
        const Rational& lb = b.c_.back();
        for (size_t i = q.size(); i-- > 0;) {
            Rational f = r[i + b.c_.size() - 1] / lb;
            q[i] = f;
            if (f == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] -= f * b.c_[j];
        }
        r.resize(b.c_.size() - 1);
        return {LambdaPoly(std::move(q)), LambdaPoly(std::move(r))};
    }

    LambdaPoly monic() const { return is_zero() ? *this : scaled(1 / lead()); }

    static LambdaPoly gcd(LambdaPoly a, LambdaPoly b) {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Extended Euclid: returns (g, s) with s*a = g (mod m), g monic.
    static std::pair<LambdaPoly, LambdaPoly> inverse_mod(const LambdaPoly& a, const LambdaPoly& m) {
        LambdaPoly r0 = m, r1 = divmod(a, m).second;
        LambdaPoly s0, s1 = LambdaPoly(1);
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            LambdaPoly s = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        if (r0.is_zero()) return {r0, LambdaPoly()};
        Rational inv = 1 / r0.lead();
        return {r0.scaled(inv), s0.scaled(inv)};
    }

    /// Content-normalized form: integer coefficients, gcd 1, positive lead.
    LambdaPoly primitive() const {
        if (is_zero()) return *this;
        Integer l = 1;
        for (auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        Integer g = 0;
        for (auto& x : c_) {
            Integer v = x.get_num() * (l / x.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
        Rational f = Rational(l) / Rational(g);
        if (lead() < 0) f = -f;
        return scaled(f);
    }

    /// Rational roots (via the rational root theorem on the primitive form).
    std::vector<Rational> rational_roots() const;

    /// Plain text: "2*l^2+10*l+3" in the variable name given.
    std::string render(const std::string& var = "l") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            const Rational& a = c_[i];
            if (a == 0) continue;
            bool neg = a < 0;
            Rational m = neg ? Rational(-a) : a;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? "-" : "+";
            }
            if (i == 0) {
                out += sltriv::render(m);
            } else {
                if (m != 1) out += sltriv::render(m) + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline std::vector<Rational> LambdaPoly::rational_roots() const {
    std::vector<Rational> roots;
    if (degree() < 1) return roots;
    LambdaPoly p = primitive();
    // Strip zero roots first.
    size_t shift = 0;
    while (shift < p.c_.size() && p.c_[shift] == 0) ++shift;
    if (shift > 0) roots.push_back(0);
    std::vector<Rational> rest(p.c_.begin() + static_cast<long>(shift), p.c_.end());
    LambdaPoly q(rest);
    if (q.degree() < 1) return roots;
    Integer a0 = abs(q.c_.front().get_num());
    Integer an = abs(q.c_.back().get_num());
    auto divisors = [](const Integer& n) {
        std::vector<Integer> d;
        for (Integer i = 1; i * i <= n; ++i) {
            if (n % i == 0) {
                d.push_back(i);
                if (i * i != n) d.push_back(n / i);
            }
        }
        return d;
    };
    for (const auto& num : divisors(a0)) {
        for (const auto& den : divisors(an)) {
            for (int sgn : {1, -1}) {
                Rational r(sgn * num, den);
                r.canonicalize();
                if (q.eval(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) {
                    roots.push_back(r);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace sltriv
