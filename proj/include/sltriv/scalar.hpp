#pragma once

#include "sltriv/lambda_scalar.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace sltriv {

/// Quadratic extension Q[l]/(m): l stands for the chosen root of m.
struct Modulus {
    LambdaPoly minpoly;    // monic
    LambdaPoly primitive;  // content-normalized, as the user wrote it
    int branch = 1;        // +1 or -1: sign of the square root, display only

    static std::shared_ptr<const Modulus> make(const LambdaPoly& p, int branch) {
        if (p.degree() != 2) throw std::invalid_argument("algebraic weights need a degree-2 minimal polynomial");
        if (!p.rational_roots().empty()) throw std::invalid_argument("minimal polynomial is reducible over the rationals");
        auto m = std::make_shared<Modulus>();
        m->minpoly = p.monic();
        m->primitive = p.primitive();
        m->branch = branch >= 0 ? 1 : -1;
        return m;
    }

    bool same_field(const Modulus& o) const { return minpoly == o.minpoly; }

    LambdaPoly reduce(const LambdaPoly& p) const { return LambdaPoly::divmod(p, minpoly).second; }

    /// Residue of num/den; throws when den vanishes at the root.
    LambdaPoly specialize(const LambdaScalar& s) const {
        LambdaPoly n = reduce(s.num());
        if (s.is_polynomial()) return n.scaled(1 / s.den().lead());
        LambdaPoly d = reduce(s.den());
        if (d.is_zero()) throw std::domain_error("pole at weight");
        auto [g, inv] = LambdaPoly::inverse_mod(d, minpoly);
        if (g.degree() != 0) throw std::domain_error("pole at weight");
        return reduce(n * inv);
    }

    /// Writes u + v*root as p + q*sqrt(d) with d squarefree.
    struct Radical {
        Rational p, q;
        Integer d;
    };
    Radical radical(const LambdaPoly& residue) const {
        Rational u = residue.coeff(0), v = residue.coeff(1);
        Rational b = minpoly.coeff(1), c = minpoly.coeff(0);
        Rational disc = b * b - 4 * c;  // root = (-b + branch*sqrt(disc))/2
        Integer nd = disc.get_num() * disc.get_den();
        Integer sq = 1, rest = abs(nd);
        for (Integer f = 2; f * f <= rest; ++f) {
            while (rest % (f * f) == 0) {
                rest /= f * f;
                sq *= f;
            }
        }
        if (nd < 0) rest = -rest;
        // sqrt(disc) = sq*sqrt(rest)/den
        Radical r;
        r.p = u - v * b / 2;
        r.q = v * branch * Rational(sq) / (2 * Rational(disc.get_den()));
        r.d = rest;
        return r;
    }
};

/// Coefficient-field element: a rational function in l, or a residue modulo
/// a quadratic minimal polynomial when an algebraic weight is involved.
/// Values without a modulus are specialized lazily on contact with one.
class Scalar {
public:
    Scalar() = default;
    Scalar(long c) : v_(c) {}                        // NOLINT
    Scalar(int c) : v_(static_cast<long>(c)) {}      // NOLINT
    Scalar(const Rational& c) : v_(c) {}             // NOLINT
    Scalar(LambdaScalar v) : v_(std::move(v)) {}     // NOLINT
    Scalar(LambdaScalar v, std::shared_ptr<const Modulus> m) : v_(std::move(v)), m_(std::move(m)) {
        if (m_) v_ = LambdaScalar(m_->specialize(v_));
    }

    static Scalar lambda() { return Scalar(LambdaScalar::symbol()); }

    const LambdaScalar& value() const { return v_; }
    const std::shared_ptr<const Modulus>& modulus() const { return m_; }
    bool is_zero() const { return v_.is_zero(); }
    bool is_constant() const { return v_.is_constant(); }
    bool is_generic() const { return !m_ && !v_.is_constant(); }
    Rational constant_value() const { return v_.constant_value(); }

    /// Substitute a rational value for l (generic values only).
    Scalar at(const Rational& x) const {
        if (m_) throw std::logic_error("cannot substitute into an algebraic residue");
        return Scalar(v_.eval(x));
    }

    Scalar operator-() const { return Scalar(-v_, m_, true); }
    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        auto m = common(a, b);
        if (!m) return Scalar(a.v_ + b.v_);
        return Scalar(LambdaScalar(m->reduce(a.in(m).num() + b.in(m).num())), m, true);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        auto m = common(a, b);
        if (!m) return Scalar(a.v_ * b.v_);
        return Scalar(LambdaScalar(m->reduce(a.in(m).num() * b.in(m).num())), m, true);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        auto m = common(a, b);
        if (!m) return Scalar(a.v_ / b.v_);
        auto [g, inv] = LambdaPoly::inverse_mod(b.in(m).num(), m->minpoly);
        if (g.degree() != 0) throw std::domain_error("division by zero");
        return Scalar(LambdaScalar(m->reduce(a.in(m).num() * inv)), m, true);
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Text form. Residues print as p+q*sqrt(d).
    std::string render() const {
        if (!m_ || v_.is_constant()) return v_.render();
        auto r = m_->radical(v_.num());
        std::string s;
        if (r.p != 0) s = sltriv::render(r.p);
        if (r.q != 0) {
            Rational q = r.q;
            if (q < 0) {
                s += "-";
                q = -q;
            } else if (!s.empty()) {
                s += "+";
            }
            if (q != 1) s += sltriv::render(q) + "*";
            s += "sqrt(" + r.d.get_str() + ")";
        }
        return s.empty() ? "0" : s;
    }

    /// True when the rendered form needs parentheses inside a product.
    bool is_compound() const {
        if (is_constant()) return false;
        if (m_) {
            auto r = m_->radical(v_.num());
            return r.p != 0;
        }
        if (!v_.is_polynomial()) return true;
        int terms = 0;
        for (auto& c : v_.num().coeffs()) terms += c != 0;
        return terms > 1;
    }

private:
    Scalar(LambdaScalar v, std::shared_ptr<const Modulus> m, bool /*reduced*/)
        : v_(std::move(v)), m_(std::move(m)) {}

    static std::shared_ptr<const Modulus> common(const Scalar& a, const Scalar& b) {
        if (a.m_ && b.m_) {
            if (a.m_ != b.m_ && !a.m_->same_field(*b.m_)) throw std::domain_error("incompatible algebraic weights");
            return a.m_;
        }
        return a.m_ ? a.m_ : b.m_;
    }
    LambdaScalar in(const std::shared_ptr<const Modulus>& m) const {
        if (m_) return v_;
        return LambdaScalar(m->specialize(v_));
    }

    LambdaScalar v_;
    std::shared_ptr<const Modulus> m_;
};

}  // namespace sltriv
