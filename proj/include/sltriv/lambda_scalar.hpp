#pragma once

#include "sltriv/lambda_poly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace sltriv {

/// Element of Q(l): numerator/denominator with monic denominator and
/// coprime parts. Equality is structural on the canonical form.
class LambdaScalar {
public:
    LambdaScalar() : den_(1) {}
    LambdaScalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    LambdaScalar(long c) : num_(Rational(c)), den_(1) {}   // NOLINT
    LambdaScalar(LambdaPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT

    static LambdaScalar symbol() { return LambdaScalar(LambdaPoly::symbol()); }

    static LambdaScalar normalized(LambdaPoly num, LambdaPoly den) {
        if (den.is_zero()) throw std::domain_error("division by zero polynomial");
        LambdaScalar r;
        if (num.is_zero()) return r;
        if (den.is_constant()) {
            r.num_ = num.scaled(1 / den.lead());
            return r;
        }
        LambdaPoly g = LambdaPoly::gcd(num, den);
        if (!g.is_constant()) {
            num = LambdaPoly::divmod(num, g).first;
            den = LambdaPoly::divmod(den, g).first;
        }
        Rational l = den.lead();
        r.num_ = num.scaled(1 / l);
        r.den_ = den.scaled(1 / l);
        return r;
    }

    const LambdaPoly& num() const { return num_; }
    const LambdaPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Rational constant_value() const { return num_.constant(); }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d == 0) throw std::domain_error("pole at weight");
        return num_.eval(x) / d;
    }

    LambdaScalar operator-() const {
        LambdaScalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend LambdaScalar operator+(const LambdaScalar& a, const LambdaScalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.is_polynomial() && b.is_polynomial()) {
            LambdaScalar r;
            r.num_ = a.num_ + b.num_;
            return r;
        }
        if (a.den_ == b.den_) return normalized(a.num_ + b.num_, a.den_);
        return normalized(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend LambdaScalar operator-(const LambdaScalar& a, const LambdaScalar& b) { return a + (-b); }
    friend LambdaScalar operator*(const LambdaScalar& a, const LambdaScalar& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_polynomial() && b.is_polynomial()) {
            LambdaScalar r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        return normalized(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend LambdaScalar operator/(const LambdaScalar& a, const LambdaScalar& b) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        if (b.is_constant()) {
            LambdaScalar r = a;
            r.num_ = r.num_.scaled(1 / b.num_.constant());
            return r;
        }
        return normalized(a.num_ * b.den_, a.den_ * b.num_);
    }
    LambdaScalar& operator+=(const LambdaScalar& o) { return *this = *this + o; }
    LambdaScalar& operator-=(const LambdaScalar& o) { return *this = *this - o; }
    LambdaScalar& operator*=(const LambdaScalar& o) { return *this = *this * o; }
    LambdaScalar& operator/=(const LambdaScalar& o) { return *this = *this / o; }

    friend bool operator==(const LambdaScalar& a, const LambdaScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const LambdaScalar& a, const LambdaScalar& b) { return !(a == b); }

    /// "3/2", "2*l+1", "(l+1)/(l^2+3)".
    std::string render(const std::string& var = "l") const {
        if (is_polynomial()) return num_.render(var);
        return "(" + num_.render(var) + ")/(" + den_.render(var) + ")";
    }

private:
    LambdaPoly num_;
    LambdaPoly den_;
};

inline LambdaScalar normalize_ratfun(const LambdaPoly& num, const LambdaPoly& den) {
    return LambdaScalar::normalized(num, den);
}

}  // namespace sltriv
