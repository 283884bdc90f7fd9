#pragma once

#include "sltriv/scalar.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sltriv {

/// A density weight value: the formal symbol l, a rational number, or a root
/// of a quadratic minimal polynomial.
class Weight {
public:
    enum class Kind { Generic, Rational, Algebraic };

    static Weight generic() { return Weight(); }
    static Weight rational(const sltriv::Rational& q) {
        Weight w;
        w.kind_ = Kind::Rational;
        w.q_ = q;
        return w;
    }
    static Weight algebraic(const LambdaPoly& minpoly, int branch) {
        Weight w;
        w.kind_ = Kind::Algebraic;
        w.mod_ = Modulus::make(minpoly, branch);
        return w;
    }
    /// Roots of 2l^2+10l+3: branch +1 is (-5+sqrt(19))/2, branch -1 is (-5-sqrt(19))/2.
    static Weight a_root(int branch) {
        return algebraic(LambdaPoly(std::vector<sltriv::Rational>{3, 10, 2}), branch);
    }

    Kind kind() const { return kind_; }
    bool is_generic() const { return kind_ == Kind::Generic; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    bool is_algebraic() const { return kind_ == Kind::Algebraic; }
    bool is_numeric() const { return kind_ != Kind::Generic; }
    const sltriv::Rational& rational_value() const { return q_; }
    const std::shared_ptr<const Modulus>& modulus() const { return mod_; }

    /// The field element this weight stands for.
    Scalar value() const {
        switch (kind_) {
            case Kind::Generic: return Scalar::lambda();
            case Kind::Rational: return Scalar(q_);
            case Kind::Algebraic: return Scalar(LambdaScalar::symbol(), mod_);
        }
        return {};
    }

    friend bool operator==(const Weight& a, const Weight& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::Rational) return a.q_ == b.q_;
        if (a.kind_ == Kind::Algebraic) return a.mod_->same_field(*b.mod_) && a.mod_->branch == b.mod_->branch;
        return true;
    }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

    /// Round-trippable weight string: "generic", "p/q", "alg:c2,c1,c0:+".
    std::string spec_string() const {
        switch (kind_) {
            case Kind::Generic: return "generic";
            case Kind::Rational: return sltriv::render(q_);
            case Kind::Algebraic: {
                const auto& p = mod_->primitive;
                return "alg:" + sltriv::render(p.coeff(2)) + "," + sltriv::render(p.coeff(1)) + "," +
                       sltriv::render(p.coeff(0)) + ":" + (mod_->branch > 0 ? "+" : "-");
            }
        }
        return {};
    }

private:
    Kind kind_ = Kind::Generic;
    sltriv::Rational q_;
    std::shared_ptr<const Modulus> mod_;
};

/// Base weight plus an integer shift, e.g. l+3 or a-2.
struct DensityWeight {
    Weight base;
    long offset = 0;

    DensityWeight() = default;
    DensityWeight(Weight b, long off = 0) : base(std::move(b)), offset(off) {}  // NOLINT

    Scalar value() const { return base.value() + Scalar(offset); }
    DensityWeight shifted(long d) const { return DensityWeight(base, offset + d); }

    /// Whether the two weights denote the same element (structurally).
    friend bool operator==(const DensityWeight& a, const DensityWeight& b) {
        if (a.base.is_rational() && b.base.is_rational()) {
            return a.base.rational_value() + a.offset == b.base.rational_value() + b.offset;
        }
        return a.base == b.base && a.offset == b.offset;
    }
    friend bool operator!=(const DensityWeight& a, const DensityWeight& b) { return !(a == b); }

    /// Rational value when numeric and rational.
    sltriv::Rational rational_value() const { return base.rational_value() + offset; }

    /// "l+2", "7/2", "a-3".
    std::string label() const {
        if (base.is_rational()) return sltriv::render(rational_value());
        std::string s = base.is_generic() ? "l" : "a";
        if (offset > 0) s += "+" + std::to_string(offset);
        if (offset < 0) s += std::to_string(offset);
        return s;
    }
    std::string latex() const {
        if (base.is_rational()) {
            auto v = rational_value();
            if (v.get_den() == 1) return v.get_num().get_str();
            std::string s = v < 0 ? "-" : "";
            return s + "\\tfrac{" + Integer(abs(v.get_num())).get_str() + "}{" + v.get_den().get_str() + "}";
        }
        std::string s = base.is_generic() ? "\\lambda" : "a";
        if (offset > 0) s += "+" + std::to_string(offset);
        if (offset < 0) s += std::to_string(offset);
        return s;
    }
};

/// Specializes a rational function of l at a numeric weight.
inline LambdaScalar weight_specialize(const LambdaScalar& s, const Weight& w) {
    if (w.is_rational()) return LambdaScalar(s.eval(w.rational_value()));
    if (w.is_algebraic()) return LambdaScalar(w.modulus()->specialize(s));
    throw std::invalid_argument("weight_specialize needs a numeric weight");
}

/// Parses "generic", "p/q", or "alg:c2,c1,c0:+|-" with an optional ":N"
/// integer shift (the root plus N).
inline DensityWeight parse_weight(const std::string& s) {
    if (s == "generic") return DensityWeight(Weight::generic());
    if (s.rfind("alg:", 0) == 0) {
        std::vector<std::string> parts;
        std::stringstream ss(s.substr(4));
        std::string part;
        while (std::getline(ss, part, ':')) parts.push_back(part);
        if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("malformed algebraic weight: " + s);
        std::vector<sltriv::Rational> c;
        std::stringstream cs(parts[0]);
        while (std::getline(cs, part, ',')) c.push_back(parse_rational(part));
        if (c.size() != 3) throw std::invalid_argument("algebraic weight needs three coefficients: " + s);
        int branch;
        if (parts[1] == "+") branch = 1;
        else if (parts[1] == "-") branch = -1;
        else throw std::invalid_argument("algebraic branch must be + or -: " + s);
        long shift = 0;
        if (parts.size() == 3) {
            try {
                size_t used = 0;
                shift = std::stol(parts[2], &used);
                if (used != parts[2].size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed algebraic shift: " + s);
            }
        }
        return DensityWeight(Weight::algebraic(LambdaPoly({c[2], c[1], c[0]}), branch), shift);
    }
    try {
        return DensityWeight(Weight::rational(parse_rational(s)));
    } catch (const std::domain_error&) {
        throw std::invalid_argument("malformed weight: " + s);
    }
}

}  // namespace sltriv
