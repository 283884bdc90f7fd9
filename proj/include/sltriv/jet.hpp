#pragma once

#include "sltriv/scalar.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace sltriv {

inline int& jet_max_order() {
    static int max_order = 24;
    return max_order;
}

/// Derivative orders of up to three vector-field slots and the density f.
struct JetMonomial {
    std::array<uint8_t, 4> o{};  // o[0..2]: vector slots, o[3]: f

    uint8_t& slot(int i) { return o[static_cast<size_t>(i)]; }
    uint8_t slot(int i) const { return o[static_cast<size_t>(i)]; }
    uint8_t& f() { return o[3]; }
    uint8_t f() const { return o[3]; }
    int total() const { return o[0] + o[1] + o[2] + o[3]; }

    static JetMonomial make(std::initializer_list<int> vec, int f_order) {
        JetMonomial m;
        int i = 0;
        for (int v : vec) m.set(i++, v);
        m.set(3, f_order);
        return m;
    }
    void set(int i, int v) {
        if (v < 0 || v > jet_max_order()) throw std::overflow_error("jet order overflow");
        o[static_cast<size_t>(i)] = static_cast<uint8_t>(v);
    }
    void bump(int i, int by = 1) { set(i, o[static_cast<size_t>(i)] + by); }

    /// Graded lexicographic.
    friend bool operator<(const JetMonomial& a, const JetMonomial& b) {
        int ta = a.total(), tb = b.total();
        if (ta != tb) return ta < tb;
        return a.o < b.o;
    }
    friend bool operator==(const JetMonomial& a, const JetMonomial& b) { return a.o == b.o; }
    friend bool operator!=(const JetMonomial& a, const JetMonomial& b) { return a.o != b.o; }
};

/// Multilinear differential expression in `arity` vector-field slots and one
/// density argument. Coefficient type C is Scalar or ParamPoly.
template <class C>
class JetExpr {
public:
    using Terms = std::map<JetMonomial, C>;

    JetExpr() = default;
    explicit JetExpr(int arity) : arity_(arity) {}

    static JetExpr monomial(int arity, const JetMonomial& m, const C& c) {
        JetExpr e(arity);
        e.add(m, c);
        return e;
    }

    int arity() const { return arity_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    C coeff(const JetMonomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? C() : it->second;
    }

    void add(const JetMonomial& m, const C& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    JetExpr operator-() const {
        JetExpr r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    JetExpr& operator+=(const JetExpr& o) {
        check_arity(o);
        for (const auto& [m, c] : o.t_) add(m, c);
        return *this;
    }
    JetExpr& operator-=(const JetExpr& o) {
        check_arity(o);
        for (const auto& [m, c] : o.t_) add(m, -c);
        return *this;
    }
    friend JetExpr operator+(JetExpr a, const JetExpr& b) { return a += b; }
    friend JetExpr operator-(JetExpr a, const JetExpr& b) { return a -= b; }

    template <class S>
    JetExpr scaled(const S& s) const {
        JetExpr r(arity_);
        for (const auto& [m, c] : t_) r.add(m, c * s);
        return r;
    }

    friend bool operator==(const JetExpr& a, const JetExpr& b) {
        if (a.t_.size() != b.t_.size()) return false;
        auto it = b.t_.begin();
        for (const auto& [m, c] : a.t_) {
            if (m != it->first || c != it->second) return false;
            ++it;
        }
        return true;
    }
    friend bool operator!=(const JetExpr& a, const JetExpr& b) { return !(a == b); }

    /// Renders as "c X^(a) Y^(b) f^(c) + ..." using `coef` for coefficients.
    std::string render(const std::function<std::string(const C&)>& coef) const {
        if (t_.empty()) return "0";
        static const char* names[] = {"X", "Y", "Z"};
        std::string out;
        for (const auto& [m, c] : t_) {
            std::string cs = coef(c);
            bool neg = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
            if (neg) cs = cs.substr(1);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (cs != "1") out += cs + " ";
            for (int i = 0; i < arity_; ++i) {
                out += std::string(names[i]) + "^(" + std::to_string(m.slot(i)) + ") ";
            }
            out += "f^(" + std::to_string(m.f()) + ")";
        }
        return out;
    }

private:
    void check_arity(const JetExpr& o) {
        if (o.arity_ == arity_ || o.t_.empty()) return;
        if (!t_.empty()) throw std::logic_error("jet arity mismatch");
        arity_ = o.arity_;
    }

    int arity_ = 1;
    Terms t_;
};

namespace jet {

/// Bit mask of vector slots; bit 3 is f.
constexpr unsigned kF = 1u << 3;
inline unsigned all_slots(int arity) { return ((1u << arity) - 1) | kF; }

/// Total derivative acting only on the slots in `mask` (Leibniz rule).
template <class C>
JetExpr<C> derive(const JetExpr<C>& e, unsigned mask) {
    JetExpr<C> r(e.arity());
    for (const auto& [m, c] : e.terms()) {
        for (int i = 0; i < 4; ++i) {
            if (!(mask & (1u << i))) continue;
            JetMonomial n = m;
            n.bump(i);
            r.add(n, c);
        }
    }
    return r;
}

/// D over every slot of the expression.
template <class C>
JetExpr<C> derive(const JetExpr<C>& e) {
    return derive(e, all_slots(e.arity()));
}

template <class C>
JetExpr<C> derive_n(JetExpr<C> e, unsigned mask, int n) {
    for (int i = 0; i < n; ++i) e = derive(e, mask);
    return e;
}

/// Moves slot i of e to slot perm[i] in an expression of the new arity.
template <class C>
JetExpr<C> relabel(const JetExpr<C>& e, int new_arity, std::initializer_list<int> perm) {
    JetExpr<C> r(new_arity);
    for (const auto& [m, c] : e.terms()) {
        JetMonomial n;
        n.set(3, m.f());
        int i = 0;
        for (int p : perm) n.set(p, m.slot(i++));
        r.add(n, c);
    }
    return r;
}

/// Replaces V_s^(j) by D^j(V_i V_j' - V_i' V_j). Slots i, j must be absent
/// from e unless equal to s.
template <class C>
JetExpr<C> substitute_bracket(const JetExpr<C>& e, int s, int i, int j, int new_arity) {
    JetExpr<C> r(new_arity);
    for (const auto& [m, c] : e.terms()) {
        int n = m.slot(s);
        JetMonomial base = m;
        base.set(s, 0);
        for (int k = 0; k <= n; ++k) {
            Scalar b = binomial(n, k);
            JetMonomial p = base, q = base;
            p.set(i, k);
            p.set(j, n - k + 1);
            q.set(i, k + 1);
            q.set(j, n - k);
            r.add(p, c * b);
            r.add(q, c * (-b));
        }
    }
    return r;
}

/// Spec form: a one-slot template in Z becomes a two-slot expression in X, Y.
template <class C>
JetExpr<C> substitute_bracket(const JetExpr<C>& z_template) {
    return substitute_bracket(relabel(z_template, 2, {0}), 0, 0, 1, 2);
}

/// Swaps two vector slots.
template <class C>
JetExpr<C> swap_slots(const JetExpr<C>& e, int a, int b) {
    JetExpr<C> r(e.arity());
    for (const auto& [m, c] : e.terms()) {
        JetMonomial n = m;
        std::swap(n.slot(a), n.slot(b));
        r.add(n, c);
    }
    return r;
}

/// e - (X <-> Y).
template <class C>
JetExpr<C> antisymmetrize(const JetExpr<C>& e) {
    if (e.arity() < 2) throw std::logic_error("antisymmetrize needs two vector slots");
    return e - swap_slots(e, 0, 1);
}

/// Monomials with order <= 2 in `slot`.
template <class C>
JetExpr<C> sl2_truncation(const JetExpr<C>& e, int slot) {
    JetExpr<C> r(e.arity());
    for (const auto& [m, c] : e.terms()) {
        if (m.slot(slot) <= 2) r.add(m, c);
    }
    return r;
}

/// L^mu_{V_s}(g) = V_s D(g) + mu V_s' g where g does not involve slot s and
/// D acts on the slots in `mask`.
template <class C>
JetExpr<C> act_density(const JetExpr<C>& g, int s, const Scalar& mu, unsigned mask) {
    JetExpr<C> r = derive(g, mask);
    for (const auto& [m, c] : g.terms()) {
        JetMonomial n = m;
        n.set(s, 1);
        r.add(n, c * mu);
    }
    return r;
}

/// g o L^lam_{V_s}: every f^(c) becomes D^c(V_s f' + lam V_s' f) with D on V_s, f.
/// With target != 3 the density argument sitting in that slot is acted on instead.
template <class C>
JetExpr<C> precompose_density(const JetExpr<C>& g, int s, const Scalar& lam, int target = 3) {
    JetExpr<C> r(g.arity());
    for (const auto& [m, c] : g.terms()) {
        int n = m.slot(target);
        for (int k = 0; k <= n; ++k) {
            Scalar b = binomial(n, k);
            JetMonomial p = m, q = m;
            p.set(s, k);
            p.set(target, n - k + 1);
            q.set(s, k + 1);
            q.set(target, n - k);
            r.add(p, c * b);
            if (!lam.is_zero()) r.add(q, c * (b * lam));
        }
    }
    return r;
}

/// Operator composition a o b where a and b use disjoint vector slots; the
/// derivatives of a fall on b's slots (mask_b) and on f.
template <class C>
JetExpr<C> compose(const JetExpr<C>& a, const JetExpr<C>& b, unsigned mask_b) {
    JetExpr<C> r(a.arity());
    std::map<int, JetExpr<C>> powers;  // D^n(b), cached by n
    for (const auto& [ma, ca] : a.terms()) {
        int n = ma.f();
        auto it = powers.find(n);
        if (it == powers.end()) it = powers.emplace(n, derive_n(b, mask_b | kF, n)).first;
        for (const auto& [mb, cb] : it->second.terms()) {
            JetMonomial m = mb;
            for (int i = 0; i < 3; ++i) m.bump(i, ma.slot(i));
            r.add(m, ca * cb);
        }
    }
    return r;
}

}  // namespace jet
}  // namespace sltriv
