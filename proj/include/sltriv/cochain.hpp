#pragma once

#include "sltriv/jet.hpp"
#include "sltriv/param_poly.hpp"
#include "sltriv/weight.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace sltriv {

/// Translation-invariant operator F_source -> F_{source+k}: a linear
/// combination of f^(c) (vector arity 0).
struct Cochain0 {
    DensityWeight source;
    long k = 0;
    JetExpr<Scalar> body{0};
};

/// Map X -> operator F_source -> F_{source+k}, body in slots (X, f).
template <class C = Scalar>
struct Cochain1 {
    DensityWeight source;
    long k = 0;
    JetExpr<C> body{1};

    DensityWeight target() const { return source.shifted(k); }
    bool is_zero() const { return body.is_zero(); }
};

/// Antisymmetric map (X, Y) -> operator, body in slots (X, Y, f).
template <class C = Scalar>
struct Cochain2 {
    DensityWeight source;
    long k = 0;
    JetExpr<C> body{2};

    DensityWeight target() const { return source.shifted(k); }
    bool is_zero() const { return body.is_zero(); }
};

/// Trilinear expression in (X, Y, Z) applied to f.
template <class C = Scalar>
struct Cochain3Defect {
    DensityWeight source;
    long k = 0;
    JetExpr<C> body{3};

    bool is_zero() const { return body.is_zero(); }
};

/// Orientation of the cup product relative to the plain graded commutator,
/// fixed so that (l+4) Omega_{l,l+5} = 2 [[C_{l+2,l+5}, C_{l,l+2}]] holds.
inline constexpr int kCupSign = -1;

namespace detail {

/// L^{lam,mu}_{V_s}(A) = L^mu_{V_s} o A - A o L^lam_{V_s}; A does not involve
/// slot s and its present vector slots are `mask`.
template <class C>
JetExpr<C> operator_action(const JetExpr<C>& a, int s, unsigned mask, const Scalar& lam, const Scalar& mu) {
    return jet::act_density(a, s, mu, mask | jet::kF) - jet::precompose_density(a, s, lam);
}

}  // namespace detail

/// Symbolic X -> L^{lam,lam+k}_X(A).
inline Cochain1<Scalar> coboundary0_unchecked(const Cochain0& a) {
    Cochain1<Scalar> r;
    r.source = a.source;
    r.k = a.k;
    Scalar lam = a.source.value();
    r.body = detail::operator_action(jet::relabel(a.body, 1, {}), 0, 0u, lam, lam + Scalar(a.k));
    return r;
}

/// Coboundary of an invariant 0-cochain.
inline Cochain1<Scalar> coboundary0(const Cochain0& a) {
    Cochain1<Scalar> r = coboundary0_unchecked(a);
    if (!jet::sl2_truncation(r.body, 0).is_zero()) throw std::invalid_argument("not an invariant 0-cochain");
    return r;
}

/// (db)(X,Y) = L_X(b(Y)) - L_Y(b(X)) - b([X,Y]).
template <class C>
Cochain2<C> coboundary1(const Cochain1<C>& b) {
    Cochain2<C> r;
    r.source = b.source;
    r.k = b.k;
    Scalar lam = b.source.value(), mu = lam + Scalar(b.k);
    JetExpr<C> by = jet::relabel(b.body, 2, {1});
    JetExpr<C> bx = jet::relabel(b.body, 2, {0});
    JetExpr<C> body = detail::operator_action(by, 0, 1u << 1, lam, mu);
    body -= detail::operator_action(bx, 1, 1u << 0, lam, mu);
    body -= jet::substitute_bracket(bx, 0, 0, 1, 2);
    r.body = std::move(body);
    return r;
}

/// Cyclic sum X Omega(Y,Z) - Omega([X,Y],Z) over (X,Y,Z).
template <class C>
Cochain3Defect<C> cocycle2_defect(const Cochain2<C>& om) {
    Cochain3Defect<C> r;
    r.source = om.source;
    r.k = om.k;
    Scalar lam = om.source.value(), mu = lam + Scalar(om.k);
    JetExpr<C> body(3);
    const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& c : cyc) {
        int x = c[0], y = c[1], z = c[2];
        JetExpr<C> oyz = jet::relabel(om.body, 3, {y, z});
        body += detail::operator_action(oyz, x, (1u << y) | (1u << z), lam, mu);
        JetExpr<C> oxz = jet::relabel(om.body, 3, {x, z});
        body -= jet::substitute_bracket(oxz, x, x, y, 3);
    }
    r.body = std::move(body);
    return r;
}

/// Order <= 2 part in X of L_X(c)(Y) = L_X(c(Y)) - c([X,Y]).
template <class C>
JetExpr<C> invariance_defect(const Cochain1<C>& c) {
    Scalar lam = c.source.value(), mu = lam + Scalar(c.k);
    JetExpr<C> cy = jet::relabel(c.body, 2, {1});
    JetExpr<C> e = detail::operator_action(cy, 0, 1u << 1, lam, mu);
    e -= jet::substitute_bracket(cy, 1, 0, 1, 2);
    return jet::sl2_truncation(e, 0);
}

/// Order <= 2 part in X of L_X(Omega)(Y,Z).
template <class C>
JetExpr<C> invariance_defect(const Cochain2<C>& om) {
    Scalar lam = om.source.value(), mu = lam + Scalar(om.k);
    JetExpr<C> oyz = jet::relabel(om.body, 3, {1, 2});
    JetExpr<C> e = detail::operator_action(oyz, 0, (1u << 1) | (1u << 2), lam, mu);
    e -= jet::substitute_bracket(oyz, 1, 0, 1, 3);
    e -= jet::substitute_bracket(oyz, 2, 0, 2, 3);
    return jet::sl2_truncation(e, 0);
}

template <class C>
bool is_antisymmetric(const Cochain2<C>& om) {
    return (om.body + jet::swap_slots(om.body, 0, 1)).is_zero();
}

/// Vanishes whenever one argument lies in sl(2).
template <class C>
bool is_relative(const Cochain2<C>& om) {
    for (const auto& [m, c] : om.body.terms()) {
        if (m.slot(0) < 3 || m.slot(1) < 3) return false;
    }
    return is_antisymmetric(om);
}

template <class C>
bool is_relative(const Cochain1<C>& c) {
    return jet::sl2_truncation(c.body, 0).is_zero() && invariance_defect(c).is_zero();
}

/// hi(X) o lo(Y) - hi(Y) o lo(X), the plain graded commutator of two
/// composable 1-cochains (lo lands where hi starts).
template <class C>
Cochain2<C> graded_commutator(const Cochain1<C>& hi, const Cochain1<C>& lo) {
    if (hi.source != lo.target()) throw std::invalid_argument("non-composable cup operands");
    Cochain2<C> r;
    r.source = lo.source;
    r.k = lo.k + hi.k;
    JetExpr<C> a = jet::relabel(hi.body, 2, {0});
    JetExpr<C> b = jet::relabel(lo.body, 2, {1});
    JetExpr<C> e = jet::compose(a, b, 1u << 1);
    r.body = jet::antisymmetrize(e);
    return r;
}

/// Cup product [[c1, c2]] with the calibrated orientation. The bracket is
/// symmetric in its operands, so either composable order is accepted.
template <class C>
Cochain2<C> cup(const Cochain1<C>& c1, const Cochain1<C>& c2) {
    bool forward = c1.source == c2.target();
    if (!forward && c2.source != c1.target()) throw std::invalid_argument("non-composable cup operands");
    Cochain2<C> r = forward ? graded_commutator(c1, c2) : graded_commutator(c2, c1);
    if (kCupSign < 0) r.body = -r.body;
    return r;
}

/// Scalar cochain with every coefficient multiplied by a parameter polynomial.
inline JetExpr<ParamPoly> lift(const JetExpr<Scalar>& e, const ParamPoly& p) {
    JetExpr<ParamPoly> r(e.arity());
    if (p.is_zero()) return r;
    for (const auto& [m, c] : e.terms()) r.add(m, p.scaled(c));
    return r;
}

/// Coefficient renderer for Scalar jets.
inline std::string coef_text(const Scalar& c) {
    std::string s = c.render();
    return c.is_compound() ? "(" + s + ")" : s;
}

inline std::string render(const JetExpr<Scalar>& e) { return e.render(coef_text); }

}  // namespace sltriv
