#pragma once

#include "sltriv/transvectant.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sltriv {

/// Outcome of deciding whether a relative 2-cocycle is a coboundary.
struct Triviality {
    bool coboundary = false;
    Scalar scale;               // Omega = scale * dJ_{k+1} when coboundary
    Cochain2<Scalar> residual;  // Omega minus its projection otherwise
};

/// Solves Omega = s * d J_{k+1}^{-1,lam} coefficientwise. Relative
/// 2-coboundaries are exactly the multiples of dJ_{k+1}, so this decides
/// triviality over the scalar field of the source weight.
inline Triviality triviality_test(const Cochain2<Scalar>& om) {
    Triviality r;
    r.residual = om;
    if (om.is_zero()) {
        r.coboundary = true;
        return r;
    }
    Cochain2<Scalar> d = coboundary1(transvectant_J(om.source, om.k + 1));
    if (d.is_zero()) return r;
    const auto& [m, dc] = *d.body.terms().begin();
    Scalar s = om.body.coeff(m) / dc;
    r.residual.body = om.body - d.body.scaled(s);
    if (r.residual.is_zero()) {
        r.coboundary = true;
        r.scale = s;
    }
    return r;
}

/// c = omega * om + coboundary * dJ_{k+1}, when c lies in that span.
struct Decomposition {
    Scalar omega;
    Scalar coboundary;
};

inline std::optional<Decomposition> decompose(const Cochain2<Scalar>& c, const Cochain2<Scalar>& om) {
    const Cochain2<Scalar> d = coboundary1(transvectant_J(c.source, c.k + 1));
    std::map<JetMonomial, size_t> rows;
    for (const JetExpr<Scalar>* e : std::array{&om.body, &d.body, &c.body}) {
        for (const auto& [m, v] : e->terms()) rows.emplace(m, rows.size());
    }
    Matrix a(rows.size(), std::vector<Scalar>(3));
    for (const auto& [m, v] : om.body.terms()) a[rows[m]][0] = v;
    for (const auto& [m, v] : d.body.terms()) a[rows[m]][1] = v;
    for (const auto& [m, v] : c.body.terms()) a[rows[m]][2] = -v;
    for (const auto& v : nullspace(a, 3)) {
        if (v[2].is_zero()) continue;
        Decomposition r{v[0] / v[2], v[1] / v[2]};
        if (d.is_zero()) r.coboundary = Scalar();
        return r;
    }
    return std::nullopt;
}

/// Basis of the sl(2)-invariant operators F_lam -> F_{lam+k} among the
/// constant-coefficient ansatz sum a_j f^(j), found by a linear solve on the
/// order <= 2 part of their coboundary.
inline std::vector<Cochain0> invariant_zero_cochains(const DensityWeight& lam, long k) {
    if (k < 0) return {};
    size_t n = static_cast<size_t>(k) + 1;
    std::vector<Cochain1<Scalar>> images;
    for (size_t j = 0; j < n; ++j) {
        Cochain0 a;
        a.source = lam;
        a.k = k;
        a.body.add(JetMonomial::make({}, static_cast<int>(j)), Scalar(1));
        Cochain1<Scalar> img = coboundary0_unchecked(a);
        img.body = jet::sl2_truncation(img.body, 0);
        images.push_back(std::move(img));
    }
    std::map<JetMonomial, size_t> rows;
    for (const auto& img : images) {
        for (const auto& [m, c] : img.body.terms()) rows.emplace(m, rows.size());
    }
    Matrix a(rows.size(), std::vector<Scalar>(n));
    for (size_t j = 0; j < n; ++j) {
        for (const auto& [m, c] : images[j].body.terms()) a[rows[m]][j] = c;
    }
    std::vector<Cochain0> out;
    for (const auto& v : nullspace(a, n)) {
        Cochain0 c;
        c.source = lam;
        c.k = k;
        for (size_t j = 0; j < n; ++j) c.body.add(JetMonomial::make({}, static_cast<int>(j)), v[j]);
        out.push_back(std::move(c));
    }
    return out;
}

/// True when `c` is a nonzero multiple of `d` (same jet support).
template <class E>
inline bool proportional(const E& c, const E& d) {
    if (c.is_zero() || d.is_zero()) return false;
    const auto& [m, dc] = *d.terms().begin();
    Scalar s = c.coeff(m) / dc;
    return !s.is_zero() && (c - d.scaled(s)).is_zero();
}

struct H1Point {
    int dim = 0;
    bool j_is_cocycle = false;  // dJ_{k+1} = 0
    bool j_is_exact = false;    // J_{k+1} is the coboundary of an invariant operator
};

/// dim H^1_diff(Vect, sl(2); D_{lam,lam+k}) at one weight.
inline H1Point h1_point(const DensityWeight& lam, long k) {
    H1Point p;
    if (k < 2) return p;
    Cochain1<Scalar> j = transvectant_J(lam, k + 1);
    p.j_is_cocycle = coboundary1(j).is_zero();
    for (const auto& a : invariant_zero_cochains(lam, k)) {
        if (proportional(coboundary0(a).body, j.body)) p.j_is_exact = true;
    }
    p.dim = (p.j_is_cocycle ? 1 : 0) - (p.j_is_cocycle && p.j_is_exact ? 1 : 0);
    return p;
}

/// Weight where the dimension departs from its generic value.
struct H1Exception {
    DensityWeight weight;
    int dim = 0;
    std::string reason;  // "dJ vanishes", "Bol coboundary"
};

struct H1Result {
    int dim = 0;
    H1Point point;
    std::vector<H1Exception> exceptional;  // filled for generic weights only
};

namespace detail {

/// gcd over l of the numerators of all coefficients of an expression.
inline LambdaPoly content_gcd(const JetExpr<Scalar>& e) {
    LambdaPoly g;
    for (const auto& [m, c] : e.terms()) g = LambdaPoly::gcd(g, c.value().num());
    return g.monic();
}

}  // namespace detail

/// Dimension at lam. For a generic weight also the exceptional values of the
/// source weight: common roots of the dJ_{k+1} coefficients, plus the Bol
/// weight 2 lam = 1 - k.
inline H1Result h1_dimension(const DensityWeight& lam, long k) {
    H1Result r;
    r.point = h1_point(lam, k);
    r.dim = r.point.dim;
    if (!lam.base.is_generic() || k < 2) return r;

    std::vector<DensityWeight> candidates;
    auto add_rational = [&](const Rational& v) {
        DensityWeight w(Weight::rational(v));
        for (const auto& c : candidates) {
            if (c == w) return;
        }
        candidates.push_back(w);
    };
    LambdaPoly g = detail::content_gcd(coboundary1(transvectant_J(DensityWeight(Weight::generic()), k + 1)).body);
    if (g.degree() > 0) {
        LambdaPoly rest = g;
        for (const auto& root : g.rational_roots()) {
            add_rational(root);
            while (LambdaPoly::divmod(rest, LambdaPoly({-root, 1})).second.is_zero()) {
                rest = LambdaPoly::divmod(rest, LambdaPoly({-root, 1})).first;
            }
        }
        if (rest.degree() == 2) {
            candidates.emplace_back(Weight::algebraic(rest, 1));
            candidates.emplace_back(Weight::algebraic(rest, -1));
        } else if (rest.degree() > 2) {
            throw std::runtime_error("exceptional weights: unsupported factor " + rest.render());
        }
    }
    add_rational(rat(1 - k, 2));
    for (const auto& w : candidates) {
        H1Point p = h1_point(w, k);
        if (p.dim == r.dim) continue;
        H1Exception e;
        e.weight = w;
        e.dim = p.dim;
        e.reason = p.j_is_exact ? "Bol coboundary" : "dJ vanishes";
        r.exceptional.push_back(e);
    }
    return r;
}

}  // namespace sltriv
