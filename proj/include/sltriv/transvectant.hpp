#pragma once

#include "sltriv/cochain.hpp"
#include "sltriv/linalg.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sltriv {

/// Coefficients c_{i,j} (i + j = k) of a bilinear operator
/// (phi, psi) -> sum c_{i,j} phi^(i) psi^(j).
struct CoefficientTable {
    enum class Origin { GenericFormula, RecurrenceSeed, Nullspace };

    long k = 0;
    std::map<std::pair<int, int>, Scalar> entries;
    Origin origin = Origin::GenericFormula;
    int seed_i = -1;

    Scalar at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? Scalar() : it->second;
    }
    void set(int i, int j, const Scalar& v) {
        if (v.is_zero()) entries.erase({i, j});
        else entries[{i, j}] = v;
    }

    /// (i+1)(i+2tau) c_{i+1,j} + (j+1)(j+2lam) c_{i,j+1} = 0 for all i+j = k-1.
    bool satisfies_recurrence(const Scalar& tau, const Scalar& lam) const {
        for (int i = 0; i < k; ++i) {
            int j = static_cast<int>(k) - 1 - i;
            Scalar lhs = Scalar(i + 1) * (Scalar(i) + Scalar(2) * tau) * at(i + 1, j) +
                         Scalar(j + 1) * (Scalar(j) + Scalar(2) * lam) * at(i, j + 1);
            if (!lhs.is_zero()) return false;
        }
        return true;
    }
};

/// x(x-1)...(x-i+1)/i!
inline Scalar generalized_binomial(const Scalar& x, int i) {
    Scalar r(1);
    for (int t = 0; t < i; ++t) r *= x - Scalar(t);
    return r / Scalar(factorial(i));
}

/// 2w in {0, -1, ..., -(k-1)}.
inline bool is_resonant(const Scalar& w, long k) {
    if (!w.is_constant() || w.modulus()) return false;
    Rational d = 2 * w.constant_value();
    if (d.get_den() != 1) return false;
    return d <= 0 && d >= -(k - 1);
}

/// Closed form away from resonance:
/// c_{i,j} = (-1)^j binom(2tau+k-1, j) binom(2lam+k-1, i).
inline CoefficientTable generic_coefficients(const Scalar& tau, const Scalar& lam, long k) {
    if (is_resonant(tau, k) || is_resonant(lam, k)) {
        throw std::invalid_argument("resonant weights: use resonant_solutions");
    }
    CoefficientTable t;
    t.k = k;
    Scalar a = Scalar(2) * tau + Scalar(k - 1), b = Scalar(2) * lam + Scalar(k - 1);
    for (int i = 0; i <= k; ++i) {
        int j = static_cast<int>(k) - i;
        Scalar c = generalized_binomial(a, j) * generalized_binomial(b, i);
        t.set(i, j, j % 2 ? -c : c);
    }
    return t;
}

/// Basis of the solution space of the recurrence (one table per basis vector).
inline std::vector<CoefficientTable> resonant_solutions(const Scalar& tau, const Scalar& lam, long k) {
    size_t n = static_cast<size_t>(k) + 1;  // unknown i <-> c_{i,k-i}
    Matrix a;
    for (int i = 0; i < k; ++i) {
        int j = static_cast<int>(k) - 1 - i;
        std::vector<Scalar> row(n);
        row[static_cast<size_t>(i + 1)] = Scalar(i + 1) * (Scalar(i) + Scalar(2) * tau);
        row[static_cast<size_t>(i)] = Scalar(j + 1) * (Scalar(j) + Scalar(2) * lam);
        a.push_back(std::move(row));
    }
    std::vector<CoefficientTable> out;
    for (const auto& v : nullspace(a, n)) {
        CoefficientTable t;
        t.k = k;
        t.origin = CoefficientTable::Origin::Nullspace;
        for (size_t i = 0; i < n; ++i) t.set(static_cast<int>(i), static_cast<int>(k) - static_cast<int>(i), v[i]);
        out.push_back(std::move(t));
    }
    return out;
}

/// Predicted dimension: 2 iff 2lam = -s, 2tau = -t with s, t resonant and t > k-s-2.
inline int resonant_dimension_predicate(const Rational& tau, const Rational& lam, long k) {
    Rational t = -2 * tau, s = -2 * lam;
    auto in_range = [&](const Rational& x) { return x.get_den() == 1 && x >= 0 && x <= k - 1; };
    if (in_range(t) && in_range(s) && t > k - s - 2) return 2;
    return 1;
}

/// The table as a bilinear expression: phi in vector slot 1, psi as f.
inline JetExpr<Scalar> bilinear_body(const CoefficientTable& t) {
    JetExpr<Scalar> e(2);
    for (const auto& [ij, c] : t.entries) e.add(JetMonomial::make({0, ij.first}, ij.second), c);
    return e;
}

/// Order <= 2 part in X of L_X J(phi,psi) - J(L_X phi, psi) - J(phi, L_X psi).
inline JetExpr<Scalar> bilinear_invariance_defect(const CoefficientTable& t, const Scalar& tau, const Scalar& lam) {
    JetExpr<Scalar> j = bilinear_body(t);
    Scalar nu = tau + lam + Scalar(t.k);
    JetExpr<Scalar> e = jet::act_density(j, 0, nu, (1u << 1) | jet::kF);
    e -= jet::precompose_density(j, 0, tau, 1);
    e -= jet::precompose_density(j, 0, lam, 3);
    return jet::sl2_truncation(e, 0);
}

/// J_k^{-1,lam} as a 1-cochain F_lam -> F_{lam+k-1}, seeded c_{3,k-3} = 1.
inline Cochain1<Scalar> transvectant_J(const DensityWeight& lam, long k) {
    if (k < 3) throw std::invalid_argument("transvectant_J needs k >= 3");
    Scalar l = lam.value();
    Cochain1<Scalar> c;
    c.source = lam;
    c.k = k - 1;
    Scalar cur(1);
    c.body.add(JetMonomial::make({3}, static_cast<int>(k) - 3), cur);
    for (long i = 3; i < k; ++i) {
        long j = k - 1 - i;  // c_{i+1,j} from c_{i,j+1}
        cur = -Scalar(j + 1) * (Scalar(j) + Scalar(2) * l) * cur / Scalar((i + 1) * (i - 2));
        c.body.add(JetMonomial::make({static_cast<int>(i + 1)}, static_cast<int>(j)), cur);
    }
    return c;
}

/// Coefficient table of a 1-cochain body (i = X-order, j = f-order).
inline CoefficientTable table_of(const Cochain1<Scalar>& c) {
    CoefficientTable t;
    t.k = c.k + 1;
    t.origin = CoefficientTable::Origin::RecurrenceSeed;
    t.seed_i = 3;
    for (const auto& [m, v] : c.body.terms()) t.set(m.slot(0), m.f(), v);
    return t;
}

/// Printed leading coefficient of J_k^{-1,l} in the displayed identities.
inline Rational printed_normalization(long k) { return k == 6 ? Rational(3) : Rational(1); }

/// The second invariant operator I_k^{-1,l}, defined when 2l is 1-k, 2-k or 3-k.
inline Cochain1<Scalar> operator_I(const DensityWeight& lam, long k) {
    Scalar two_l = Scalar(2) * lam.value();
    int branch = 0;
    for (int b = 1; b <= 3; ++b) {
        if ((two_l - Scalar(b - k)).is_zero()) branch = b;
    }
    if (branch == 0) throw std::invalid_argument("I-operator undefined");
    Cochain1<Scalar> c;
    c.source = lam;
    c.k = k - 1;
    int kk = static_cast<int>(k);
    c.body.add(JetMonomial::make({0}, kk), Scalar(1));
    if (branch == 2) c.body.add(JetMonomial::make({1}, kk - 1), Scalar(rat(k, 2)));
    if (branch == 3) {
        c.body.add(JetMonomial::make({1}, kk - 1), Scalar(k));
        c.body.add(JetMonomial::make({2}, kk - 2), Scalar(rat(k * (k - 1), 2)));
    }
    return c;
}

}  // namespace sltriv
