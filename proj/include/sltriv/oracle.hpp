#pragma once

#include "sltriv/deformations.hpp"
#include "sltriv/linalg.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Brute-force evaluation of cochains on actual polynomials. Nothing here uses
// the jet algebra beyond reading a monomial as a product of derivatives.
namespace sltriv::oracle {

inline constexpr int kMaxDegree = 512;

/// Polynomial in x, coefficient i on x^i.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }

    static XPoly monomial(int n, const Scalar& c = Scalar(1)) {
        std::vector<Scalar> v(static_cast<size_t>(n) + 1);
        v.back() = c;
        return XPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : Scalar(); }

    XPoly derivative(int n = 1) const {
        if (n <= 0) return *this;
        if (degree() < n) return {};
        std::vector<Scalar> r(c_.size() - static_cast<size_t>(n));
        for (size_t i = 0; i < r.size(); ++i) {
            const Scalar& c = c_[i + static_cast<size_t>(n)];
            if (c.is_zero()) continue;
            long f = 1;
            for (long t = 0; t < n; ++t) f *= static_cast<long>(i) + n - t;
            r[i] = c * Scalar(f);
        }
        return XPoly(std::move(r));
    }

    XPoly& operator+=(const XPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) {
            if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
        }
        trim();
        return *this;
    }
    XPoly& operator-=(const XPoly& o) { return *this += o.scaled(Scalar(-1)); }
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.degree() + b.degree() > kMaxDegree) throw std::overflow_error("degree overflow");
        std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return XPoly(std::move(r));
    }
    XPoly scaled(const Scalar& s) const {
        if (s.is_zero()) return {};
        std::vector<Scalar> r = c_;
        for (auto& c : r) {
            if (!c.is_zero()) c *= s;
        }
        return XPoly(std::move(r));
    }
    friend bool operator==(const XPoly& a, const XPoly& b) { return (a - b).is_zero(); }

    std::string render() const {
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const Scalar& c = c_[static_cast<size_t>(i)];
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c.render() + ")x^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

struct DensityElement {
    XPoly f;
    DensityWeight weight;
};

/// L^lam_X f = X f' + lam X' f.
inline XPoly lie(const XPoly& x, const XPoly& f, const Scalar& lam) {
    return x * f.derivative() + (x.derivative() * f).scaled(lam);
}

/// [X,Y] = X Y' - X' Y.
inline XPoly bracket(const XPoly& x, const XPoly& y) { return x * y.derivative() - x.derivative() * y; }

/// Sum over monomials of c * prod_i v_i^(o_i) * f^(o_f).
inline XPoly apply(const JetExpr<Scalar>& e, const std::vector<XPoly>& vecs, const XPoly& f) {
    XPoly out;
    for (const auto& [m, c] : e.terms()) {
        XPoly t = f.derivative(m.f());
        for (int i = 0; i < e.arity(); ++i) t = t * vecs[static_cast<size_t>(i)].derivative(m.slot(i));
        out += t.scaled(c);
    }
    return out;
}

inline DensityElement evaluate_cochain(const Cochain1<Scalar>& c, const XPoly& x, const DensityElement& f) {
    if (f.weight != c.source) throw std::invalid_argument("density weight does not match the cochain source");
    return {apply(c.body, {x}, f.f), c.target()};
}

inline DensityElement evaluate_cochain(const Cochain2<Scalar>& c, const XPoly& x, const XPoly& y, const DensityElement& f) {
    if (f.weight != c.source) throw std::invalid_argument("density weight does not match the cochain source");
    return {apply(c.body, {x, y}, f.f), c.target()};
}

/// Operator-valued forms as plain functions.
using Form1 = std::function<XPoly(const XPoly& x, const XPoly& f)>;
using Form2 = std::function<XPoly(const XPoly& x, const XPoly& y, const XPoly& f)>;

inline Form1 as_form(const Cochain1<Scalar>& c) {
    return [body = c.body](const XPoly& x, const XPoly& f) { return apply(body, {x}, f); };
}
inline Form2 as_form(const Cochain2<Scalar>& c) {
    return [body = c.body](const XPoly& x, const XPoly& y, const XPoly& f) { return apply(body, {x, y}, f); };
}

/// (db)(X,Y)f with b: F_lam -> F_mu, straight from the Lie derivatives.
inline XPoly direct_coboundary1(const Form1& b, const Scalar& lam, const Scalar& mu, const XPoly& x, const XPoly& y,
                                const XPoly& f) {
    XPoly r = lie(x, b(y, f), mu) - b(y, lie(x, f, lam));
    r -= lie(y, b(x, f), mu) - b(x, lie(y, f, lam));
    r -= b(bracket(x, y), f);
    return r;
}

/// Cyclic sum of X.w(Y,Z) - w([X,Y],Z), the convention of cocycle2_defect.
inline XPoly direct_coboundary2(const Form2& w, const Scalar& lam, const Scalar& mu, const XPoly& x, const XPoly& y,
                                const XPoly& z, const XPoly& f) {
    const XPoly* v[3] = {&x, &y, &z};
    XPoly r;
    for (int i = 0; i < 3; ++i) {
        const XPoly& a = *v[i];
        const XPoly& b = *v[(i + 1) % 3];
        const XPoly& c = *v[(i + 2) % 3];
        r += lie(a, w(b, c, f), mu) - w(b, c, lie(a, f, lam));
        r -= w(bracket(a, b), c, f);
    }
    return r;
}

/// hi(X)(lo(Y) f) - hi(Y)(lo(X) f).
inline XPoly direct_graded_commutator(const Form1& hi, const Form1& lo, const XPoly& x, const XPoly& y, const XPoly& f) {
    return hi(x, lo(y, f)) - hi(y, lo(x, f));
}

// ---------------------------------------------------------------------------
// Specialization of generic weights.

/// Substitutes l = v in every coefficient (no-op for numeric weights).
inline Scalar specialize(const Scalar& s, const std::optional<Rational>& v) {
    if (!v || !s.is_generic()) return s;
    return s.at(*v);
}

inline JetExpr<Scalar> specialize(const JetExpr<Scalar>& e, const std::optional<Rational>& v) {
    if (!v) return e;
    JetExpr<Scalar> r(e.arity());
    for (const auto& [m, c] : e.terms()) r.add(m, specialize(c, v));
    return r;
}

inline Cochain1<Scalar> specialize(const Cochain1<Scalar>& c, const std::optional<Rational>& v) {
    Cochain1<Scalar> r = c;
    r.body = specialize(c.body, v);
    return r;
}

inline Cochain2<Scalar> specialize(const Cochain2<Scalar>& c, const std::optional<Rational>& v) {
    Cochain2<Scalar> r = c;
    r.body = specialize(c.body, v);
    return r;
}

inline Scalar weight_value(const DensityWeight& w, const std::optional<Rational>& v) {
    return specialize(w.value(), w.base.is_generic() ? v : std::nullopt);
}

// ---------------------------------------------------------------------------
// Seeded random inputs. mt19937_64 is fully specified, and the reductions
// below avoid the implementation-defined distributions.

class InputSource {
public:
    explicit InputSource(uint64_t seed, int max_degree = 10) : rng_(seed), max_degree_(max_degree) {}

    long coefficient() { return static_cast<long>(rng_() % 19) - 9; }
    int degree() { return static_cast<int>(rng_() % static_cast<uint64_t>(max_degree_ + 1)); }

    XPoly poly() {
        int d = degree();
        std::vector<Scalar> c(static_cast<size_t>(d) + 1);
        for (auto& v : c) v = Scalar(coefficient());
        return XPoly(std::move(c));
    }
    /// p/q with |p| <= 9, 1 <= q <= 3.
    Rational rational() {
        long p = coefficient();
        long q = static_cast<long>(rng_() % 3) + 1;
        return Rational(p, q);
    }
    uint64_t raw() { return rng_(); }

private:
    std::mt19937_64 rng_;
    int max_degree_;
};

// ---------------------------------------------------------------------------
// Rank-based coboundary test.

/// Rows of a form evaluated on monomial inputs X = x^a, Y = x^b (a < b),
/// f = x^c with a, b, c <= n; one coordinate per output coefficient.
struct MonomialGrid {
    int n = 12;

    template <class F>
    void for_each(F&& fn) const {
        for (int a = 0; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                for (int c = 0; c <= n; ++c) fn(a, b, c);
            }
        }
    }
};

/// Evaluation matrix of several 2-forms: columns = forms.
inline Matrix evaluation_matrix(const std::vector<Form2>& forms, const MonomialGrid& grid) {
    Matrix m;
    grid.for_each([&](int a, int b, int c) {
        XPoly x = XPoly::monomial(a), y = XPoly::monomial(b), f = XPoly::monomial(c);
        std::vector<XPoly> outs;
        int deg = -1;
        for (const auto& w : forms) {
            outs.push_back(w(x, y, f));
            deg = std::max(deg, outs.back().degree());
        }
        for (int d = 0; d <= deg; ++d) {
            std::vector<Scalar> row(forms.size());
            bool any = false;
            for (size_t i = 0; i < outs.size(); ++i) {
                row[i] = outs[i].coeff(d);
                any = any || !row[i].is_zero();
            }
            if (any) m.push_back(std::move(row));
        }
    });
    return m;
}

/// Rank of the span of the forms, seen through their values.
inline size_t evaluation_rank(const std::vector<Form2>& forms, const MonomialGrid& grid) {
    Matrix m = evaluation_matrix(forms, grid);
    return m.empty() ? 0 : rank(std::move(m));
}

enum class RankVerdict { Coboundary, Nontrivial };

struct RankTestResult {
    RankVerdict verdict = RankVerdict::Nontrivial;
    size_t candidates = 0;
    size_t rows = 0;
};

/// Whether Omega = db for a 1-cochain b(X) f = sum c_ij X^(i) f^(j) with
/// i >= 3 and i + j <= k + 1. d is evaluated from the Lie derivatives. The
/// grading by total order splits the problem into independent blocks.
/// Falling factorials (a)_i, i <= n, are independent on a = 0..n, so a bound
/// at least the largest derivative order loses nothing.
inline RankTestResult rank_coboundary_test(const Cochain2<Scalar>& om, int degree_bound = 12) {
    if (!om.source.base.is_numeric()) throw std::invalid_argument("rank test needs a numeric weight");
    Scalar lam = om.source.value(), mu = lam + Scalar(om.k);
    std::map<int, JetExpr<Scalar>> parts;
    for (const auto& [m, c] : om.body.terms()) {
        auto [it, fresh] = parts.try_emplace(m.total(), 2);
        it->second.add(m, c);
    }
    MonomialGrid grid{degree_bound};
    RankTestResult r;
    r.verdict = RankVerdict::Coboundary;
    for (const auto& [order, part] : parts) {
        int d = order - 1;  // b of total order d has db of total order d + 1
        std::vector<Form2> cols;
        for (int i = 3; i <= d && d <= om.k + 1; ++i) {
            JetExpr<Scalar> b(1);
            b.add(JetMonomial::make({i}, d - i), Scalar(1));
            Form1 bf = [b](const XPoly& x, const XPoly& f) { return apply(b, {x}, f); };
            cols.push_back([bf, lam, mu](const XPoly& x, const XPoly& y, const XPoly& f) {
                return direct_coboundary1(bf, lam, mu, x, y, f);
            });
        }
        r.candidates += cols.size();
        cols.push_back([part = part](const XPoly& x, const XPoly& y, const XPoly& f) { return apply(part, {x, y}, f); });
        Matrix m = evaluation_matrix(cols, grid);
        r.rows += m.size();
        Matrix without = m;
        for (auto& row : without) row.pop_back();
        size_t base = without.empty() || without[0].empty() ? 0 : rank(std::move(without));
        if ((m.empty() ? 0 : rank(std::move(m))) > base) r.verdict = RankVerdict::Nontrivial;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Crosschecks of the symbolic expansions.

struct CrosscheckReport {
    std::string id;
    size_t trials = 0;
    size_t failures = 0;
    std::vector<std::string> notes;  // first few failures

    bool passed() const { return failures == 0 && trials > 0; }
};

inline const std::vector<std::string>& crosscheck_ids() {
    static const std::vector<std::string> ids = {"coboundary", "ddzero",       "cup",
                                                 "cup-cocycle", "transvectant", "mc-n6"};
    return ids;
}

namespace detail {

/// A random 1-cochain F_lam -> F_{lam+k}: homogeneous of order k+1 with
/// small integer coefficients; the X-order is not restricted.
inline Cochain1<Scalar> random_cochain(InputSource& in, const DensityWeight& w, long k) {
    Cochain1<Scalar> c;
    c.source = w;
    c.k = k;
    for (int i = 0; i <= k + 1; ++i) c.body.add(JetMonomial::make({i}, static_cast<int>(k + 1 - i)), Scalar(in.coefficient()));
    return c;
}

inline DensityWeight random_weight(InputSource& in) { return DensityWeight(Weight::rational(in.rational())); }

/// A composable catalog pair (lo: l -> l+j1, hi: l+j1 -> l+j1+j2) at a
/// random rational weight where both cocycles exist.
inline std::pair<Cochain1<Scalar>, Cochain1<Scalar>> random_catalog_pair(InputSource& in) {
    for (;;) {
        DensityWeight w = random_weight(in);
        long j1 = static_cast<long>(in.raw() % 5) + 2, j2 = static_cast<long>(in.raw() % 5) + 2;
        if (cocycle_exists(w, j1) && cocycle_exists(w.shifted(j1), j2)) {
            return {cocycle(w, j1), cocycle(w.shifted(j1), j2)};
        }
    }
}

inline void record(CrosscheckReport& r, bool ok, const std::string& what) {
    ++r.trials;
    if (ok) return;
    ++r.failures;
    if (r.notes.size() < 5) r.notes.push_back(what);
}

}  // namespace detail

/// The n = 6, delta = 7 space as a truncated deformation.
inline const Deformation& worked_n6() {
    static const Deformation d = analyze(make_spec(6, DensityWeight(Weight::rational(7))), 4);
    return d;
}

/// Operator L_X + sum_m L^(m)_X on S, truncated at a given order, applied to
/// a component vector. Coefficients are evaluated at `point`.
class DeformedAction {
public:
    DeformedAction(const Deformation& d, const std::map<ParamSymbol, Scalar>& point,
                   std::optional<Rational> l = std::nullopt)
        : d_(d), l_(l) {
        const Family* fam[5] = {nullptr, &d.L1, &d.L2, &d.L3, &d.L4};
        for (int m = 1; m <= 4; ++m) {
            for (const auto& [key, terms] : *fam[m]) {
                JetExpr<Scalar> body(1);
                for (const auto& t : terms) body += t.op.body.scaled(t.coeff.evaluate(point));
                body = specialize(body, l_);
                if (!body.is_zero()) orders_[m].emplace(key, std::move(body));
            }
        }
    }

    using Vec = std::map<long, XPoly>;  // weight offset -> component

    Scalar weight(long off) const { return weight_value(d_.spec.weight(off), l_); }

    /// L^(m)_X v; m = 0 is the Lie derivative.
    Vec apply_order(int m, const XPoly& x, const Vec& v) const {
        Vec out;
        if (m == 0) {
            for (const auto& [off, f] : v) out[off] = lie(x, f, weight(off));
        } else if (m <= 4) {
            for (const auto& [key, body] : orders_[m]) {
                auto it = v.find(key.first);
                if (it == v.end()) continue;
                out[key.first + key.second] += apply(body, {x}, it->second);
            }
        }
        for (auto it = out.begin(); it != out.end();) {
            if (it->second.is_zero()) it = out.erase(it);
            else ++it;
        }
        return out;
    }

    /// Order-m part of [A_X, A_Y] - A_[X,Y] applied to v.
    Vec homomorphism_defect(int m, const XPoly& x, const XPoly& y, const Vec& v) const {
        Vec out;
        auto add = [&](const Vec& w, int sign) {
            for (const auto& [off, f] : w) out[off] += sign > 0 ? f : f.scaled(Scalar(-1));
        };
        for (int i = 0; i <= m; ++i) {
            int j = m - i;
            add(apply_order(i, x, apply_order(j, y, v)), 1);
            add(apply_order(j, y, apply_order(i, x, v)), -1);
        }
        add(apply_order(m, bracket(x, y), v), -1);
        for (auto it = out.begin(); it != out.end();) {
            if (it->second.is_zero()) it = out.erase(it);
            else ++it;
        }
        return out;
    }

    /// The symbolic mc_defect of order m, evaluated on the same inputs.
    Vec symbolic_defect(int m, const XPoly& x, const XPoly& y, const Vec& v,
                        const std::map<ParamSymbol, Scalar>& point) const {
        Vec out;
        for (const auto& [key, body] : mc_defect(d_, m)) {
            auto it = v.find(key.first);
            if (it == v.end()) continue;
            JetExpr<Scalar> e(2);
            for (const auto& [mono, c] : body.terms()) e.add(mono, c.evaluate(point));
            out[key.first + key.second] += apply(specialize(e, l_), {x, y}, it->second);
        }
        for (auto it = out.begin(); it != out.end();) {
            if (it->second.is_zero()) it = out.erase(it);
            else ++it;
        }
        return out;
    }

private:
    const Deformation& d_;
    std::optional<Rational> l_;
    std::map<BlockKey, JetExpr<Scalar>> orders_[5];
};

/// Random rational values for every parameter.
inline std::map<ParamSymbol, Scalar> random_point(const DeformationSpec& spec, InputSource& in) {
    std::map<ParamSymbol, Scalar> p;
    for (const auto& s : spec.parameters) p[s] = Scalar(in.rational());
    return p;
}

/// A random vector with one random component per weight of the window.
inline DeformedAction::Vec random_vector(const DeformationSpec& spec, InputSource& in) {
    DeformedAction::Vec v;
    for (long off = spec.lo; off <= spec.hi; ++off) v[off] = in.poly();
    return v;
}

inline CrosscheckReport crosscheck_expansion(const std::string& id, size_t trials, uint64_t seed) {
    CrosscheckReport r;
    r.id = id;
    InputSource in(seed);
    if (id == "coboundary") {
        for (size_t t = 0; t < trials; ++t) {
            DensityWeight w = detail::random_weight(in);
            auto b = detail::random_cochain(in, w, static_cast<long>(in.raw() % 7) + 1);
            XPoly x = in.poly(), y = in.poly(), f = in.poly();
            Scalar lam = w.value(), mu = lam + Scalar(b.k);
            XPoly sym = evaluate_cochain(coboundary1(b), x, y, {f, w}).f;
            detail::record(r, sym == direct_coboundary1(as_form(b), lam, mu, x, y, f), "db at " + w.label());
        }
    } else if (id == "ddzero") {
        for (size_t t = 0; t < trials; ++t) {
            DensityWeight w = detail::random_weight(in);
            auto b = detail::random_cochain(in, w, static_cast<long>(in.raw() % 7) + 1);
            XPoly x = in.poly(), y = in.poly(), z = in.poly(), f = in.poly();
            Scalar lam = w.value(), mu = lam + Scalar(b.k);
            Form1 bf = as_form(b);
            Form2 db = [&](const XPoly& u, const XPoly& v, const XPoly& g) {
                return direct_coboundary1(bf, lam, mu, u, v, g);
            };
            bool symbolic = cocycle2_defect(coboundary1(b)).is_zero();
            bool direct = direct_coboundary2(db, lam, mu, x, y, z, f).is_zero();
            detail::record(r, symbolic && direct, "ddb != 0 at " + w.label());
        }
    } else if (id == "cup") {
        for (size_t t = 0; t < trials; ++t) {
            auto [lo, hi] = detail::random_catalog_pair(in);
            XPoly x = in.poly(), y = in.poly(), f = in.poly();
            XPoly sym = evaluate_cochain(cup(hi, lo), x, y, {f, lo.source}).f;
            XPoly direct = direct_graded_commutator(as_form(hi), as_form(lo), x, y, f).scaled(Scalar(kCupSign));
            detail::record(r, sym == direct, "cup at " + lo.source.label());
        }
    } else if (id == "cup-cocycle") {
        for (size_t t = 0; t < trials; ++t) {
            auto [lo, hi] = detail::random_catalog_pair(in);
            XPoly x = in.poly(), y = in.poly(), z = in.poly(), f = in.poly();
            Scalar lam = lo.source.value(), mu = lam + Scalar(lo.k + hi.k);
            Form1 h = as_form(hi), l = as_form(lo);
            Form2 w = [&](const XPoly& u, const XPoly& v, const XPoly& g) { return direct_graded_commutator(h, l, u, v, g); };
            bool symbolic = cocycle2_defect(cup(hi, lo)).is_zero();
            bool direct = direct_coboundary2(w, lam, mu, x, y, z, f).is_zero();
            detail::record(r, symbolic && direct, "cup not closed at " + lo.source.label());
        }
    } else if (id == "transvectant") {
        // J_k as a bilinear map F_tau x F_lam -> F_{tau+lam+k} commutes with sl(2).
        for (size_t t = 0; t < trials; ++t) {
            DensityWeight w = detail::random_weight(in);
            long k = static_cast<long>(in.raw() % 6) + 3;
            auto j = transvectant_J(w, k);
            int a = static_cast<int>(in.raw() % 3);
            XPoly x = XPoly::monomial(a, Scalar(in.coefficient() == 0 ? 1 : in.coefficient()));
            XPoly y = in.poly(), f = in.poly();
            Scalar lam = w.value(), mu = lam + Scalar(j.k);
            // L_X commutes with J(Y) up to J([X,Y]) for X in sl(2)
            Form1 jf = as_form(j);
            XPoly lhs = lie(x, jf(y, f), mu) - jf(y, lie(x, f, lam));
            XPoly rhs = jf(bracket(x, y), f);
            detail::record(r, lhs == rhs, "J_" + std::to_string(k) + " at " + w.label());
        }
    } else if (id == "mc-n6") {
        const Deformation& d = worked_n6();
        for (size_t t = 0; t < trials; ++t) {
            auto point = random_point(d.spec, in);
            DeformedAction act(d, point);
            XPoly x = in.poly(), y = in.poly();
            auto v = random_vector(d.spec, in);
            bool ok = true;
            for (int m = 2; m <= 4 && ok; ++m) {
                auto direct = act.homomorphism_defect(m, x, y, v);
                ok = direct.empty() && act.symbolic_defect(m, x, y, v, point).empty();
            }
            detail::record(r, ok, "order-2..4 defect nonzero");
        }
    } else {
        throw std::invalid_argument("unknown crosscheck: " + id);
    }
    return r;
}

/// Homomorphism check of a deformation at one parameter point: every order
/// 1..max_order of [A_X, A_Y] - A_[X,Y] vanishes on random inputs.
struct HomomorphismReport {
    size_t trials = 0;
    std::vector<int> failing_orders;
    bool symbolic_agrees = true;  // direct order-m defect equals mc_defect(m) for m <= 4

    bool ok() const { return failing_orders.empty() && symbolic_agrees; }
};

inline HomomorphismReport check_homomorphism(const Deformation& d, const std::map<ParamSymbol, Scalar>& point,
                                             size_t trials, uint64_t seed, std::optional<Rational> l = std::nullopt,
                                             int max_order = 8) {
    HomomorphismReport r;
    DeformedAction act(d, point, l);
    InputSource in(seed);
    std::set<int> bad;
    for (size_t t = 0; t < trials; ++t) {
        XPoly x = in.poly(), y = in.poly();
        auto v = random_vector(d.spec, in);
        ++r.trials;
        for (int m = 1; m <= max_order; ++m) {
            auto direct = act.homomorphism_defect(m, x, y, v);
            if (!direct.empty()) bad.insert(m);
            if (m >= 2 && m <= 4 && act.symbolic_defect(m, x, y, v, point) != direct) r.symbolic_agrees = false;
        }
    }
    r.failing_orders.assign(bad.begin(), bad.end());
    return r;
}

}  // namespace sltriv::oracle
