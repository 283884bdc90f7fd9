#pragma once

#include "sltriv/catalog.hpp"
#include "sltriv/ideal.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sltriv {

/// The symbol space S^n_delta: densities of weights delta - j, j = 0..n.
/// Weights are base + offset; a generic delta is carried as l + n so the
/// lowest weight is l itself.
struct DeformationSpec {
    long n = 0;
    DensityWeight delta;
    Weight base;
    long lo = 0;
    long hi = 0;
    std::vector<ParamSymbol> parameters;  // sorted

    DensityWeight weight(long off) const { return DensityWeight(base, off); }
    bool in_window(long off) const { return off >= lo && off <= hi; }
    bool has(long src, long tgt) const {
        return std::binary_search(parameters.begin(), parameters.end(), ParamSymbol{src, tgt});
    }
    /// t[src,tgt] when it is a parameter of this space, else 0.
    ParamPoly t(long src, long tgt) const { return has(src, tgt) ? ParamPoly::var({src, tgt}) : ParamPoly(); }

    std::string delta_label() const { return base.is_generic() ? weight(hi).label() : delta.label(); }
};

/// t[l,l+j] for 2 <= j <= 6 with both weights in the window and a catalog
/// cocycle at (l, j).
inline std::vector<ParamSymbol> enumerate_parameters(const Weight& base, long lo, long hi) {
    std::vector<ParamSymbol> out;
    for (long s = lo; s <= hi; ++s) {
        for (long j = 2; j <= 6 && s + j <= hi; ++j) {
            if (cocycle_exists(DensityWeight(base, s), j)) out.push_back({s, s + j});
        }
    }
    return out;
}

inline DeformationSpec make_spec(long n, const DensityWeight& delta) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    DeformationSpec s;
    s.n = n;
    s.delta = delta;
    s.base = delta.base;
    if (delta.base.is_generic()) {
        s.lo = 0;
        s.hi = n;
    } else {
        s.lo = delta.offset - n;
        s.hi = delta.offset;
    }
    s.parameters = enumerate_parameters(s.base, s.lo, s.hi);
    return s;
}

/// coeff * op, one summand of a parameterized cochain.
struct ParamTerm {
    ParamPoly coeff;
    Cochain1<Scalar> op;
};

struct ParamTerm2 {
    ParamPoly coeff;
    Cochain2<Scalar> op;
};

/// Block (source offset, span) -> summands.
using BlockKey = std::pair<long, long>;
using Family = std::map<BlockKey, std::vector<ParamTerm>>;
using Family2 = std::map<BlockKey, std::vector<ParamTerm2>>;

template <class T>
JetExpr<ParamPoly> block_body(const std::vector<T>& terms, int arity) {
    JetExpr<ParamPoly> e(arity);
    for (const auto& t : terms) e += lift(t.op.body, t.coeff);
    return e;
}

inline Family build_L1(const DeformationSpec& spec) {
    Family f;
    for (const auto& p : spec.parameters) {
        f[{p.src, p.span()}].push_back({ParamPoly::var(p), cocycle(spec.weight(p.src), p.span())});
    }
    return f;
}

// ---------------------------------------------------------------------------
// The printed omega functions.

/// a and b of the k=7 relation as printed, at one weight (not -3).
inline std::pair<Scalar, Scalar> printed_ab(const Scalar& l) {
    Scalar den = Scalar(4) * l * l * l + Scalar(24) * l * l + Scalar(17) * l - Scalar(15);
    if (den.is_zero()) return {Scalar(0), Scalar(1)};
    return {Scalar(1), printed::abc_b(l)};
}

/// omega_{l,l+k}(t) with l = weight(src), as printed. Missing parameters
/// count as 0. nullopt where no value is printed (k = 7 at -2, -4).
inline std::optional<ParamPoly> printed_omega(const DeformationSpec& spec, long src, long k) {
    DensityWeight w = spec.weight(src);
    Scalar l = w.value();
    auto T = [&](long a, long b) { return spec.t(src + a, src + b); };
    switch (k) {
        case 5:
            return (T(0, 2) * T(2, 5)).scaled(-(l + Scalar(4)) / Scalar(2)) + (T(0, 3) * T(3, 5)).scaled(l / Scalar(2));
        case 6:
            return (T(0, 2) * T(2, 6)).scaled((Scalar(2) * l + Scalar(9)) / Scalar(2)) +
                   (T(0, 3) * T(3, 6)).scaled(Scalar(rat(5, 2))) -
                   (T(0, 4) * T(4, 6)).scaled((Scalar(2) * l + Scalar(1)) / Scalar(2));
        case 7: {
            if (weight_is(w, -6)) {
                return (T(0, 3) * T(3, 7) - (T(0, 2) * T(2, 7)).scaled(Scalar(6)) +
                        (T(0, 4) * T(4, 7)).scaled(Scalar(rat(11, 5))))
                    .scaled(Scalar(rat(1, 14)));
            }
            if (weight_is(w, 0)) {
                return ((T(0, 3) * T(3, 7)).scaled(Scalar(rat(11, 10))) + (T(0, 4) * T(4, 7)).scaled(Scalar(rat(1, 2))) +
                        (T(0, 5) * T(5, 7)).scaled(Scalar(3)))
                    .scaled(Scalar(rat(-1, 7)));
            }
            if (weight_is(w, -3)) return ParamPoly();
            if (weight_is(w, -2) || weight_is(w, -4)) return std::nullopt;
            auto [a, b] = printed_ab(l);
            if (b.is_zero()) return (T(0, 3) * T(3, 7)).scaled(-printed::abc_c(l, b));
            return (T(0, 4) * T(4, 7)).scaled(-printed::abc_c(l, b) / b);
        }
        case 8:
            if (weight_is(w, 0)) return (T(0, 5) * T(5, 8)).scaled(Scalar(rat(2, 11)));
            if (weight_is(w, -7)) return (T(0, 3) * T(3, 8)).scaled(Scalar(rat(2, 15)));
            return ParamPoly();
        default: return ParamPoly();
    }
}

struct OmegaEntry {
    long src = 0;
    long k = 0;
    ParamPoly poly;
};

/// Printed omega for every (l, k), k = 5..8, whose block lies in the window.
inline std::vector<OmegaEntry> omega_table(const DeformationSpec& spec) {
    std::vector<OmegaEntry> out;
    for (long k = 5; k <= 8; ++k) {
        for (long s = spec.lo; s + k <= spec.hi; ++s) {
            if (k == 8 && !weight_is(spec.weight(s), 0) && !weight_is(spec.weight(s), -7)) continue;
            auto p = printed_omega(spec, s, k);
            if (p) out.push_back({s, k, *p});
        }
    }
    return out;
}

/// Whether the printed L^(2) carries a term omega_{l,l+k} J_{k+1} at l.
inline bool printed_L2_includes(const DensityWeight& w, long k) {
    switch (k) {
        case 5: return !(weight_is(w, 0) || weight_is(w, -2) || weight_is(w, -4));
        case 6: return !(is_a_weight(w, 0) || weight_is(w, rat(-5, 2)));
        case 7: return true;
        case 8: return weight_is(w, 0) || weight_is(w, -7);
        default: return false;
    }
}

// ---------------------------------------------------------------------------
// Maurer-Cartan obstructions.

/// -sum G(hi, lo) over composable summands, hi from `upper` after lo from
/// `lower`, where G(hi, lo)(X,Y) = hi(X) lo(Y) - hi(Y) lo(X). With
/// [L_X + B(X), L_Y + B(Y)] = L_[X,Y] + B([X,Y]) this is the right side of
/// dL^(m) = -sum_{i+j=m} G(L^(i), L^(j)).
inline void add_obstruction(Family2& out, const Family& upper, const Family& lower) {
    for (const auto& [lk, lterms] : lower) {
        long mid = lk.first + lk.second;
        for (const auto& [uk, uterms] : upper) {
            if (uk.first != mid) continue;
            BlockKey key{lk.first, lk.second + uk.second};
            for (const auto& lo : lterms) {
                for (const auto& up : uterms) {
                    ParamPoly c = -(up.coeff * lo.coeff);
                    if (c.is_zero()) continue;
                    out[key].push_back({c, graded_commutator(up.op, lo.op)});
                }
            }
        }
    }
}

/// One block of an obstruction split as s * dJ_{k+1} + residual.
struct BlockSplit {
    BlockKey key;
    ParamPoly scale;                    // s
    std::vector<ParamPoly> conditions;  // coefficients of the residual
    JetExpr<ParamPoly> obstruction{2};
};

inline BlockSplit split_block(const DeformationSpec& spec, const BlockKey& key, const std::vector<ParamTerm2>& terms) {
    BlockSplit r;
    r.key = key;
    DensityWeight w = spec.weight(key.first);
    Cochain2<Scalar> dj = coboundary1(transvectant_J(w, key.second + 1));
    std::optional<std::pair<JetMonomial, Scalar>> pivot;
    if (!dj.is_zero()) pivot = *dj.body.terms().begin();
    std::map<JetMonomial, ParamPoly> rows;
    for (const auto& t : terms) {
        r.obstruction += lift(t.op.body, t.coeff);
        JetExpr<Scalar> res = t.op.body;
        if (pivot) {
            Scalar sigma = res.coeff(pivot->first) / pivot->second;
            if (!sigma.is_zero()) {
                r.scale += t.coeff.scaled(sigma);
                res -= dj.body.scaled(sigma);
            }
        }
        for (const auto& [m, c] : res.terms()) {
            if (m.slot(0) < 3 || m.slot(1) < 3) throw std::runtime_error("decomposition failure");
            rows[m] += t.coeff.scaled(c);
        }
    }
    for (auto& [m, p] : rows) {
        if (!p.is_zero()) r.conditions.push_back(std::move(p));
    }
    return r;
}

/// A condition generator with the block that produced it.
struct Condition {
    ParamPoly poly;
    BlockKey block;
};

struct ConditionSet {
    int order = 2;
    std::vector<Condition> generators;
};

/// Reduced basis of the new conditions of one block modulo the ideal so far.
inline std::vector<ParamPoly> new_conditions(const std::vector<ParamPoly>& raw, GradedIdeal& lower) {
    Echelon e;
    for (const auto& p : raw) {
        ParamPoly r = lower.generators().empty() ? p : lower.normal_form(p);
        if (!r.is_zero()) e.insert(r);
    }
    return e.basis();
}

/// L^(2) summand: scale * omega(t) * J_{k+1}^{-1,l}.
struct L2Term {
    long src = 0;
    long k = 0;
    ParamPoly omega;        // printed omega, or the derived coefficient when none is printed
    bool omega_printed = false;
    Scalar scale;           // relative to the seed-normalized J
    ParamPoly derived;      // s from the order-2 split
    bool consistent = true; // derived == scale * omega modulo the order-2 ideal
    bool in_printed_L2 = false;
};

/// Truncated: L^(3) = L^(4) = 0, so a J_{k+1} component of an order >= 3
/// obstruction is itself a condition. Free: that component becomes L^(m).
enum class HigherTerms { Truncated, Free };

/// The full analysis of one symbol space.
struct Deformation {
    HigherTerms mode = HigherTerms::Truncated;
    DeformationSpec spec;
    Family L1;
    std::vector<OmegaEntry> omegas;
    std::vector<L2Term> L2terms;
    Family L2;
    Family L3;  // nonzero only when the order-3 coboundary part is not in the ideal
    Family L4;
    std::vector<ConditionSet> conditions;  // orders 2..max
    std::vector<BlockSplit> splits[5];     // by order
    GradedIdeal ideal;                     // all conditions so far

    std::vector<ParamPoly> generators(int order) const {
        std::vector<ParamPoly> out;
        for (const auto& c : conditions) {
            if (c.order == order) {
                for (const auto& g : c.generators) out.push_back(g.poly);
            }
        }
        return out;
    }
    size_t condition_count() const {
        size_t n = 0;
        for (const auto& c : conditions) n += c.generators.size();
        return n;
    }
};

namespace detail {

inline ConditionSet collect_conditions(int order, const std::vector<BlockSplit>& splits, GradedIdeal& ideal,
                                       bool scale_is_condition) {
    ConditionSet cs;
    cs.order = order;
    for (const auto& b : splits) {
        std::vector<ParamPoly> raw = b.conditions;
        if (scale_is_condition && !b.scale.is_zero()) raw.push_back(b.scale);
        for (auto& g : new_conditions(raw, ideal)) cs.generators.push_back({std::move(g), b.key});
    }
    for (const auto& g : cs.generators) ideal.add(g.poly);
    std::sort(cs.generators.begin(), cs.generators.end(), [](const Condition& a, const Condition& b) {
        if (a.block != b.block) return a.block < b.block;
        return MonoLess()(b.poly.lead_monomial(), a.poly.lead_monomial());
    });
    return cs;
}

inline std::vector<BlockSplit> split_all(const DeformationSpec& spec, const Family2& obs) {
    std::vector<BlockSplit> out;
    for (const auto& [key, terms] : obs) out.push_back(split_block(spec, key, terms));
    return out;
}

/// Coboundary parts that survive modulo the ideal become the next term.
inline Family lift_scales(const DeformationSpec& spec, const std::vector<BlockSplit>& splits, GradedIdeal& ideal) {
    Family f;
    for (const auto& b : splits) {
        ParamPoly s = b.scale.is_zero() ? b.scale : ideal.normal_form(b.scale);
        if (s.is_zero()) continue;
        f[b.key].push_back({s, transvectant_J(spec.weight(b.key.first), b.key.second + 1)});
    }
    return f;
}

}  // namespace detail

/// Builds L^(1), the order-2 split and L^(2), then orders 3 and 4 up to
/// `max_order`.
inline Deformation analyze(const DeformationSpec& spec, int max_order = 4,
                           HigherTerms mode = HigherTerms::Truncated) {
    if (max_order < 2 || max_order > 4) throw std::invalid_argument("order must be 2, 3 or 4");
    Deformation d;
    d.spec = spec;
    d.mode = mode;
    const bool free = mode == HigherTerms::Free;
    d.L1 = build_L1(spec);
    d.omegas = omega_table(spec);

    Family2 o2;
    add_obstruction(o2, d.L1, d.L1);
    d.splits[2] = detail::split_all(spec, o2);
    d.conditions.push_back(detail::collect_conditions(2, d.splits[2], d.ideal, false));

    // L^(2): the printed omega times the factor that matches the derived
    // coboundary part modulo the order-2 ideal.
    for (const auto& b : d.splits[2]) {
        auto [src, k] = b.key;
        DensityWeight w = spec.weight(src);
        ParamPoly s = b.scale.is_zero() ? b.scale : d.ideal.normal_form(b.scale);
        std::optional<ParamPoly> om;
        if (k >= 5 && k <= 8) om = printed_omega(spec, src, k);
        L2Term t;
        t.src = src;
        t.k = k;
        t.derived = b.scale;
        t.in_printed_L2 = printed_L2_includes(w, k) && om && !om->is_zero();
        if (om) {
            t.omega_printed = true;
            t.omega = *om;
            ParamPoly nom = om->is_zero() ? *om : d.ideal.normal_form(*om);
            if (nom.is_zero()) {
                t.consistent = s.is_zero();
                t.scale = Scalar(0);
            } else if (s.is_zero()) {
                t.consistent = false;
                t.scale = Scalar(0);
            } else {
                const auto& m = nom.lead_monomial();
                t.scale = s.coeff(m) / nom.coeff(m);
                t.consistent = (s - nom.scaled(t.scale)).is_zero();
            }
        } else {
            t.omega = s;
            t.scale = Scalar(1);
        }
        if (!t.consistent) {
            // keep the derived solution so later orders stay correct
            t.omega = s;
            t.scale = Scalar(1);
            t.omega_printed = false;
        }
        if (t.omega.is_zero() || t.scale.is_zero()) {
            if (!t.consistent || t.in_printed_L2) d.L2terms.push_back(t);
            continue;
        }
        d.L2terms.push_back(t);
        d.L2[b.key].push_back({t.omega.scaled(t.scale), transvectant_J(w, k + 1)});
    }
    if (max_order < 3) return d;

    Family2 o3;
    add_obstruction(o3, d.L1, d.L2);
    add_obstruction(o3, d.L2, d.L1);
    d.splits[3] = detail::split_all(spec, o3);
    d.conditions.push_back(detail::collect_conditions(3, d.splits[3], d.ideal, !free));
    if (free) d.L3 = detail::lift_scales(spec, d.splits[3], d.ideal);
    if (max_order < 4) return d;

    Family2 o4;
    add_obstruction(o4, d.L2, d.L2);
    add_obstruction(o4, d.L1, d.L3);
    add_obstruction(o4, d.L3, d.L1);
    d.splits[4] = detail::split_all(spec, o4);
    d.conditions.push_back(detail::collect_conditions(4, d.splits[4], d.ideal, !free));
    if (free) d.L4 = detail::lift_scales(spec, d.splits[4], d.ideal);
    return d;
}

inline ConditionSet derive_conditions(const DeformationSpec& spec, int order,
                                      HigherTerms mode = HigherTerms::Truncated) {
    Deformation d = analyze(spec, order, mode);
    return d.conditions.back();
}

/// dL^(m) + sum_{i+j=m} G(L^(i), L^(j)) per block, with the terms built by
/// `analyze` (L^(3), L^(4) are zero unless recorded).
inline std::map<BlockKey, JetExpr<ParamPoly>> mc_defect(const Deformation& d, int m) {
    const Family* L[5] = {nullptr, &d.L1, &d.L2, &d.L3, &d.L4};
    Family2 obs;
    for (int i = 1; i < m; ++i) add_obstruction(obs, *L[i], *L[m - i]);
    std::map<BlockKey, JetExpr<ParamPoly>> out;
    for (const auto& [key, terms] : obs) out[key] -= block_body(terms, 2);
    if (m <= 4) {
        for (const auto& [key, terms] : *L[m]) {
            for (const auto& t : terms) out[key] += lift(coboundary1(t.op).body, t.coeff);
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

struct IntegrabilityReport {
    struct Entry {
        int order = 0;
        BlockKey block;
        bool in_ideal = true;
    };
    std::vector<Entry> entries;
    bool l3_zero = true;  // no J component was needed at order 3
    bool l4_zero = true;
    bool closed = true;   // no obstruction can appear beyond order 4

    bool ok() const {
        for (const auto& e : entries) {
            if (!e.in_ideal) return false;
        }
        return closed;
    }
};

/// Every defect coefficient at orders 2..4 lies in the ideal of all derived
/// conditions. With L^(3) = L^(4) = 0 nothing appears past order 4; otherwise
/// an order-m product spans at least 2m weights, so n < 10 also closes it.
inline IntegrabilityReport verify_full_integrability(Deformation& d) {
    IntegrabilityReport r;
    for (int m = 2; m <= 4; ++m) {
        for (const auto& [key, body] : mc_defect(d, m)) {
            IntegrabilityReport::Entry e;
            e.order = m;
            e.block = key;
            for (const auto& [mono, c] : body.terms()) {
                if (!d.ideal.normal_form(c).is_zero()) e.in_ideal = false;
            }
            r.entries.push_back(e);
        }
    }
    r.l3_zero = d.L3.empty();
    r.l4_zero = d.L4.empty();
    r.closed = (r.l3_zero && r.l4_zero) || d.spec.n < 10;
    return r;
}

// ---------------------------------------------------------------------------
// The printed condition lists, instantiated on a window.

struct PrintedCondition {
    std::string label;  // list and line, e.g. "k567.3"
    long src = 0;       // weight offset l of the line
    ParamPoly poly;
};

/// omega used inside printed conditions: the printed value, or the derived
/// coboundary coefficient where no printed value exists.
inline ParamPoly omega_for_conditions(const Deformation& d, long src, long k) {
    if (k < 5 || k > 8) return ParamPoly();
    auto p = printed_omega(d.spec, src, k);
    if (p) return *p;
    for (const auto& t : d.L2terms) {
        if (t.src == src && t.k == k) return t.omega.scaled(t.scale);
    }
    return ParamPoly();
}

/// The printed second-, third- and fourth-order lists restricted to the
/// window (absent parameters are 0; lines that vanish are dropped).
inline std::vector<PrintedCondition> printed_conditions(const Deformation& d, int order) {
    const DeformationSpec& spec = d.spec;
    std::vector<PrintedCondition> out;
    for (long s = spec.lo - 12; s <= spec.hi; ++s) {
        DensityWeight w = spec.weight(s);
        Scalar l = w.value();
        auto T = [&](long a, long b) { return spec.t(s + a, s + b); };
        auto W = [&](long a, long k) { return omega_for_conditions(d, s + a, k); };
        auto is = [&](std::initializer_list<long> vs) {
            for (long v : vs) {
                if (weight_is(w, v)) return true;
            }
            return false;
        };
        auto add = [&](const std::string& label, const ParamPoly& p) {
            if (!p.is_zero()) out.push_back({label, s, p});
        };
        if (order == 2) {
            if (is({0, -2, -4})) add("k567.1", W(0, 5));
            if (is_a_weight(w, 0) || weight_is(w, rat(-5, 2))) add("k567.2", W(0, 6));
            if (!is({0, -2, -4, -6}) && !weight_is(w, -3)) {
                auto [a, b] = printed_ab(l);
                add("k567.3", (T(0, 3) * T(3, 7)).scaled(b) - (T(0, 4) * T(4, 7)).scaled(a));
            }
            if (weight_is(w, -3)) add("k567.3", -(T(0, 3) * T(3, 7)) - T(0, 4) * T(4, 7));
            if (is({-2})) {
                add("k567.4", (T(0, 2) * T(2, 7)).scaled(Scalar(10)) - T(0, 3) * T(3, 7) -
                                  (T(0, 4) * T(4, 7)).scaled(Scalar(rat(1, 3))));
            }
            if (is({-4})) {
                add("k567.5", (T(0, 5) * T(5, 7)).scaled(Scalar(10)) + T(0, 3) * T(3, 7) +
                                  (T(0, 4) * T(4, 7)).scaled(Scalar(3)));
            }
            if (!is({0, -3, -4, -7})) add("k89.1", T(0, 4) * T(4, 8));
            if (is({0})) add("k89.2", (T(0, 4) * T(4, 8)).scaled(Scalar(11)) + (T(0, 5) * T(5, 8)).scaled(Scalar(10)));
            if (is({-3})) add("k89.3", T(0, 4) * T(4, 8) - (T(0, 3) * T(3, 8)).scaled(Scalar(10)));
            if (is({-4})) add("k89.4", T(0, 4) * T(4, 8) + (T(0, 5) * T(5, 8)).scaled(Scalar(10)));
            if (is({-7})) add("k89.5", (T(0, 4) * T(4, 8)).scaled(Scalar(11)) - (T(0, 3) * T(3, 8)).scaled(Scalar(10)));
            if (is_a_weight(w, 0)) add("k89.6", T(0, 6) * T(6, 8));
            if (is_a_weight(w, -2)) add("k89.7", T(0, 2) * T(2, 8));
            if (is({0})) add("k89.8", T(0, 5) * T(5, 9));
            if (is({-4})) add("k89.9", T(0, 4) * T(4, 9) - T(0, 5) * T(5, 9));
            if (is({-8})) add("k89.10", T(0, 4) * T(4, 9));
            if (is_a_weight(w, 0)) add("k89.11", T(0, 6) * T(6, 9));
            if (is_a_weight(w, -3)) add("k89.12", T(0, 3) * T(3, 9));
            if (is_a_weight(w, 0)) add("k89.13", T(0, 6) * T(6, 10));
            if (is_a_weight(w, -4)) add("k89.14", T(0, 4) * T(4, 10));
        } else if (order == 3) {
            add("thirdk7.1a", T(0, 2) * W(2, 5));
            add("thirdk7.1b", W(0, 5) * T(5, 7));
            add("thirdk7.2a", T(0, 2) * W(2, 6));
            add("thirdk7.2b", W(0, 6) * T(6, 8));
            add("thirdk7.3a", T(0, 3) * W(3, 5));
            add("thirdk7.3b", W(0, 5) * T(5, 8));
            add("thirdk9.1a", T(0, 3) * W(3, 6));
            add("thirdk9.1b", W(0, 6) * T(6, 9));
            add("thirdk9.2a", T(0, 4) * W(4, 5));
            add("thirdk9.2b", W(0, 5) * T(5, 9));
            add("thirdk9.3a", T(-2, 0) * W(0, 7));
            add("thirdk9.3b", W(0, 7) * T(7, 9));
            if (is({0, -7})) {
                add("thirdk10.1a", T(-2, 0) * W(0, 8));
                add("thirdk10.1b", W(0, 8) * T(8, 10));
            }
            add("thirdk10.2a", T(-3, 0) * W(0, 7));
            add("thirdk10.2b", W(0, 7) * T(7, 10));
            add("thirdk10.3a", T(0, 4) * W(4, 6));
            add("thirdk10.3b", W(0, 6) * T(6, 10));
            if (is({0, -4})) {
                add("thirdk10.4a", T(0, 5) * W(5, 5));
                add("thirdk10.4b", W(-5, 5) * T(0, 5));
            }
            if (is_a_weight(w, 0)) {
                add("thirdk11.1a", T(0, 6) * W(6, 5));
                add("thirdk11.1b", W(-5, 5) * T(0, 6));
            }
            if (is({0, -4})) {
                add("thirdk11.2a", T(0, 5) * W(5, 6));
                add("thirdk11.2b", W(-6, 6) * T(0, 5));
            }
            add("thirdk11.3a", T(-4, 0) * W(0, 7));
            add("thirdk11.3b", W(0, 7) * T(7, 11));
            if (is({0, -7})) {
                add("thirdk11.4a", T(-3, 0) * W(0, 8));
                add("thirdk11.4b", W(0, 8) * T(8, 11));
            }
            if (is({0, -4})) {
                add("k12.1a", T(0, 5) * W(5, 7));
                add("k12.1b", W(-7, 7) * T(0, 5));
            }
            if (is_a_weight(w, 0)) {
                add("k12.2a", T(0, 6) * W(6, 6));
                add("k12.2b", W(-6, 6) * T(0, 6));
            }
            if (is({0, -7})) {
                add("k12.3a", T(-4, 0) * W(0, 8));
                add("k12.3b", W(0, 8) * T(8, 12));
            }
        } else if (order == 4) {
            for (long i = 5; i <= 7; ++i) {
                for (long k = 5 + i; k <= 7 + i; ++k) {
                    add("fourth." + std::to_string(i) + "." + std::to_string(k), W(0, i) * W(i, k - i));
                }
            }
        }
    }
    return out;
}

/// Two-sided inclusion between the derived and printed ideals up to an order.
struct CatalogDiff {
    int order = 0;
    std::vector<PrintedCondition> missing;  // printed, not implied by the derived ideal
    std::vector<Condition> extra;         // derived, not implied by the printed ideal
    size_t derived_count = 0;
    size_t printed_count = 0;
    size_t scalar_matches = 0;  // derived generators equal to a printed one up to a scalar

    bool empty() const { return missing.empty() && extra.empty(); }
};

inline std::vector<CatalogDiff> compare_with_printed(const Deformation& d) {
    std::vector<CatalogDiff> out;
    GradedIdeal derived, printed;
    for (const auto& cs : d.conditions) {
        CatalogDiff diff;
        diff.order = cs.order;
        auto printed_list = printed_conditions(d, cs.order);
        for (const auto& g : cs.generators) derived.add(g.poly);
        for (const auto& p : printed_list) printed.add(p.poly);
        diff.derived_count = cs.generators.size();
        diff.printed_count = printed_list.size();
        for (const auto& p : printed_list) {
            if (!derived.contains(p.poly)) diff.missing.push_back(p);
        }
        for (const auto& g : cs.generators) {
            if (!printed.contains(g.poly)) diff.extra.push_back(g);
            for (const auto& p : printed_list) {
                if (p.poly.normalized() == g.poly) {
                    ++diff.scalar_matches;
                    break;
                }
            }
        }
        out.push_back(std::move(diff));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Zero-assignments.

/// Sets Z of parameters whose vanishing kills every generator, i.e. the
/// ideal lies in <Z>. This does not depend on the chosen generators.
struct KillSets {
    size_t minimum = 0;                             // smallest size
    std::vector<std::vector<ParamSymbol>> minimal;  // inclusion-minimal, all sizes
};

inline KillSets minimal_kill_sets(const std::vector<ParamPoly>& gens) {
    std::set<ParamSymbol> vars;
    for (const auto& g : gens) {
        for (const auto& v : g.variables()) vars.insert(v);
    }
    std::vector<ParamSymbol> vs(vars.begin(), vars.end());
    if (vs.size() > 24) throw std::invalid_argument("too many parameters for kill-set enumeration");
    // each monomial as a bit mask; Z kills it when they intersect
    std::vector<uint32_t> monos;
    for (const auto& g : gens) {
        for (const auto& [m, c] : g.terms()) {
            uint32_t mask = 0;
            for (const auto& s : m) mask |= 1u << (std::lower_bound(vs.begin(), vs.end(), s) - vs.begin());
            monos.push_back(mask);
        }
    }
    KillSets r;
    if (gens.empty()) return r;
    std::vector<uint32_t> found;
    for (size_t size = 1; size <= vs.size(); ++size) {
        std::vector<bool> pick(vs.size(), false);
        std::fill(pick.end() - static_cast<long>(size), pick.end(), true);
        do {
            uint32_t z = 0;
            for (size_t i = 0; i < vs.size(); ++i) {
                if (pick[i]) z |= 1u << i;
            }
            bool superset = std::any_of(found.begin(), found.end(), [&](uint32_t f) { return (f & z) == f; });
            if (superset) continue;
            if (std::all_of(monos.begin(), monos.end(), [&](uint32_t m) { return (m & z) != 0; })) found.push_back(z);
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    for (uint32_t z : found) {
        std::vector<ParamSymbol> set;
        for (size_t i = 0; i < vs.size(); ++i) {
            if (z & (1u << i)) set.push_back(vs[i]);
        }
        r.minimal.push_back(std::move(set));
    }
    r.minimum = r.minimal.front().size();
    return r;
}

}  // namespace sltriv
