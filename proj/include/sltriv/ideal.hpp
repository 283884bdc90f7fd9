#pragma once

#include "sltriv/param_poly.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sltriv {

/// Net flow of a parameter monomial: t[a,b] contributes +1 at b and -1 at a.
/// Every generator produced by composing weight blocks is homogeneous for
/// this grading as well as for total degree.
using Flow = std::map<long, int>;

inline void flow_add(Flow& f, const ParamSymbol& s, int sign) {
    if ((f[s.tgt] += sign) == 0) f.erase(s.tgt);
    if ((f[s.src] -= sign) == 0) f.erase(s.src);
}

inline Flow flow_of(const ParamMonomial& m) {
    Flow f;
    for (const auto& s : m) flow_add(f, s, 1);
    return f;
}

/// Sparse row echelon form over the scalar field, pivots at leading monomials.
class Echelon {
public:
    /// Fully reduces p: no monomial of the result is a pivot.
    ParamPoly reduce(const ParamPoly& p) const {
        ParamPoly cur = p, out;
        while (!cur.is_zero()) {
            ParamMonomial m = cur.lead_monomial();
            Scalar c = cur.lead_coeff();
            auto it = rows_.find(m);
            if (it == rows_.end()) {
                out.add_term(m, c);
                cur.add_term(m, -c);
            } else {
                cur -= it->second.scaled(c);
            }
        }
        return out;
    }
    /// Adds p to the span; returns false when it was already there.
    bool insert(const ParamPoly& p) {
        ParamPoly r = reduce(p);
        if (r.is_zero()) return false;
        r = r.normalized();
        rows_.emplace(r.lead_monomial(), std::move(r));
        return true;
    }
    size_t rank() const { return rows_.size(); }

    /// Reduced echelon basis: monic rows, no row contains another's pivot.
    std::vector<ParamPoly> basis() const {
        std::vector<ParamPoly> out;
        Echelon done;
        for (const auto& [lead, row] : rows_) {  // increasing leads
            ParamPoly rest = row;
            Scalar c = rest.lead_coeff();
            rest.add_term(lead, -c);
            ParamPoly r = done.reduce(rest);
            r.add_term(lead, c);
            r = r.normalized();
            done.rows_.emplace(lead, r);
            out.push_back(std::move(r));
        }
        return out;
    }

private:
    std::map<ParamMonomial, ParamPoly, MonoLess> rows_;
};

/// Ideal generated by multi-homogeneous parameter polynomials. Membership is
/// decided exactly inside one (degree, flow) component at a time by row
/// reducing all multiples mu*g of that component.
class GradedIdeal {
public:
    GradedIdeal() = default;
    explicit GradedIdeal(std::vector<ParamPoly> gens) {
        for (auto& g : gens) add(std::move(g));
    }

    void add(ParamPoly g) {
        if (g.is_zero()) return;
        check_homogeneous(g);
        for (const auto& v : g.variables()) universe_.insert(v);
        gens_.push_back(std::move(g));
        cache_.clear();
    }
    const std::vector<ParamPoly>& generators() const { return gens_; }

    bool contains(const ParamPoly& p) { return normal_form(p).is_zero(); }

    /// Canonical representative of p modulo the ideal.
    ParamPoly normal_form(const ParamPoly& p) {
        extend_universe(p);
        std::map<std::pair<int, Flow>, ParamPoly> parts;
        for (const auto& [m, c] : p.terms()) {
            parts[{static_cast<int>(m.size()), flow_of(m)}].add_term(m, c);
        }
        ParamPoly out;
        for (const auto& [key, part] : parts) out += component(key.first, key.second).reduce(part);
        return out;
    }

private:
    static void check_homogeneous(const ParamPoly& g) {
        const auto& first = g.terms().begin()->first;
        Flow f = flow_of(first);
        for (const auto& [m, c] : g.terms()) {
            if (m.size() != first.size() || flow_of(m) != f) {
                throw std::invalid_argument("ideal generator is not homogeneous");
            }
        }
    }

    void extend_universe(const ParamPoly& p) {
        for (const auto& v : p.variables()) {
            if (universe_.insert(v).second) cache_.clear();
        }
    }

    // Monomials of degree e over the universe whose flow equals f.
    void multipliers(int e, const Flow& f, std::vector<ParamSymbol>& stack,
                     std::set<ParamSymbol>::const_iterator from, std::vector<ParamMonomial>& out) const {
        if (e == 0) {
            if (f.empty()) out.push_back(stack);
            return;
        }
        int mass = 0;
        for (const auto& [k, v] : f) mass += v > 0 ? v : -v;
        if (mass > 2 * e) return;
        for (auto it = from; it != universe_.end(); ++it) {
            Flow g = f;
            flow_add(g, *it, -1);
            stack.push_back(*it);
            multipliers(e - 1, g, stack, it, out);
            stack.pop_back();
        }
    }

    const Echelon& component(int degree, const Flow& f) {
        auto key = std::make_pair(degree, f);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Echelon ech;
        for (const auto& g : gens_) {
            int e = degree - g.degree();
            if (e < 0) continue;
            Flow need = f;
            for (const auto& s : g.terms().begin()->first) flow_add(need, s, -1);
            std::vector<ParamMonomial> mus;
            std::vector<ParamSymbol> stack;
            multipliers(e, need, stack, universe_.begin(), mus);
            for (const auto& mu : mus) ech.insert(g.mul_monomial(mu));
        }
        return cache_.emplace(key, std::move(ech)).first->second;
    }

    std::vector<ParamPoly> gens_;
    std::set<ParamSymbol> universe_;
    std::map<std::pair<int, Flow>, Echelon> cache_;
};

}  // namespace sltriv
