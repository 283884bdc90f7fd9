#pragma once

#include "sltriv/identities.hpp"
#include "sltriv/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sltriv {

inline const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = {"table1", "prop2",       "prop3",       "prop4",           "prop5",
                                                 "dpartial-j8", "ddzero", "cup-cocycle", "oracle-agreement"};
    return ids;
}

inline bool is_suite(const std::string& id) {
    for (const auto& s : suite_ids()) {
        if (s == id) return true;
    }
    return false;
}

namespace detail {

inline IdentityCheck from_crosscheck(const oracle::CrosscheckReport& r, const std::string& statement) {
    IdentityCheck c;
    c.id = "oracle." + r.id;
    c.statement = statement + " (" + std::to_string(r.trials) + " random inputs)";
    if (!r.passed()) {
        c.status = IdentityCheck::Status::Fail;
        c.note = std::to_string(r.failures) + " failing trials";
        for (const auto& n : r.notes) c.residual += n + "; ";
    }
    return c;
}

/// Weights for catalog pairs: the half-integer grid, generic l, and a_i + s.
inline std::vector<DensityWeight> catalog_weights() {
    std::vector<DensityWeight> ws;
    for (const auto& q : half_integer_grid()) ws.push_back(at(q));
    ws.push_back(generic_weight());
    for (int branch : {1, -1}) {
        for (long s = -6; s <= 0; ++s) ws.emplace_back(Weight::a_root(branch), s);
    }
    return ws;
}

}  // namespace detail

/// Random 1-cochains b: d(db) = 0 symbolically and by direct evaluation.
inline SuiteReport suite_ddzero(size_t trials, uint64_t seed) {
    SuiteReport r;
    r.suite = "ddzero";
    r.checks.push_back(detail::from_crosscheck(oracle::crosscheck_expansion("ddzero", trials, seed), "d(db) = 0"));
    return r;
}

/// Cup products of composable catalog cocycles are relative 2-cocycles.
inline SuiteReport suite_cup_cocycle(size_t trials, uint64_t seed) {
    SuiteReport r;
    r.suite = "cup-cocycle";
    size_t pairs = 0;
    for (const auto& w : detail::catalog_weights()) {
        for (long j1 = 2; j1 <= 6; ++j1) {
            if (!cocycle_exists(w, j1)) continue;
            for (long j2 = 2; j2 <= 6; ++j2) {
                if (!cocycle_exists(w.shifted(j1), j2)) continue;
                Cochain2<Scalar> c = cup(cocycle(w.shifted(j1), j2), cocycle(w, j1));
                ++pairs;
                bool ok = is_relative(c) && cocycle2_defect(c).is_zero() && invariance_defect(c).is_zero();
                if (!ok) {
                    IdentityCheck f;
                    f.id = "cup." + w.label() + "." + std::to_string(j1) + "." + std::to_string(j2);
                    f.statement = "[[C, C]] is a relative 2-cocycle";
                    f.status = IdentityCheck::Status::Fail;
                    f.residual = render(cocycle2_defect(c).body);
                    r.checks.push_back(f);
                }
            }
        }
    }
    IdentityCheck all;
    all.id = "cup.catalog-pairs";
    all.statement = "every composable catalog pair (" + std::to_string(pairs) + " pairs) cups to a relative 2-cocycle";
    all.status = r.checks.empty() ? IdentityCheck::Status::Pass : IdentityCheck::Status::Fail;
    r.checks.insert(r.checks.begin(), all);
    r.checks.push_back(
        detail::from_crosscheck(oracle::crosscheck_expansion("cup-cocycle", trials, seed), "nested cup is closed"));
    return r;
}

/// One (lambda, k) cell of the rank/triviality grid.
struct GridCell {
    DensityWeight weight;
    long k = 0;
    std::string name;
    bool symbolic_trivial = false;
    bool rank_trivial = false;
};

/// Named Omegas on rational l in [-8, 2] (denominator <= 2), k = 5..10. The
/// degree bound k+2 covers every derivative order of a k-block.
inline std::vector<GridCell> rank_grid() {
    std::vector<GridCell> out;
    for (const auto& q : half_integer_grid()) {
        DensityWeight w = detail::at(q);
        for (long k = 5; k <= 10; ++k) {
            std::vector<std::pair<std::string, Omega7>> kinds = {{"Omega", Omega7::Plain}};
            if (k == 7) kinds.emplace_back("Omega~", Omega7::Tilde);
            for (const auto& [name, which] : kinds) {
                Cochain2<Scalar> om;
                try {
                    om = omega(w, k, which);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                GridCell c{w, k, name};
                c.symbolic_trivial = triviality_test(om).coboundary;
                c.rank_trivial = oracle::rank_coboundary_test(om, static_cast<int>(k) + 2).verdict == oracle::RankVerdict::Coboundary;
                out.push_back(c);
            }
        }
    }
    return out;
}

inline SuiteReport suite_oracle_agreement(size_t trials, uint64_t seed) {
    SuiteReport r;
    r.suite = "oracle-agreement";
    const std::pair<const char*, const char*> checks[] = {
        {"coboundary", "symbolic db equals the Lie-derivative definition"},
        {"cup", "symbolic cup equals nested composition"},
        {"transvectant", "J_k commutes with sl(2)"},
        {"mc-n6", "n=6, delta=7 defects vanish directly and symbolically"},
    };
    for (const auto& [id, what] : checks) {
        r.checks.push_back(detail::from_crosscheck(oracle::crosscheck_expansion(id, trials, seed), what));
    }
    size_t cells = 0, bad = 0;
    std::string where;
    for (const auto& c : rank_grid()) {
        ++cells;
        if (c.symbolic_trivial != c.rank_trivial) {
            ++bad;
            where += c.name + "(" + c.weight.label() + "," + std::to_string(c.k) + ") ";
        }
    }
    IdentityCheck g;
    g.id = "oracle.rank-grid";
    g.statement = "triviality_test and the rank test agree on " + std::to_string(cells) + " grid cells";
    if (bad) {
        g.status = IdentityCheck::Status::Fail;
        g.residual = where;
    }
    r.checks.push_back(g);
    for (int branch : {1, -1}) {
        DensityWeight a(Weight::a_root(branch));
        Cochain2<Scalar> om = omega(a, 6);
        IdentityCheck c;
        c.id = std::string("oracle.rank-a") + (branch > 0 ? "1" : "2");
        c.statement = "Omega_{a,a+6} is nontrivial in Q(sqrt 19) by both tests";
        bool sym = triviality_test(om).coboundary;
        bool rk = oracle::rank_coboundary_test(om).verdict == oracle::RankVerdict::Coboundary;
        if (sym || rk) c.status = IdentityCheck::Status::Fail;
        r.checks.push_back(c);
    }
    return r;
}

/// Any suite by name; identity suites ignore trials and seed.
inline SuiteReport run_suite(const std::string& id, size_t trials, uint64_t seed) {
    if (id == "ddzero") return suite_ddzero(trials, seed);
    if (id == "cup-cocycle") return suite_cup_cocycle(trials, seed);
    if (id == "oracle-agreement") return suite_oracle_agreement(trials, seed);
    return verify_identity_suite(id);
}

}  // namespace sltriv
