#include "sltriv/deformations.hpp"

#include <catch_amalgamated.hpp>

using namespace sltriv;

namespace {

ParamMonomial mono(std::initializer_list<ParamSymbol> s) {
    ParamMonomial m(s);
    std::sort(m.begin(), m.end());
    return m;
}

const Deformation& n7_generic() {
    static const Deformation d = analyze(make_spec(7, parse_weight("generic")));
    return d;
}

}  // namespace

TEST_CASE("worked spaces: parameter and condition counts", "[deformations]") {
    struct Row {
        long n;
        const char* delta;
        size_t params;
        std::vector<size_t> per_order;  // orders 2, 3, 4
    };
    const Row rows[] = {
        {4, "generic", 6, {0, 0, 0}},
        {6, "7", 12, {0, 0, 0}},
        {7, "generic", 15, {1, 2, 0}},
    };
    for (const auto& r : rows) {
        Deformation d = analyze(make_spec(r.n, parse_weight(r.delta)));
        CHECK(d.spec.parameters.size() == r.params);
        for (int m = 2; m <= 4; ++m) CHECK(d.generators(m).size() == r.per_order[static_cast<size_t>(m - 2)]);
        CHECK(verify_full_integrability(d).ok());
    }
}

TEST_CASE("L2 on the generic n=7 space", "[deformations]") {
    const Deformation& d = n7_generic();
    REQUIRE(d.L2terms.size() >= 1);
    const L2Term& t = d.L2terms.front();
    CHECK(t.k == 5);
    Scalar l = Scalar::lambda();
    CHECK(t.scale == Scalar(3) / (l * l * l + Scalar(6) * l * l + Scalar(8) * l));
    std::map<long, size_t> by_k;
    for (const auto& e : d.L2terms) {
        CHECK(e.consistent);
        ++by_k[e.k];
    }
    CHECK(by_k[5] == 3);
    CHECK(by_k[6] == 2);
    CHECK(by_k[7] == 1);
}

TEST_CASE("kill sets of the generic n=7 ideal", "[deformations]") {
    std::vector<ParamPoly> all;
    for (int m = 2; m <= 4; ++m) {
        for (const auto& g : n7_generic().generators(m)) all.push_back(g);
    }
    KillSets ks = minimal_kill_sets(all);
    CHECK(ks.minimal.size() == 13);
    CHECK(ks.minimum == 3);
    std::map<size_t, size_t> sizes;
    for (const auto& z : ks.minimal) ++sizes[z.size()];
    CHECK(sizes[3] == 5);
    CHECK(sizes[4] == 7);
    CHECK(sizes[5] == 1);
    // every kill set really kills every generator
    for (const auto& z : ks.minimal) {
        std::set<ParamSymbol> keep(n7_generic().spec.parameters.begin(), n7_generic().spec.parameters.end());
        for (const auto& s : z) keep.erase(s);
        for (const auto& g : all) CHECK(g.restricted(keep).is_zero());
    }
}

TEST_CASE("rational window at -4", "[deformations]") {
    // offsets count from delta = 3, so weight w sits at w - 3
    Deformation d = analyze(make_spec(7, parse_weight("3")));
    CHECK(d.spec.weight(d.spec.lo) == DensityWeight(Weight::rational(-4)));
    auto o = [](long w) { return w - 3; };
    auto gens = d.generators(2);
    REQUIRE(gens.size() == 3);
    const ParamPoly* hit = nullptr;
    for (const auto& g : gens) {
        if (!g.coeff(mono({{o(-4), o(-1)}, {o(-1), o(3)}})).is_zero()) hit = &g;
    }
    REQUIRE(hit);
    Scalar lead = hit->coeff(mono({{o(-4), o(-1)}, {o(-1), o(3)}}));
    CHECK(hit->coeff(mono({{o(-4), o(0)}, {o(0), o(3)}})) == Scalar(3) * lead);
    CHECK(hit->coeff(mono({{o(-4), o(1)}, {o(1), o(3)}})) == Scalar(30) * lead);
    CHECK(d.generators(3).empty());
}

TEST_CASE("algebraic window: a monomial condition at k = 8", "[deformations]") {
    Deformation d = analyze(make_spec(10, parse_weight("alg:2,10,3:+:8")), 2);
    CHECK(d.spec.parameters.size() == 25);
    auto gens = d.generators(2);
    CHECK(gens.size() == 8);
    ParamPoly target = ParamPoly::term(Scalar(1), mono({{-1, 3}, {3, 7}}));
    bool found = false;
    for (const auto& g : gens) found = found || g.normalized() == target;
    CHECK(found);
}

TEST_CASE("free higher terms absorb one order-3 condition", "[deformations]") {
    Deformation d = analyze(make_spec(7, parse_weight("generic")), 4, HigherTerms::Free);
    CHECK(d.generators(2).size() == 1);
    CHECK(d.generators(3).size() == 1);
    CHECK(d.generators(4).empty());
}

TEST_CASE("parameter windows", "[deformations][property]") {
    for (long n = 0; n <= 9; ++n) {
        DeformationSpec s = make_spec(n, parse_weight("generic"));
        DeformationSpec up = make_spec(n + 1, parse_weight("generic"));
        CHECK(std::includes(up.parameters.begin(), up.parameters.end(), s.parameters.begin(), s.parameters.end()));
        for (const auto& p : s.parameters) {
            CHECK(s.in_window(p.src));
            CHECK(s.in_window(p.tgt));
            CHECK(p.span() >= 2);
            CHECK(p.span() <= 6);
            CHECK(cocycle_exists(s.weight(p.src), p.span()));
        }
    }
    CHECK_THROWS_AS(make_spec(-1, parse_weight("generic")), std::invalid_argument);
}

TEST_CASE("order-2 generators are homogeneous quadrics in the ideal", "[deformations][property]") {
    for (long n = 5; n <= 8; ++n) {
        Deformation d = analyze(make_spec(n, parse_weight("generic")), 2);
        for (const auto& g : d.generators(2)) {
            CHECK(g.is_homogeneous());
            CHECK(g.degree() == 2);
            CHECK(d.ideal.contains(g));
        }
    }
}

TEST_CASE("analysis is deterministic", "[deformations][property]") {
    Deformation a = analyze(make_spec(7, parse_weight("generic")));
    const Deformation& b = n7_generic();
    for (int m = 2; m <= 4; ++m) {
        auto ga = a.generators(m), gb = b.generators(m);
        REQUIRE(ga.size() == gb.size());
        for (size_t i = 0; i < ga.size(); ++i) CHECK(ga[i] == gb[i]);
    }
}
