#include "sltriv/oracle.hpp"

#include <catch_amalgamated.hpp>

using namespace sltriv;
using namespace sltriv::oracle;

namespace {

DensityWeight at(long q) { return DensityWeight(Weight::rational(q)); }
XPoly x(int n) { return XPoly::monomial(n); }

}  // namespace

TEST_CASE("evaluating cochains on polynomials", "[oracle]") {
    DensityWeight one = at(1);
    auto c = evaluate_cochain(cocycle(one, 2), x(4), {x(0), one});
    CHECK(c.f == XPoly::monomial(1, Scalar(24)));
    CHECK(c.weight == at(3));
    // sl(2) kills every relative cochain
    Cochain2<Scalar> om = omega(one, 5);
    for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 6; ++b) CHECK(evaluate_cochain(om, x(a), x(b), {x(3), one}).f.is_zero());
    }
    CHECK_FALSE(evaluate_cochain(om, x(3), x(4), {x(0), one}).f.is_zero());
}

TEST_CASE("Lie derivative and bracket", "[oracle][property]") {
    InputSource in(5, 6);
    for (int t = 0; t < 40; ++t) {
        XPoly a = in.poly(), b = in.poly(), f = in.poly();
        Scalar l(in.rational());
        // L_[a,b] = [L_a, L_b]
        XPoly lhs = lie(bracket(a, b), f, l);
        XPoly rhs = lie(a, lie(b, f, l), l) - lie(b, lie(a, f, l), l);
        CHECK(lhs == rhs);
        CHECK(bracket(a, b) == bracket(b, a).scaled(Scalar(-1)));
    }
}

TEST_CASE("rank test verdicts", "[oracle]") {
    CHECK(rank_coboundary_test(omega(at(1), 5)).verdict == RankVerdict::Coboundary);
    CHECK(rank_coboundary_test(omega(at(0), 5)).verdict == RankVerdict::Nontrivial);
    CHECK(rank_coboundary_test(omega(at(-3), 7), 9).verdict == RankVerdict::Nontrivial);
    CHECK(rank_coboundary_test(omega(at(-6), 7), 9).verdict == RankVerdict::Coboundary);
    CHECK(rank_coboundary_test(omega(DensityWeight(Weight::a_root(1)), 6)).verdict == RankVerdict::Nontrivial);
    CHECK_THROWS_AS(rank_coboundary_test(omega(DensityWeight(Weight::generic()), 5)), std::invalid_argument);
}

TEST_CASE("the two k=7 Omegas are proportional where they are nontrivial", "[oracle]") {
    auto pair_rank = [](long l) {
        std::vector<Form2> f = {as_form(omega(at(l), 7)), as_form(omega(at(l), 7, Omega7::Tilde))};
        return evaluation_rank(f, MonomialGrid{9});
    };
    CHECK(pair_rank(-3) == 1);
    CHECK(pair_rank(-6) == 1);
    CHECK(pair_rank(1) == 2);
}

TEST_CASE("crosschecks", "[oracle]") {
    for (const auto& id : crosscheck_ids()) {
        CrosscheckReport r = crosscheck_expansion(id, 12, 3);
        CHECK(r.passed());
        CrosscheckReport again = crosscheck_expansion(id, 12, 3);
        CHECK(again.failures == r.failures);
        CHECK(again.notes == r.notes);
    }
    CHECK_THROWS_AS(crosscheck_expansion("nope", 1, 1), std::invalid_argument);
}

TEST_CASE("degree overflow is reported", "[oracle]") {
    XPoly big = XPoly::monomial(kMaxDegree);
    CHECK_THROWS_AS(big * x(1), std::overflow_error);
}

TEST_CASE("deformed action on the generic n=7 space", "[oracle]") {
    Deformation d = analyze(make_spec(7, parse_weight("generic")));
    std::vector<ParamPoly> gens;
    for (int m = 2; m <= 4; ++m) {
        for (const auto& g : d.generators(m)) gens.push_back(g);
    }
    InputSource in(11);
    Rational l = rat(7, 3);

    auto off = random_point(d.spec, in);
    HomomorphismReport bad = check_homomorphism(d, off, 2, 11, l, 4);
    REQUIRE_FALSE(bad.failing_orders.empty());
    CHECK(bad.failing_orders.front() == 2);

    // zero a kill set: every condition holds
    KillSets ks = minimal_kill_sets(gens);
    for (const auto& z : ks.minimal) {
        auto on = random_point(d.spec, in);
        for (const auto& s : z) on[s] = Scalar(0);
        HomomorphismReport good = check_homomorphism(d, on, 2, 13, l, 6);
        CHECK(good.ok());
    }
}

TEST_CASE("the n=6, delta=7 deformation is a homomorphism everywhere", "[oracle]") {
    const Deformation& d = worked_n6();
    InputSource in(2);
    for (int t = 0; t < 3; ++t) CHECK(check_homomorphism(d, random_point(d.spec, in), 2, 40 + t, rat(7, 3), 6).ok());
}
