#include "sltriv/identities.hpp"

#include <catch_amalgamated.hpp>

using namespace sltriv;

namespace {

DensityWeight at(const Rational& q) { return DensityWeight(Weight::rational(q)); }

size_t count(const SuiteReport& s, IdentityCheck::Status st) {
    size_t n = 0;
    for (const auto& c : s.checks) n += c.status == st;
    return n;
}

}  // namespace

TEST_CASE("cocycle formulas", "[catalog]") {
    DensityWeight g(Weight::generic());
    CHECK(cocycle(g, 2).body == JetExpr<Scalar>::monomial(1, JetMonomial::make({3}, 0), Scalar(1)));
    Cochain1<Scalar> c = cocycle(at(-4), 5);
    CHECK(c.body.size() == 4);
    CHECK(c.body.coeff(JetMonomial::make({6}, 0)) == Scalar(28));
    CHECK(c.body.coeff(JetMonomial::make({5}, 1)) == Scalar(63));
    CHECK(c.body.coeff(JetMonomial::make({4}, 2)) == Scalar(45));
    CHECK(c.body.coeff(JetMonomial::make({3}, 3)) == Scalar(10));
    CHECK_THROWS(cocycle(at(rat(-1, 2)), 2));
    CHECK_THROWS(cocycle(at(1), 5));
    CHECK_FALSE(cocycle_exists(at(-1), 3));
    CHECK(cocycle_exists(DensityWeight(Weight::a_root(-1)), 6));
}

TEST_CASE("named Omegas", "[catalog]") {
    DensityWeight g(Weight::generic());
    JetExpr<Scalar> o5(2);
    o5.add(JetMonomial::make({4, 3}, 0), Scalar(1));
    o5.add(JetMonomial::make({3, 4}, 0), Scalar(-1));
    CHECK(omega(g, 5).body == o5);
    for (long k = 5; k <= 8; ++k) {
        Cochain2<Scalar> o = omega(g, k);
        CHECK(is_relative(o));
        CHECK(cocycle2_defect(o).is_zero());
    }
    CHECK_THROWS_AS(omega(g, 11), std::invalid_argument);
}

TEST_CASE("(a,b,c) branches", "[catalog]") {
    for (const auto& q : {rat(-5), rat(-3, 2), rat(1, 2), rat(-6), rat(-3), rat(2)}) {
        CHECK(abc_relation(at(q)).verified);
    }
    AbcTriple m5 = abc_relation(at(-5));
    CHECK(m5.branch == AbcTriple::Branch::TildeTrivial);
    CHECK(*m5.c == Scalar(rat(-1, 2)));
    CHECK(abc_relation(at(-3)).facts.size() == 2);
}

TEST_CASE("identity suites", "[catalog]") {
    for (const char* id : {"table1", "prop2", "prop4", "prop5", "dpartial-j8"}) {
        CHECK(verify_identity_suite(id).passed());
    }
    SuiteReport p3 = verify_identity_suite("prop3");
    CHECK_FALSE(p3.passed());
    CHECK(count(p3, IdentityCheck::Status::Fail) == 2);
    CHECK(p3.find("prop3.omega7-nontrivial-set")->residual == "disagrees at -6 (trivial), 0 (trivial)");
    SuiteReport p5 = verify_identity_suite("prop5");
    CHECK(count(p5, IdentityCheck::Status::Pass) == 11);
    CHECK_THROWS_AS(verify_identity_suite("nope"), std::invalid_argument);
}

TEST_CASE("singular k=8 decompositions", "[catalog]") {
    SuiteReport p4 = verify_identity_suite("prop4");
    CHECK(p4.find("prop4.k8-at-0")->status == IdentityCheck::Status::Pass);
    CHECK(p4.find("prop4.k8-at-minus7")->note.find("2/11") != std::string::npos);
}
