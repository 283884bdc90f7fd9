#include "sltriv/oracle.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace sltriv;
using oracle::XPoly;

namespace {

JetExpr<Scalar> random_jet(std::mt19937_64& rng, int arity) {
    JetExpr<Scalar> e(arity);
    for (int t = 0; t < 4; ++t) {
        JetMonomial m;
        for (int i = 0; i < arity; ++i) m.set(i, static_cast<int>(rng() % 5));
        m.set(3, static_cast<int>(rng() % 4));
        e.add(m, Scalar(static_cast<long>(rng() % 9) - 4));
    }
    return e;
}

}  // namespace

TEST_CASE("monomials order by total degree", "[jets]") {
    JetMonomial a = JetMonomial::make({3}, 0), b = JetMonomial::make({0}, 4), c = JetMonomial::make({2}, 1);
    CHECK(c < a);
    CHECK(a < b);
    CHECK_THROWS_AS(JetMonomial::make({jet_max_order() + 1}, 0), std::overflow_error);
}

TEST_CASE("terms cancel and merge", "[jets]") {
    JetExpr<Scalar> e(1);
    e.add(JetMonomial::make({3}, 1), Scalar(2));
    e.add(JetMonomial::make({3}, 1), Scalar(-2));
    CHECK(e.is_zero());
    JetExpr<Scalar> two = JetExpr<Scalar>::monomial(1, JetMonomial::make({4}, 0), Scalar(1)).scaled(Scalar(2));
    CHECK(two.coeff(JetMonomial::make({4}, 0)) == Scalar(2));
    CHECK(render(two) == "2 X^(4) f^(0)");
}

TEST_CASE("total derivative is the Leibniz rule", "[jets][property]") {
    std::mt19937_64 rng(3);
    oracle::InputSource in(3);
    for (int t = 0; t < 60; ++t) {
        JetExpr<Scalar> e = random_jet(rng, 2);
        XPoly x = in.poly(), y = in.poly(), f = in.poly();
        XPoly lhs = oracle::apply(jet::derive(e), {x, y}, f);
        CHECK(lhs == oracle::apply(e, {x, y}, f).derivative());
    }
}

TEST_CASE("slot swaps and antisymmetrization", "[jets][property]") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        JetExpr<Scalar> e = random_jet(rng, 2);
        CHECK(jet::swap_slots(jet::swap_slots(e, 0, 1), 0, 1) == e);
        JetExpr<Scalar> a = jet::antisymmetrize(e);
        CHECK(jet::antisymmetrize(a) == a.scaled(Scalar(2)));
        CHECK((a + jet::swap_slots(a, 0, 1)).is_zero());
    }
}

TEST_CASE("composition matches nested evaluation", "[jets][property]") {
    std::mt19937_64 rng(8);
    oracle::InputSource in(8);
    for (int t = 0; t < 40; ++t) {
        JetExpr<Scalar> a = random_jet(rng, 1), b = random_jet(rng, 1);
        JetExpr<Scalar> c = jet::compose(jet::relabel(a, 2, {0}), jet::relabel(b, 2, {1}), 1u << 1);
        XPoly x = in.poly(), y = in.poly(), f = in.poly();
        CHECK(oracle::apply(c, {x, y}, f) == oracle::apply(a, {x}, oracle::apply(b, {y}, f)));
    }
}

TEST_CASE("sl(2) truncation keeps low orders in one slot", "[jets]") {
    JetExpr<Scalar> e(2);
    e.add(JetMonomial::make({2, 5}, 0), Scalar(1));
    e.add(JetMonomial::make({3, 3}, 0), Scalar(1));
    JetExpr<Scalar> t = jet::sl2_truncation(e, 0);
    CHECK(t.size() == 1);
    CHECK(t.coeff(JetMonomial::make({2, 5}, 0)) == Scalar(1));
}
