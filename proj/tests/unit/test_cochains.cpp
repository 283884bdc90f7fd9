#include "sltriv/oracle.hpp"

#include <catch_amalgamated.hpp>

using namespace sltriv;

namespace {

DensityWeight at(const Rational& q) { return DensityWeight(Weight::rational(q)); }
DensityWeight generic(long off = 0) { return DensityWeight(Weight::generic(), off); }

}  // namespace

TEST_CASE("catalog cocycles are relative cocycles", "[cochains][property]") {
    std::vector<std::pair<DensityWeight, long>> ids = {{generic(), 2}, {generic(), 3}, {generic(), 4},
                                                       {at(0), 5},     {at(-4), 5},    {at(rat(7, 3)), 2}};
    ids.emplace_back(DensityWeight(Weight::a_root(1)), 6);
    ids.emplace_back(DensityWeight(Weight::a_root(-1)), 6);
    for (const auto& [w, k] : ids) {
        Cochain1<Scalar> c = cocycle(w, k);
        CHECK(is_relative(c));
        CHECK(coboundary1(c).is_zero());
    }
}

TEST_CASE("d of an invariant 0-cochain is a relative cocycle", "[cochains]") {
    // 2l = 1-k: f -> f^(k) is invariant (Bol)
    for (long k = 2; k <= 8; ++k) {
        auto zs = invariant_zero_cochains(at(rat(1 - k, 2)), k);
        REQUIRE(zs.size() == 1);
        Cochain1<Scalar> b = coboundary0(zs[0]);
        CHECK(coboundary1(b).is_zero());
        CHECK(invariant_zero_cochains(at(rat(2 - k, 2)), k).empty());
    }
}

TEST_CASE("d(db) = 0 symbolically for random cochains", "[cochains][property]") {
    oracle::InputSource in(21);
    for (int t = 0; t < 30; ++t) {
        Cochain1<Scalar> b = oracle::detail::random_cochain(in, generic(), 3 + static_cast<long>(t % 5));
        CHECK(cocycle2_defect(coboundary1(b)).is_zero());
        CHECK(is_antisymmetric(coboundary1(b)));
    }
}

TEST_CASE("cup products are antisymmetric relative 2-cocycles", "[cochains]") {
    Cochain2<Scalar> c = cup(cocycle(generic(2), 3), cocycle(generic(), 2));
    CHECK(is_relative(c));
    CHECK(cocycle2_defect(c).is_zero());
    CHECK(invariance_defect(c).is_zero());
    CHECK(cup(cocycle(generic(), 2), cocycle(generic(2), 3)).body == c.body);
    CHECK_THROWS_AS(cup(cocycle(generic(), 2), cocycle(generic(), 3)), std::invalid_argument);
}

TEST_CASE("triviality test", "[cochains]") {
    Triviality t = triviality_test(omega(at(1), 5));
    CHECK(t.coboundary);
    CHECK(t.scale == Scalar(rat(-1, 5)));
    CHECK_FALSE(triviality_test(omega(at(0), 5)).coboundary);
    CHECK_FALSE(triviality_test(omega(generic(), 7)).coboundary);
    CHECK(triviality_test(omega(at(-6), 7)).coboundary);
    CHECK(triviality_test(omega(at(0), 7)).coboundary);
}

TEST_CASE("decomposition into Omega and dJ", "[cochains]") {
    DensityWeight z = at(0);
    auto d = decompose(cup(cocycle(at(5), 3), cocycle(z, 5)), omega(z, 8));
    REQUIRE(d);
    CHECK(d->omega == Scalar(rat(10, 11)));
    CHECK(d->coboundary == Scalar(rat(2, 11)));
}

TEST_CASE("H1 dimensions", "[cochains]") {
    CHECK(h1_dimension(at(0), 5).dim == 1);
    CHECK(h1_dimension(at(1), 5).dim == 0);
    CHECK(h1_dimension(generic(), 2).dim == 1);
    CHECK(h1_dimension(at(rat(-1, 2)), 2).dim == 0);
    H1Result g6 = h1_dimension(generic(), 6);
    CHECK(g6.dim == 0);
    REQUIRE(g6.exceptional.size() == 2);
    for (const auto& e : g6.exceptional) {
        CHECK(e.weight.base.is_algebraic());
        CHECK(e.dim == 1);
    }
    H1Point p = h1_point(at(-3), 7);
    CHECK(p.j_is_cocycle);
    CHECK(p.j_is_exact);
    CHECK(p.dim == 0);
}
