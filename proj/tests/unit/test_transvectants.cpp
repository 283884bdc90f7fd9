#include "sltriv/catalog.hpp"

#include <catch_amalgamated.hpp>

using namespace sltriv;

TEST_CASE("generic coefficient tables", "[transvectants]") {
    Scalar t = Scalar::lambda(), l = Scalar::lambda() + Scalar(rat(1, 3));
    CoefficientTable k0 = generic_coefficients(t, l, 0);
    CHECK(k0.at(0, 0) == Scalar(1));
    CoefficientTable k1 = generic_coefficients(t, l, 1);
    CHECK(k1.at(1, 0) == Scalar(2) * l);
    CHECK(k1.at(0, 1) == -(Scalar(2) * t));
    CoefficientTable k2 = generic_coefficients(Scalar(1), Scalar(1), 2);
    // tops 2tau+k-1 = 3 and 2lam+k-1 = 3
    CHECK(k2.at(2, 0) == Scalar(3));
    CHECK(k2.at(1, 1) == Scalar(-9));
    CHECK(k2.at(0, 2) == Scalar(3));
    for (long k = 0; k <= 8; ++k) {
        CoefficientTable g = generic_coefficients(t, l, k);
        CHECK(g.satisfies_recurrence(t, l));
        CHECK(bilinear_invariance_defect(g, t, l).is_zero());
    }
    CHECK_THROWS_AS(generic_coefficients(Scalar(0), Scalar(1), 3), std::invalid_argument);
}

TEST_CASE("resonant solution spaces", "[transvectants][property]") {
    CHECK(resonant_solutions(Scalar(-1), Scalar(rat(7, 3)), 5).size() == 1);
    for (long k = 3; k <= 10; ++k) {
        for (long b = 1; b <= 3; ++b) {
            CHECK(resonant_solutions(Scalar(-1), Scalar(rat(b - k, 2)), k).size() == 2);
        }
    }
    for (long k = 1; k <= 8; ++k) {
        for (long t2 = 0; t2 >= -10; --t2) {
            for (long l2 = 0; l2 >= -10; --l2) {
                auto s = resonant_solutions(Scalar(rat(t2, 2)), Scalar(rat(l2, 2)), k);
                CHECK(static_cast<int>(s.size()) == resonant_dimension_predicate(rat(t2, 2), rat(l2, 2), k));
            }
        }
    }
}

TEST_CASE("J and I operators", "[transvectants]") {
    DensityWeight g(Weight::generic());
    for (long k = 3; k <= 12; ++k) {
        Cochain1<Scalar> j = transvectant_J(g, k);
        CHECK(invariance_defect(j).is_zero());
        CHECK(jet::sl2_truncation(j.body, 0).is_zero());
        CHECK(table_of(j).satisfies_recurrence(Scalar(-1), g.value()));
    }
    for (long k = 6; k <= 8; ++k) {
        CHECK(transvectant_J(g, k).body.scaled(Scalar(printed_normalization(k))) == printed::transvectant(g, k).body);
    }
    Scalar l = Scalar::lambda();
    Cochain1<Scalar> j8 = transvectant_J(g, 8);
    CHECK(j8.body.coeff(JetMonomial::make({8}, 0)) ==
          -l * (l + Scalar(1)) * (l + Scalar(2)) * (Scalar(2) * l + Scalar(3)) * (Scalar(2) * l + Scalar(1)) / Scalar(840));

    DensityWeight w(Weight::rational(rat(-3, 2)));  // 2l = 2-k at k = 5
    Cochain1<Scalar> i5 = operator_I(w, 5);
    CHECK(i5.body.coeff(JetMonomial::make({1}, 4)) == Scalar(rat(5, 2)));
    CHECK(invariance_defect(i5).is_zero());
    CHECK_THROWS_AS(operator_I(DensityWeight(Weight::rational(1)), 5), std::invalid_argument);
}

TEST_CASE("resonance predicate", "[transvectants]") {
    CHECK(is_resonant(Scalar(0), 3));
    CHECK(is_resonant(Scalar(rat(-1, 2)), 3));
    CHECK_FALSE(is_resonant(Scalar(rat(-3, 2)), 3));
    CHECK_FALSE(is_resonant(Scalar::lambda(), 3));
}
