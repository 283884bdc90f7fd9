#include "sltriv/weight.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace sltriv;

namespace {

LambdaScalar random_ratfun(std::mt19937_64& rng) {
    auto poly = [&](int deg) {
        std::vector<Rational> c;
        for (int i = 0; i <= deg; ++i) c.push_back(rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)));
        return LambdaPoly(c);
    };
    LambdaPoly den = poly(static_cast<int>(rng() % 3));
    if (den.is_zero()) den = LambdaPoly(std::vector<Rational>{1});
    return LambdaScalar::normalized(poly(static_cast<int>(rng() % 4)), den);
}

Scalar random_root_field(std::mt19937_64& rng, const std::shared_ptr<const Modulus>& m) {
    auto q = [&] { return rat(static_cast<long>(rng() % 15) - 7, 1 + static_cast<long>(rng() % 4)); };
    return Scalar(LambdaScalar(LambdaPoly(std::vector<Rational>{q(), q()})), m);
}

}  // namespace

TEST_CASE("rationals parse and render canonically", "[scalars]") {
    CHECK(render(parse_rational("6/4")) == "3/2");
    CHECK(render(parse_rational("-7")) == "-7");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK(binomial(6, 2) == 15);
    CHECK(factorial(5) == 120);
}

TEST_CASE("polynomial division and gcd", "[scalars]") {
    LambdaPoly a(std::vector<Rational>{-1, 0, 1});  // l^2 - 1
    LambdaPoly b(std::vector<Rational>{1, 1});      // l + 1
    auto [q, r] = LambdaPoly::divmod(a, b);
    CHECK(q == LambdaPoly(std::vector<Rational>{-1, 1}));
    CHECK(r.is_zero());
    CHECK(LambdaPoly::gcd(a, b * b).monic() == b);
    LambdaPoly p(std::vector<Rational>{-2, 0, 0, 1});  // l^3 - 2
    auto roots = LambdaPoly(std::vector<Rational>{-15, 17, 24, 4}).rational_roots();
    CHECK(roots.size() == 3);  // -5, -3/2, 1/2
    CHECK(p.rational_roots().empty());
}

TEST_CASE("rational functions stay normalized", "[scalars]") {
    LambdaScalar l = LambdaScalar::symbol();
    LambdaScalar x = (l * l - LambdaScalar(1)) / (l + LambdaScalar(1));
    CHECK(x == l - LambdaScalar(1));
    CHECK(x.is_polynomial());
    CHECK(x.eval(Rational(3)) == 2);
}

TEST_CASE("field axioms over Q(l) on random elements", "[scalars][property]") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        LambdaScalar a = random_ratfun(rng), b = random_ratfun(rng), c = random_ratfun(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == LambdaScalar());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("Q(sqrt 19) arithmetic modulo 2l^2+10l+3", "[scalars][property]") {
    Weight a1 = Weight::a_root(1);
    Scalar a = a1.value();
    CHECK((Scalar(2) * a * a + Scalar(10) * a + Scalar(3)).is_zero());
    CHECK(a.render() == "-5/2+1/2*sqrt(19)");
    CHECK(Weight::a_root(-1).value().render() == "-5/2-1/2*sqrt(19)");
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        Scalar x = random_root_field(rng, a1.modulus()), y = random_root_field(rng, a1.modulus());
        CHECK(x * y == y * x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}

TEST_CASE("weight strings", "[scalars]") {
    CHECK(parse_weight("generic").base.is_generic());
    CHECK(parse_weight("-5/2").rational_value() == rat(-5, 2));
    DensityWeight w = parse_weight("alg:2,10,3:-:4");
    CHECK(w.base.is_algebraic());
    CHECK(w.offset == 4);
    CHECK(w.base == Weight::a_root(-1));
    CHECK(parse_weight(w.base.spec_string()).base == w.base);
    for (const char* bad : {"", "alg:2,10:+", "alg:2,10,3:*", "alg:2,10,3:+:x", "1/", "abc"}) {
        CHECK_THROWS_AS(parse_weight(bad), std::invalid_argument);
    }
}

TEST_CASE("density weights compare by value", "[scalars]") {
    DensityWeight a(Weight::rational(3), -1), b(Weight::rational(2));
    CHECK(a == b);
    CHECK(DensityWeight(Weight::generic(), 2).label() == "l+2");
    CHECK(DensityWeight(Weight::a_root(1), -3).label() == "a-3");
}
