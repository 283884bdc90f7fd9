// Evaluates catalog cochains on concrete polynomials and runs the rank test.
#include "sltriv/oracle.hpp"

#include <iostream>

using namespace sltriv;
using namespace sltriv::oracle;

int main() {
    DensityWeight lam(Weight::rational(1));
    XPoly x4 = XPoly::monomial(4), x3 = XPoly::monomial(3), one = XPoly::monomial(0);

    auto c = evaluate_cochain(cocycle(lam, 2), x4, {one, lam});
    std::cout << "C_{1,3}(x^4) 1 = " << c.f.render() << "  (weight " << c.weight.label() << ")\n";

    Cochain2<Scalar> om = omega(lam, 5);
    std::cout << "Omega_{1,6}(x^3, x^4) 1 = " << evaluate_cochain(om, x3, x4, {one, lam}).f.render() << "\n";
    std::cout << "Omega_{1,6}(x, x^4) 1 = " << evaluate_cochain(om, XPoly::monomial(1), x4, {one, lam}).f.render()
              << "  (vanishes on sl(2))\n";

    for (long l : {1, 0}) {
        Cochain2<Scalar> w = omega(DensityWeight(Weight::rational(l)), 5);
        auto r = rank_coboundary_test(w);
        std::cout << "Omega_{" << l << "," << l + 5 << "}: "
                  << (r.verdict == RankVerdict::Coboundary ? "coboundary" : "nontrivial") << " (" << r.candidates
                  << " candidates, " << r.rows << " evaluations)\n";
    }

    auto cc = crosscheck_expansion("coboundary", 50, 7);
    std::cout << "symbolic d vs Lie derivatives: " << cc.trials - cc.failures << "/" << cc.trials << " agree\n";
}
