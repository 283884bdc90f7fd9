// Builds the three small symbol-space deformations and prints their data.
#include "sltriv/deformations.hpp"

#include <iostream>

using namespace sltriv;

static void show(long n, const DensityWeight& delta) {
    Deformation d = analyze(make_spec(n, delta));
    const Weight& base = d.spec.base;
    std::cout << "S^" << n << "_" << d.spec.delta_label() << ": " << d.spec.parameters.size() << " parameters, "
              << d.L2terms.size() << " second-order terms\n";
    for (const auto& t : d.L2terms) {
        std::cout << "  J" << t.k + 1 << " at " << d.spec.weight(t.src).label() << " with omega = " << t.omega.render(base)
                  << "\n";
    }
    for (const auto& cs : d.conditions) {
        for (const auto& g : cs.generators) std::cout << "  order " << cs.order << ": " << g.poly.render(base) << " = 0\n";
    }
    IntegrabilityReport r = verify_full_integrability(d);
    std::cout << "  Maurer-Cartan through order 4: " << (r.ok() ? "holds modulo the conditions" : "FAILS") << "\n\n";
}

int main() {
    show(4, DensityWeight(Weight::generic(), 4));
    show(6, DensityWeight(Weight::rational(7)));
    show(7, DensityWeight(Weight::generic(), 7));
}
