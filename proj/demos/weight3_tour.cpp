// A small tour at weight 3: solve for the basis of the double shuffle
// space, map the element to its tangential derivation, and print the
// witnesses of the membership conditions.

#include "dskrv/dskrv.hpp"

#include <iostream>

int main() {
    using namespace dskrv;

    const auto basis = ds_basis(3);
    std::cout << "weight 3 basis, dimension " << basis.size() << "\n\n";

    const DsElement& f3 = basis.front();
    std::cout << "f3:\n" << poly_to_text(f3.poly) << "\n";

    std::cout << "corrected stuffle sums:\n";
    for (const StuffleDefect& d : stuffle_defects(f3.poly))
        std::cout << "  st" << d.u.str() << "," << d.v.str() << " -> "
                  << rational_str(d.value) << "\n";

    const KrvCandidate k = ds_to_krv(f3);
    std::cout << "\ng = f3(-x-y, -y):\n" << poly_to_text(k.derivation.g);
    std::cout << "\nh = -partner(g):\n" << poly_to_text(k.derivation.h);
    std::cout << "\nkills x+y: " << (k.special ? "yes" : "no") << "\n";
    std::cout << "divergence: " << divergence(k.derivation).str() << "\n";
    std::cout << "trace target: " << trace_target(3).str() << "\n";
    if (k.divergence_scalar)
        std::cout << "scalar: " << rational_str(*k.divergence_scalar) << "\n";

    const auto tri = triangle_check(f3, static_cast<int>(basis.size()));
    std::cout << "triangle commutes: " << (tri && *tri ? "yes" : "no") << "\n";
    return 0;
}
