// Quick arithmetic with noncommutative polynomials: brackets, the push
// operator, and the trace space.

#include "dskrv/dskrv.hpp"

#include <iostream>

int main() {
    using namespace dskrv;

    const Poly x = Poly::generator(Alphabet::xy, 0);
    const Poly y = Poly::generator(Alphabet::xy, 1);

    const Poly p = lie_bracket(x, lie_bracket(x, y));
    std::cout << "[x,[x,y]]:\n" << poly_to_text(p) << "\n";
    std::cout << "is Lie: " << is_lie(p) << "\n";
    std::cout << "trace (vanishes on Lie elements): " << trace(p).str() << "\n\n";

    const Word w = Word::parse("xxyxy", Alphabet::xy);
    std::cout << "push orbit of " << w.str() << ":";
    for (const Word& v : push_list(w)) std::cout << " " << v.str();
    std::cout << "\n\n";

    std::cout << "lyndon basis in degree 5:\n";
    for (const auto& e : lyndon_basis(5).elements)
        std::cout << "  " << e.word.str() << "  " << bracket_string(e.word) << "\n";
    return 0;
}
