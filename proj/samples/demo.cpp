// Prints the q-character of the fundamental module at node 2 of C_2 and the
// dominant l-weights at node 2 of D_4, then the multiplicities of D_6 node 4.

#include <iostream>

#include "qchar/io.hpp"

int main() {
    using namespace qchar;

    const RootSystem c2(Kind::C, 2);
    std::cout << io::character_text(c2, full_character(c2, 2), Notation::Omega) << '\n';

    const RootSystem d4(Kind::D, 4);
    std::cout << io::dominant_text(d4, 2, std::nullopt, 0, Notation::Omega) << '\n';

    const RootSystem d6(Kind::D, 6);
    const auto ch = full_character(d6, 4, 0, 0);
    std::map<long long, int> hist;
    for (const auto& [x, m] : ch.entries) ++hist[m];
    std::cout << d6.name() << " node 4: " << ch.entries.size() << " l-weights, dimension " << ch.mass() << '\n';
    for (const auto& [m, c] : hist) std::cout << "  multiplicity " << m << ": " << c << " l-weights\n";
}
