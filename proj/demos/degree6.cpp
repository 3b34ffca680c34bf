// GW and Welschinger invariants of (P1)^3 for a few classes, next to the surface terms
// that produce them.
#include "pezzo/pezzo.hpp"

#include <iostream>

int main() {
    using namespace pezzo;
    InvariantStore store;
    const auto& f = family(FamilyId::Deg6);
    const auto& s = fiber_surface(f);

    for (ClassVector d : {ClassVector{2, 2, 2}, ClassVector{3, 3, 3}, ClassVector{4, 4, 3}}) {
        std::cout << format_class(f, d) << "  GW = " << gw_threefold(FamilyId::Deg6, d) << '\n';
        for (const auto& D : fiber(f, d))
            std::cout << "    " << format_class(s, D) << "  D.S = " << dot_vanishing(s, D)
                      << "  GW = " << gw_surface(s, D) << '\n';
    }

    ClassVector d{3, 3, 3};
    std::cout << "\nW" << format_class(f, d) << " by l:";
    for (int l = 0; l <= max_pairs(FamilyId::Deg6, d); ++l) {
        try {
            std::cout << ' ' << w_threefold(store, {FamilyId::Deg6, d, l});
        } catch (const DataUnavailable&) {
            std::cout << " ?";
        }
    }
    std::cout << '\n';
}
