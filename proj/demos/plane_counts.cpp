// Plane curve counts three ways: Kontsevich, the blow-up recursion, floor diagrams.
#include "pezzo/pezzo.hpp"

#include <iostream>

int main() {
    using namespace pezzo;
    const auto& p2 = surface(SurfaceId::P2);
    for (long long d = 1; d <= 5; ++d) {
        auto pc = polygon_of(p2, ClassVector{d});
        std::cout << "d=" << d << "  N=" << gw_p2(d) << "  wdvv=" << gw_blowup_p2(d)
                  << "  floors=" << fd_count_complex(pc) << "  W(l=0)=" << fd_count_real_l0(pc) << '\n';
    }
}
