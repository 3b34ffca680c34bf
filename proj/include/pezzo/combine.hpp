#pragma once

#include "pezzo/family.hpp"
#include "pezzo/gw.hpp"

#include <algorithm>
#include <array>

namespace pezzo {

inline ClassVector deg6_sorted(const ClassVector& d) {
    std::array<long long, 3> v{d[0], d[1], d[2]};
    std::sort(v.begin(), v.end(), std::greater<>());
    return {v[0], v[1], v[2]};
}

// Complex GW of the threefold: half the sum of (D.S)^2 GW(D) over the fiber.
inline BigInt gw_threefold(FamilyId id, const ClassVector& d) {
    if (id == FamilyId::Deg6T)
        throw DomainError("deg6t has no separate GW combiner; use deg6 coordinates (a,a,c)");
    const auto& f = family(id);
    check_rank(f, d);
    const auto& s = fiber_surface(f);
    BigInt total = 0;
    for (const auto& D : fiber(f, d)) {
        long long ds = dot_vanishing(s, D);
        if (ds == 0) continue;
        total += BigInt(ds * ds) * gw_surface(s, D);
    }
    if (total % 2 != 0) throw ConsistencyError("odd fiber sum for " + format_class(f, d));
    return total / 2;
}

// (P1)^3 classes with one coordinate at least the sum of the other two carry no curves.
inline bool gw_vanishes_a_priori(FamilyId id, const ClassVector& d) {
    if (id != FamilyId::Deg6) return false;
    long long a = d[0], b = d[1], c = d[2];
    if (a + b + c <= 1) return false;
    return a >= b + c || b >= a + c || c >= a + b;
}

inline bool w_parity_vanishes(FamilyId id, const ClassVector& d) {
    switch (id) {
        case FamilyId::Deg8:
        case FamilyId::Deg7: return d[0] % 2 == 0;
        case FamilyId::Deg6: return (d[0] + d[1] + d[2]) % 2 == 0;
        case FamilyId::Deg6T: return d[1] % 2 == 0;
    }
    return false;
}

inline bool w_vanishes_a_priori(FamilyId id, const ClassVector& d) {
    check_rank(family(id), d);
    if (w_parity_vanishes(id, d)) return true;
    if (id == FamilyId::Deg6) {
        auto s = deg6_sorted(d);
        return s[0] > s[1] + s[2] && s[0] + s[1] + s[2] > 1;
    }
    if (id == FamilyId::Deg6T) return d[1] > 2 * d[0] && 2 * d[0] + d[1] > 1;
    return false;
}

}  // namespace pezzo
