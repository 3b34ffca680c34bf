#pragma once

#include "pezzo/lattice.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pezzo {

enum class FamilyId { Deg8, Deg7, Deg6, Deg6T };

inline constexpr FamilyId kAllFamilies[] = {FamilyId::Deg8, FamilyId::Deg7, FamilyId::Deg6,
                                            FamilyId::Deg6T};

// A del Pezzo threefold fibred by a pencil of surfaces of class half its anticanonical class.
// Classes are written in the coordinates of the tau-anti-invariant part:
//   Deg8  (d)        P3
//   Deg7  (d;k)      P3 blown up at a point
//   Deg6  (a,b,c)    P1xP1xP1, standard real structure
//   Deg6T (a;c)      P1xP1xP1 with the first two factors exchanged
struct ThreefoldFamily {
    FamilyId id;
    std::string token;
    int degree;
    int h2_rank;
    SurfaceId surface;
    std::vector<std::vector<long long>> psi_matrix;
    int anti_invariant_rank;
    std::vector<long long> c1;  // c1 . d as a covector on the class coordinates
};

inline const ThreefoldFamily& family(FamilyId id) {
    static const std::vector<ThreefoldFamily> all = {
        {FamilyId::Deg8, "deg8", 8, 1, SurfaceId::Q, {{1, 1}}, 1, {4}},
        {FamilyId::Deg7, "deg7", 7, 2, SurfaceId::Q_1, {{1, 1, 0}, {0, 0, 1}}, 2, {4, -2}},
        {FamilyId::Deg6, "deg6", 6, 3, SurfaceId::Q_2,
         {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, -1, -1}}, 3, {2, 2, 2}},
        {FamilyId::Deg6T, "deg6t", 6, 3, SurfaceId::Q_2, {{1, 0, 0, 0}, {1, 1, -1, -1}}, 2, {4, 2}},
    };
    return all[static_cast<std::size_t>(id)];
}

inline std::optional<FamilyId> family_from_token(std::string_view tok) {
    for (auto id : kAllFamilies)
        if (family(id).token == tok) return id;
    return std::nullopt;
}

inline const SurfaceLattice& fiber_surface(const ThreefoldFamily& f) { return surface(f.surface); }

inline void check_rank(const ThreefoldFamily& f, const ClassVector& d) {
    if (static_cast<int>(d.rank()) != f.anti_invariant_rank)
        throw DimensionError(f.token + " expects " + std::to_string(f.anti_invariant_rank) +
                             " coordinates, got " + std::to_string(d.rank()));
}

// k_d = c1.d / 2
inline long long constraint_count(const ThreefoldFamily& f, const ClassVector& d) {
    check_rank(f, d);
    long long c = 0;
    for (std::size_t i = 0; i < d.rank(); ++i) c += f.c1[i] * d[i];
    if (c % 2 != 0) throw ParityError("c1.d is odd for " + d.csv());
    return c / 2;
}

inline ClassVector psi(const ThreefoldFamily& f, const ClassVector& D) {
    check_rank(fiber_surface(f), D);
    std::vector<long long> out;
    for (const auto& row : f.psi_matrix) {
        long long v = 0;
        for (std::size_t j = 0; j < row.size(); ++j) v += row[j] * D[j];
        out.push_back(v);
    }
    return ClassVector(out);
}

namespace detail {

// Members of psi^{-1}(d) on P1xP1#2 with the exceptional split (al, m - al), al between 0 and m.
inline std::vector<ClassVector> exceptional_splits(long long a, long long b, long long m) {
    std::vector<ClassVector> out;
    long long lo = std::min(0LL, m), hi = std::max(0LL, m);
    for (long long al = lo; al <= hi; ++al) out.push_back(ClassVector{a, b, al, m - al});
    return out;
}

}  // namespace detail

// Every member of psi^{-1}(d) with nonnegative ruling coefficients and exceptional
// coefficients between 0 and the total; this is the index set of the printed tables.
inline std::vector<ClassVector> fiber_effective(const ThreefoldFamily& f, const ClassVector& d) {
    check_rank(f, d);
    std::vector<ClassVector> out;
    switch (f.id) {
        case FamilyId::Deg8:
            for (long long a = 0; a <= d[0]; ++a) out.push_back(ClassVector{a, d[0] - a});
            break;
        case FamilyId::Deg7:
            for (long long a = 0; a <= d[0]; ++a) out.push_back(ClassVector{a, d[0] - a, d[1]});
            break;
        case FamilyId::Deg6:
            if (d[0] < 0 || d[1] < 0 || d[2] < 0) break;
            out = detail::exceptional_splits(d[0], d[1], d[0] + d[1] - d[2]);
            break;
        case FamilyId::Deg6T:
            if (d[0] < 0 || d[1] < 0) break;
            out = detail::exceptional_splits(d[0], d[0], 2 * d[0] - d[1]);
            break;
    }
    return out;
}

// Members of psi^{-1}(d) whose surface GW value is not forced to vanish.  Closed under T.
inline std::vector<ClassVector> fiber(const ThreefoldFamily& f, const ClassVector& d) {
    auto all = fiber_effective(f, d);
    if (f.id == FamilyId::Deg8 || f.id == FamilyId::Deg7) return all;
    const auto& s = fiber_surface(f);
    std::vector<ClassVector> out;
    for (const auto& D : all) {
        if (!plane_class_vanishes(kappa(D)) || !plane_class_vanishes(kappa(monodromy(s, D))))
            out.push_back(D);
    }
    return out;
}

inline std::string format_class(const ThreefoldFamily& f, const ClassVector& d) {
    switch (f.id) {
        case FamilyId::Deg8: return std::to_string(d[0]);
        case FamilyId::Deg7:
        case FamilyId::Deg6T: return "(" + std::to_string(d[0]) + ";" + std::to_string(d[1]) + ")";
        case FamilyId::Deg6: return "(" + d.csv() + ")";
    }
    return d.csv();
}

}  // namespace pezzo
