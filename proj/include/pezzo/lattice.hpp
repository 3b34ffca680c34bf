#pragma once

#include "pezzo/error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pezzo {

// Integer coordinates of a homology class in a fixed basis.
class ClassVector {
public:
    ClassVector() = default;
    ClassVector(std::initializer_list<long long> c) : c_(c) {}
    explicit ClassVector(std::vector<long long> c) : c_(std::move(c)) {}

    std::size_t rank() const { return c_.size(); }
    long long operator[](std::size_t i) const { return c_[i]; }
    long long& operator[](std::size_t i) { return c_[i]; }
    const std::vector<long long>& coeffs() const { return c_; }

    friend ClassVector operator+(const ClassVector& x, const ClassVector& y) {
        check_same(x, y);
        ClassVector r = x;
        for (std::size_t i = 0; i < r.rank(); ++i) r.c_[i] += y.c_[i];
        return r;
    }
    friend ClassVector operator-(const ClassVector& x, const ClassVector& y) {
        check_same(x, y);
        ClassVector r = x;
        for (std::size_t i = 0; i < r.rank(); ++i) r.c_[i] -= y.c_[i];
        return r;
    }
    friend ClassVector operator*(long long k, const ClassVector& x) {
        ClassVector r = x;
        for (auto& v : r.c_) v *= k;
        return r;
    }
    friend bool operator==(const ClassVector&, const ClassVector&) = default;
    friend auto operator<=>(const ClassVector&, const ClassVector&) = default;

    // Plain comma list, the CLI and CSV spelling.
    std::string csv() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c_[i]);
        }
        return s;
    }

    static void check_same(const ClassVector& x, const ClassVector& y) {
        if (x.rank() != y.rank())
            throw DimensionError("rank mismatch: " + std::to_string(x.rank()) + " vs " +
                                 std::to_string(y.rank()));
    }

private:
    std::vector<long long> c_;
};

enum class SurfaceId { P2, P2_1, P2_2, P2_3, Q, Q_1, Q_2, Q_2T };

inline constexpr SurfaceId kAllSurfaces[] = {SurfaceId::P2,  SurfaceId::P2_1, SurfaceId::P2_2,
                                             SurfaceId::P2_3, SurfaceId::Q,    SurfaceId::Q_1,
                                             SurfaceId::Q_2,  SurfaceId::Q_2T};

// Q_2T is P1xP1#2 with the twisted real structure (real part S^2#2RP^2).
// Its classes are the anti-invariant ones (a,a;al,be), stored as (a;al,be).
struct SurfaceLattice {
    SurfaceId id;
    std::string token;
    std::string name;
    int rank;
    std::vector<std::vector<long long>> gram;
    ClassVector canonical;
    std::optional<ClassVector> vanishing_cycle;
    std::optional<ClassVector> ref_class;
    std::vector<int> rho_coords;  // coordinates kept by the mod-2 reduction
    int blowups;
    bool plane_side;
    bool twisted;
};

namespace detail {

inline std::vector<std::vector<long long>> diag_gram(std::vector<long long> d) {
    std::vector<std::vector<long long>> g(d.size(), std::vector<long long>(d.size(), 0));
    for (std::size_t i = 0; i < d.size(); ++i) g[i][i] = d[i];
    return g;
}

inline std::vector<std::vector<long long>> quadric_gram(int blowups) {
    std::vector<long long> d(2 + blowups, -1);
    d[0] = d[1] = 0;
    auto g = diag_gram(d);
    g[0][1] = g[1][0] = 1;
    return g;
}

inline SurfaceLattice make_plane(int k) {
    static const char* tokens[] = {"p2", "p2x1", "p2x2", "p2x3"};
    static const char* names[] = {"P2", "P2#1", "P2#2", "P2#3"};
    std::vector<long long> d(1 + k, -1);
    d[0] = 1;
    std::vector<long long> K(1 + k, -1);
    K[0] = -3;
    std::vector<int> rho;
    for (int i = 0; i <= k; ++i) rho.push_back(i);
    return {static_cast<SurfaceId>(k), tokens[k], names[k], 1 + k, diag_gram(d), ClassVector(K),
            std::nullopt, std::nullopt, rho, k, true, false};
}

inline SurfaceLattice make_quadric(int k) {
    static const char* tokens[] = {"q", "qx1", "qx2"};
    static const char* names[] = {"P1xP1", "P1xP1#1", "P1xP1#2"};
    std::vector<long long> K(2 + k, -1);
    K[0] = K[1] = -2;
    std::vector<long long> S(2 + k, 0), L(2 + k, 0);
    if (k == 2) {
        S[2] = 1;
        S[3] = -1;
        L[3] = -1;
    } else {
        S[0] = 1;
        S[1] = -1;
        L[0] = 1;
    }
    std::vector<int> rho;
    for (int i = 0; i < 2 + k; ++i) rho.push_back(i);
    return {static_cast<SurfaceId>(4 + k), tokens[k], names[k], 2 + k, quadric_gram(k),
            ClassVector(K), ClassVector(S), ClassVector(L), rho, k, false, false};
}

inline SurfaceLattice make_twisted() {
    auto g = diag_gram({2, -1, -1});
    return {SurfaceId::Q_2T, "qx2t", "P1xP1#2 (twisted)", 3, g, ClassVector{-2, -1, -1},
            ClassVector{0, 1, -1}, ClassVector{0, 0, -1}, {1, 2}, 2, false, true};
}

}  // namespace detail

inline const SurfaceLattice& surface(SurfaceId id) {
    static const std::vector<SurfaceLattice> all = {
        detail::make_plane(0),   detail::make_plane(1),   detail::make_plane(2),
        detail::make_plane(3),   detail::make_quadric(0), detail::make_quadric(1),
        detail::make_quadric(2), detail::make_twisted()};
    return all[static_cast<std::size_t>(id)];
}

inline std::optional<SurfaceId> surface_from_token(std::string_view tok) {
    for (auto id : kAllSurfaces)
        if (surface(id).token == tok) return id;
    return std::nullopt;
}

inline void check_rank(const SurfaceLattice& s, const ClassVector& d) {
    if (static_cast<int>(d.rank()) != s.rank)
        throw DimensionError(s.name + " expects " + std::to_string(s.rank) + " coordinates, got " +
                             std::to_string(d.rank()));
}

inline long long pair(const SurfaceLattice& s, const ClassVector& x, const ClassVector& y) {
    check_rank(s, x);
    check_rank(s, y);
    long long r = 0;
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < s.rank; ++j) r += x[i] * s.gram[i][j] * y[j];
    return r;
}

// k_D = c1.D - 1
inline long long constraint_count(const SurfaceLattice& s, const ClassVector& d) {
    return -pair(s, s.canonical, d) - 1;
}

inline long long genus(const SurfaceLattice& s, const ClassVector& d) {
    long long twice = pair(s, s.canonical, d) + pair(s, d, d) + 2;
    return twice / 2;
}

inline ClassVector monodromy(const SurfaceLattice& s, const ClassVector& d) {
    if (!s.vanishing_cycle) throw UnsupportedLattice(s.name + " carries no vanishing cycle");
    const auto& S = *s.vanishing_cycle;
    return d + pair(s, d, S) * S;
}

inline long long dot_vanishing(const SurfaceLattice& s, const ClassVector& d) {
    if (!s.vanishing_cycle) throw UnsupportedLattice(s.name + " carries no vanishing cycle");
    return pair(s, d, *s.vanishing_cycle);
}

inline std::vector<int> rho(const SurfaceLattice& s, const ClassVector& d) {
    check_rank(s, d);
    std::vector<int> r;
    for (int i : s.rho_coords) r.push_back(static_cast<int>(((d[i] % 2) + 2) % 2));
    return r;
}

// (a,b;al,be) on P1xP1#2 -> (a+b-al; a-al, b-al, be) on P2#3.
inline ClassVector kappa(const ClassVector& D) {
    if (D.rank() != 4) throw DimensionError("kappa expects a rank-4 class");
    return {D[0] + D[1] - D[2], D[0] - D[2], D[1] - D[2], D[3]};
}

inline ClassVector twisted_to_quadric(const ClassVector& D) {
    if (D.rank() != 3) throw DimensionError("twisted classes have 3 coordinates");
    return {D[0], D[0], D[1], D[2]};
}

// Same class written on P2#3, (d;a1,a2,a3).
inline ClassVector plane_model(const SurfaceLattice& s, const ClassVector& D) {
    check_rank(s, D);
    if (s.plane_side) {
        ClassVector r{0, 0, 0, 0};
        for (int i = 0; i < s.rank; ++i) r[i] = D[i];
        return r;
    }
    switch (s.id) {
        case SurfaceId::Q: return {D[0] + D[1], D[0], D[1], 0};
        case SurfaceId::Q_1: return {D[0] + D[1], D[0], D[1], D[2]};
        case SurfaceId::Q_2: return kappa(D);
        default: return kappa(twisted_to_quadric(D));
    }
}

inline ClassVector cremona(const ClassVector& p) {
    long long d = p[0], a1 = p[1], a2 = p[2], a3 = p[3];
    return {2 * d - a1 - a2 - a3, d - a2 - a3, d - a1 - a3, d - a1 - a2};
}

// The classes of P2#3 with GW value 1 that the pair-sum rule would otherwise zero:
// exceptional curves E_i and lines through two of the points.
inline bool plane_class_exceptional(const ClassVector& p) {
    std::vector<long long> a{p[1], p[2], p[3]};
    std::sort(a.begin(), a.end());
    if (p[0] == 0) return a == std::vector<long long>{-1, 0, 0};
    if (p[0] == 1) return a == std::vector<long long>{0, 1, 1};
    return false;
}

// Sufficient condition for GW(d;a) = 0 on P2#3.
inline bool plane_class_vanishes(const ClassVector& p) {
    if (plane_class_exceptional(p)) return false;
    if (p[0] <= 0) return true;
    for (int i = 1; i <= 3; ++i)
        if (p[i] < 0) return true;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            if (p[i] + p[j] > p[0]) return true;
    return false;
}

inline int singular_fiber_count(int degree) {
    static const int chi[] = {10, 8, 6, 4};
    if (degree < 5 || degree > 8) throw DomainError("degree must be in 5..8");
    return 24 - 2 * degree - chi[degree - 5];
}

// Human-readable class spelling in the surface's usual notation.
inline std::string format_class(const SurfaceLattice& s, const ClassVector& d) {
    auto join = [&](int from, int to) {
        std::string r;
        for (int i = from; i < to; ++i) {
            if (i > from) r += ',';
            r += std::to_string(d[i]);
        }
        return r;
    };
    if (s.plane_side) return s.rank == 1 ? join(0, 1) : "(" + join(0, 1) + ";" + join(1, s.rank) + ")";
    if (s.twisted) return "(" + join(0, 1) + ";" + join(1, 3) + ")";
    if (s.rank == 2) return "(" + join(0, 2) + ")";
    return "(" + join(0, 2) + ";" + join(2, s.rank) + ")";
}

}  // namespace pezzo
