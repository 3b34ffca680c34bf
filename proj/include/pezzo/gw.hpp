#pragma once

#include "pezzo/bigint.hpp"
#include "pezzo/lattice.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace pezzo {

// Genus-0 GW invariants of P2 blown up at up to three general points.
//
// Classes (d;a1,a2,a3) with nonnegative multiplicities are computed with the WDVV
// recursion obtained by inserting the line class H into the associativity relation:
//
//   N(b) = sum_{b1+b2=b} N(b1) N(b2) (b1.b2) [d1 d2 C(n-3, n1-1) - d1^2 C(n-3, n1)]
//
// where n = 3d - sum(a) - 1 is the number of point conditions and n1 that of b1.
class GwEngine {
public:
    using Key = std::array<long long, 4>;

    // Kontsevich's recursion for plane curves; kept separate as an oracle.
    BigInt p2(long long d) {
        if (d <= 0) throw DomainError("gw_p2 needs d >= 1");
        {
            std::shared_lock lock(mu_);
            auto it = p2_memo_.find(d);
            if (it != p2_memo_.end()) return it->second;
        }
        BigInt n = 0;
        if (d == 1) {
            n = 1;
        } else {
            for (long long d1 = 1; d1 < d; ++d1) {
                long long d2 = d - d1;
                BigInt t = BigInt(d1 * d1 * d2 * d2) * binomial(3 * d - 4, 3 * d1 - 2) -
                           BigInt(d1 * d1 * d1 * d2) * binomial(3 * d - 4, 3 * d1 - 1);
                n += p2(d1) * p2(d2) * t;
            }
        }
        std::unique_lock lock(mu_);
        return p2_memo_.emplace(d, n).first->second;
    }

    BigInt blowup_p2(long long d, long long a1, long long a2, long long a3) {
        ClassVector p{d, a1, a2, a3};
        if (plane_class_exceptional(p)) return 1;
        if (plane_class_vanishes(p)) return 0;
        std::array<long long, 3> a{a1, a2, a3};
        std::sort(a.begin(), a.end(), std::greater<>());
        return wdvv({d, a[0], a[1], a[2]});
    }

    BigInt surface(const SurfaceLattice& s, const ClassVector& D) {
        ClassVector p = plane_model(s, D);
        return blowup_p2(p[0], p[1], p[2], p[3]);
    }

    std::size_t memo_size() const {
        std::shared_lock lock(mu_);
        return memo_.size();
    }

private:
    // Key is (d; a1 >= a2 >= a3 >= 0) and passes the pair-sum rule.
    BigInt wdvv(const Key& k) {
        {
            std::shared_lock lock(mu_);
            auto it = memo_.find(k);
            if (it != memo_.end()) return it->second;
        }
        const long long d = k[0];
        const long long n = 3 * d - k[1] - k[2] - k[3] - 1;
        BigInt total = 0;
        if (n <= 2) {
            total = 1;
        } else {
            for (long long d1 = 1; d1 < d; ++d1) {
                const long long d2 = d - d1;
                for (long long x = 0; x <= k[1]; ++x)
                    for (long long y = 0; y <= k[2]; ++y)
                        for (long long z = 0; z <= k[3]; ++z) {
                            const long long n1 = 3 * d1 - x - y - z - 1;
                            if (n1 < 0 || n1 > n - 1) continue;
                            const long long dot =
                                d1 * d2 - x * (k[1] - x) - y * (k[2] - y) - z * (k[3] - z);
                            if (dot == 0) continue;
                            BigInt c = BigInt(d1 * d2) * binomial(n - 3, n1 - 1) -
                                       BigInt(d1 * d1) * binomial(n - 3, n1);
                            if (c == 0) continue;
                            BigInt g1 = blowup_p2(d1, x, y, z);
                            if (g1 == 0) continue;
                            BigInt g2 = blowup_p2(d2, k[1] - x, k[2] - y, k[3] - z);
                            if (g2 == 0) continue;
                            total += g1 * g2 * dot * c;
                        }
            }
        }
        std::unique_lock lock(mu_);
        return memo_.emplace(k, total).first->second;
    }

    mutable std::shared_mutex mu_;
    std::map<Key, BigInt> memo_;
    std::map<long long, BigInt> p2_memo_;
};

inline GwEngine& default_gw_engine() {
    static GwEngine engine;
    return engine;
}

inline BigInt gw_p2(long long d) { return default_gw_engine().p2(d); }

inline BigInt gw_blowup_p2(long long d, long long a1 = 0, long long a2 = 0, long long a3 = 0) {
    return default_gw_engine().blowup_p2(d, a1, a2, a3);
}

inline BigInt gw_surface(const SurfaceLattice& s, const ClassVector& D) {
    return default_gw_engine().surface(s, D);
}

}  // namespace pezzo
