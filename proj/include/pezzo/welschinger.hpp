#pragma once

#include "pezzo/combine.hpp"
#include "pezzo/sign.hpp"
#include "pezzo/store.hpp"

#include <string>
#include <vector>

namespace pezzo {

struct WelschingerQuery {
    FamilyId family_id;
    ClassVector cls;
    int pairs = 0;
};

// Reduced: one member of each {D, T(D)} pair, the one on the a < b (resp. al < be) side.
// Generic: half the sum over the whole fiber.  The two must agree.
enum class CombineMode { Reduced, Generic };

inline long long max_pairs(FamilyId id, const ClassVector& d) {
    return (constraint_count(family(id), d) - 1) / 2;
}

// The stored surface class for a fiber member.
inline InvariantKey surface_w_key(FamilyId id, const ClassVector& D, int pairs) {
    const auto& f = family(id);
    if (id == FamilyId::Deg6T) return {Kind::W, "qx2t", ClassVector{D[0], D[2], D[3]}, pairs};
    return {Kind::W, surface(f.surface).token, D, pairs};
}

namespace detail {

inline bool lower_half(FamilyId id, const ClassVector& D) {
    if (id == FamilyId::Deg8 || id == FamilyId::Deg7) return D[0] < D[1];
    return D[2] < D[3];
}

}  // namespace detail

// One summand of the real combiner: coeff * W(key), coeff = (-1)^sign |D.S|.
struct CombinerTerm {
    ClassVector member;
    InvariantKey key;
    long long coeff;
};

inline std::vector<CombinerTerm> combiner_terms(FamilyId id, const ClassVector& cls, int pairs,
                                                CombineMode mode = CombineMode::Reduced) {
    const auto& f = family(id);
    ClassVector d = cls;
    if (id == FamilyId::Deg6 && mode == CombineMode::Reduced) d = deg6_sorted(d);
    const auto& s = fiber_surface(f);
    std::vector<CombinerTerm> out;
    for (const auto& D : fiber(f, d)) {
        if (mode == CombineMode::Reduced && !detail::lower_half(id, D)) continue;
        long long ds = dot_vanishing(s, D);
        if (ds == 0) continue;
        long long mag = ds < 0 ? -ds : ds;
        out.push_back({D, surface_w_key(id, D, pairs), sign_exponent(id, D) ? -mag : mag});
    }
    return out;
}

inline BigInt w_threefold(InvariantStore& store, const WelschingerQuery& q,
                          CombineMode mode = CombineMode::Reduced) {
    const auto& f = family(q.family_id);
    check_rank(f, q.cls);
    if (q.pairs < 0 || q.pairs > max_pairs(q.family_id, q.cls))
        throw DomainError("l=" + std::to_string(q.pairs) + " out of range 0.." +
                          std::to_string(max_pairs(q.family_id, q.cls)) + " for " +
                          format_class(f, q.cls));
    if (w_vanishes_a_priori(q.family_id, q.cls)) return 0;

    BigInt total = 0;
    std::vector<std::string> missing;
    for (const auto& t : combiner_terms(q.family_id, q.cls, q.pairs, mode)) {
        try {
            total += t.coeff * store.get_or_compute(t.key);
        } catch (const DataUnavailable& e) {
            missing.insert(missing.end(), e.missing.begin(), e.missing.end());
        }
    }
    if (!missing.empty()) throw DataUnavailable(missing);
    if (mode == CombineMode::Generic) {
        if (total % 2 != 0) throw ConsistencyError("odd generic sum for " + format_class(f, q.cls));
        total /= 2;
    }
    return total;
}

// Classes of (P1)^3 where a computed real invariant came out negative.
struct PositivityViolation {
    ClassVector cls;
    int pairs;
    BigInt value;
};

inline std::vector<PositivityViolation> positivity_report(
    const std::vector<std::pair<WelschingerQuery, BigInt>>& values) {
    std::vector<PositivityViolation> out;
    for (const auto& [q, v] : values)
        if (q.family_id == FamilyId::Deg6 && v < 0) out.push_back({q.cls, q.pairs, v});
    return out;
}

}  // namespace pezzo
