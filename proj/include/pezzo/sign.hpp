#pragma once

#include "pezzo/bigint.hpp"
#include "pezzo/family.hpp"

#include <string>
#include <vector>

namespace pezzo {

// Z2-valued function on H_1 of the real part, determined by its values on a basis:
//   s(x + y) = s(x) + s(y) + x.y + (w1.x)(w1.y)
class QuasiQuadraticEnhancement {
public:
    QuasiQuadraticEnhancement(std::vector<int> generator_values, std::vector<int> w1,
                              std::vector<std::vector<int>> pairing_mod2)
        : s_(std::move(generator_values)), w1_(std::move(w1)), q_(std::move(pairing_mod2)) {
        const std::size_t n = s_.size();
        if (w1_.size() != n || q_.size() != n) throw DimensionError("enhancement data sizes differ");
        for (std::size_t i = 0; i < n; ++i) {
            if (q_[i].size() != n) throw DimensionError("pairing matrix is not square");
            // s(2x) = 0 forces x.x = w1.x; otherwise the expansion depends on the decomposition.
            if (mod2(q_[i][i]) != mod2(w1_[i]))
                throw DomainError("enhancement data violate x.x = w1.x");
            for (std::size_t j = 0; j < n; ++j)
                if (mod2(q_[i][j]) != mod2(q_[j][i])) throw DomainError("pairing is not symmetric");
        }
    }

    std::size_t rank() const { return s_.size(); }
    const std::vector<int>& generator_values() const { return s_; }
    const std::vector<int>& w1() const { return w1_; }

    int operator()(const std::vector<int>& x) const {
        if (x.size() != rank()) throw DimensionError("vector length differs from enhancement rank");
        int r = 0;
        for (std::size_t i = 0; i < x.size(); ++i) r += mod2(x[i]) * s_[i];
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j)
                r += mod2(x[i]) * mod2(x[j]) * (q_[i][j] + w1_[i] * w1_[j]);
        return mod2(r);
    }

private:
    std::vector<int> s_, w1_;
    std::vector<std::vector<int>> q_;
};

inline int qqe_eval(const QuasiQuadraticEnhancement& e, const std::vector<int>& x) { return e(x); }

struct FamilySignData {
    FamilyId family_id;
    ClassVector ref_class;
    int epsilon_of_L = 0;
    QuasiQuadraticEnhancement enhancement;
    std::vector<int> rho_coords;
};

inline const FamilySignData& sign_data(FamilyId id) {
    static const std::vector<FamilySignData> all = {
        {FamilyId::Deg8, ClassVector{1, 0}, 0,
         QuasiQuadraticEnhancement({0, 1}, {0, 0}, {{0, 1}, {1, 0}}), {0, 1}},
        {FamilyId::Deg7, ClassVector{1, 0, 0}, 0,
         QuasiQuadraticEnhancement({0, 1, 0}, {0, 0, 1}, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), {0, 1, 2}},
        {FamilyId::Deg6, ClassVector{0, 0, 0, -1}, 0,
         QuasiQuadraticEnhancement({1, 1, 1, 0}, {0, 0, 1, 1},
                                   {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
         {0, 1, 2, 3}},
        {FamilyId::Deg6T, ClassVector{0, 0, 0, -1}, 0,
         QuasiQuadraticEnhancement({1, 0}, {1, 1}, {{1, 0}, {0, 1}}), {2, 3}},
    };
    return all[static_cast<std::size_t>(id)];
}

inline std::vector<int> rho(const FamilySignData& f, const ClassVector& D) {
    std::vector<int> r;
    for (int i : f.rho_coords) r.push_back(mod2(D[i]));
    return r;
}

// epsilon(D) = epsilon(L) exactly when D.S and L.S have the same sign.
inline int epsilon(const FamilySignData& f, const ClassVector& D) {
    const auto& s = fiber_surface(family(f.family_id));
    long long ds = dot_vanishing(s, D);
    if (ds == 0) throw UndefinedSign("epsilon is undefined when D.S = 0");
    long long ls = dot_vanishing(s, f.ref_class);
    return ds * ls > 0 ? f.epsilon_of_L : mod2(f.epsilon_of_L + 1);
}

namespace detail {

inline long long half_exact(long long v) { return (v - mod2(v)) / 2; }

}  // namespace detail

// Exponent of -1 carried by the fiber member D in the real combiner.
inline int sign_exponent(FamilyId id, const ClassVector& D) {
    const auto& s = fiber_surface(family(id));
    long long ds = dot_vanishing(s, D);
    if (ds % 2 == 0) throw EvenPairing("sign is only defined for odd D.S");
    switch (id) {
        case FamilyId::Deg8: {
            long long a = D[0], b = D[1];
            return mod2(a > b ? a + 1 : a);
        }
        case FamilyId::Deg7: {
            long long a = D[0], b = D[1], k = D[2];
            long long q = (k + k * k) / 2;
            return mod2(a > b ? a + 1 + q : a + q);
        }
        case FamilyId::Deg6: {
            long long al = D[2], be = D[3];
            long long m = al + be;
            long long h = detail::half_exact(m - 1);
            return mod2(al > be ? al + 1 + h : al + h);
        }
        case FamilyId::Deg6T: {
            long long a = D[0], al = D[2], be = D[3];
            long long c = 2 * a - al - be;
            long long h = detail::half_exact(c - 1);
            return mod2(al > be ? h + al : 1 + h + al);
        }
    }
    return 0;
}

// epsilon + genus + s(rho D): the same exponent assembled from its geometric pieces.
inline int generic_sign_exponent(FamilyId id, const ClassVector& D) {
    const auto& f = sign_data(id);
    const auto& s = fiber_surface(family(id));
    long long ds = dot_vanishing(s, D);
    if (ds % 2 == 0) throw EvenPairing("sign is only defined for odd D.S");
    return mod2(epsilon(f, D) + genus(s, D) + f.enhancement(rho(f, D)));
}

}  // namespace pezzo
