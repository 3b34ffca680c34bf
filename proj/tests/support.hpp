#pragma once

#include "golden.hpp"

#include <pezzo/pezzo.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace support {

using namespace pezzo;

struct PublishedCell {
    FamilyId family;
    ClassVector cls;
    int pairs;
    BigInt value;
};

inline ClassVector cv(const std::vector<long long>& v) { return ClassVector(v); }

inline std::vector<PublishedCell> published_deg7() {
    std::vector<PublishedCell> out;
    for (int d = 1; d <= 9; d += 2)
        for (int k = 0; k <= d; ++k) {
            ClassVector c{d, k};
            auto it = golden::w_deg7().find({d, k});
            for (int l = 0; l <= max_pairs(FamilyId::Deg7, c); ++l)
                out.push_back({FamilyId::Deg7, c, l, it == golden::w_deg7().end() ? 0 : it->second.at(l)});
        }
    return out;
}

inline std::vector<PublishedCell> published_deg6() {
    std::vector<PublishedCell> out;
    for (const auto& [c, col] : golden::w_deg6())
        for (std::size_t l = 0; l < col.size(); ++l)
            out.push_back({FamilyId::Deg6, cv(c), static_cast<int>(l), col[l]});
    return out;
}

inline std::vector<PublishedCell> published_deg6t() {
    std::vector<PublishedCell> out;
    for (const auto& [ac, col] : golden::w_deg6t())
        for (std::size_t l = 0; l < col.size(); ++l)
            out.push_back({FamilyId::Deg6T, ClassVector{ac.first, ac.second}, static_cast<int>(l), col[l]});
    return out;
}

inline std::vector<PublishedCell> published_all() {
    auto out = published_deg7();
    for (auto& c : published_deg6()) out.push_back(c);
    for (auto& c : published_deg6t()) out.push_back(c);
    return out;
}

// Name of the unknown surface value behind a store key: standard-real classes that reduce
// to the same plane class share one unknown.
inline std::string unknown_id(const InvariantKey& key) {
    auto k = canonical(key);
    auto sp = space_of(k);
    if (sp.surface && !surface(*sp.surface).twisted)
        return "plane " + plane_reduce(plane_model(surface(*sp.surface), k.cls), k.pairs).csv() + " l=" +
               std::to_string(k.pairs);
    return describe(k);
}

struct Backsolve {
    std::vector<std::pair<InvariantKey, BigInt>> rows;  // solved surface values
    std::size_t equations_used = 0;
    std::vector<std::string> not_divisible;  // cells whose single unknown has no integer solution
};

// Recovers surface W values from published threefold cells that have exactly one
// unavailable surface value, repeating until nothing new is solved.  Values go into
// `scratch` so later cells can use them.
inline Backsolve backsolve(InvariantStore& scratch, const std::vector<PublishedCell>& cells) {
    Backsolve out;
    std::vector<bool> used(cells.size(), false);
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (used[i]) continue;
            const auto& c = cells[i];
            if (w_vanishes_a_priori(c.family, c.cls)) continue;
            BigInt known = 0;
            std::map<std::string, std::pair<long long, InvariantKey>> unknown;
            for (const auto& t : combiner_terms(c.family, c.cls, c.pairs)) {
                try {
                    known += t.coeff * scratch.get_or_compute(t.key);
                } catch (const DataUnavailable&) {
                    auto& u = unknown.try_emplace(unknown_id(t.key), 0, t.key).first->second;
                    u.first += t.coeff;
                }
            }
            if (unknown.size() != 1) continue;
            auto [coeff, key] = unknown.begin()->second;
            if (coeff == 0) continue;
            BigInt rest = c.value - known;
            if (rest % coeff != 0) {
                out.not_divisible.push_back(describe(key));
                used[i] = true;
                continue;
            }
            BigInt v = rest / coeff;
            scratch.put(key, v, "backsolved", false);
            out.rows.emplace_back(canonical(key), v);
            used[i] = true;
            ++out.equations_used;
            progress = true;
        }
    }
    return out;
}

inline void write_csv(const std::filesystem::path& path,
                      const std::vector<std::pair<InvariantKey, BigInt>>& rows) {
    std::ofstream os(path);
    int rank = -1;
    for (const auto& [k, v] : rows) {
        if (static_cast<int>(k.cls.rank()) != rank) {
            rank = static_cast<int>(k.cls.rank());
            os << "space";
            for (int i = 1; i <= rank; ++i) os << ",c" << i;
            os << ",l,value\n";
        }
        os << (k.kind == Kind::GW ? "gw-" : "") << k.space << ',' << k.cls.csv() << ',' << k.pairs << ','
           << v << '\n';
    }
}

class TempDir {
public:
    TempDir() {
        static std::mt19937_64 rng{std::random_device{}()};
        path_ = std::filesystem::temp_directory_path() / ("pezzo-test-" + std::to_string(rng()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace support
