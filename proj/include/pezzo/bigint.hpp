#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace pezzo {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

// Strict decimal parse: optional sign, then digits only.
inline bool parse_bigint(std::string_view s, BigInt& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return false;
    out = BigInt(std::string(s.substr(i)));
    if (s[0] == '-') out = -out;
    return true;
}

// Pascal triangle grown on demand; rows are never invalidated once built.
class Binomials {
public:
    BigInt operator()(long long n, long long k) {
        if (n < 0 || k < 0 || k > n) return 0;
        {
            std::shared_lock lock(mu_);
            if (n < static_cast<long long>(rows_.size())) return rows_[n][k];
        }
        std::unique_lock lock(mu_);
        while (static_cast<long long>(rows_.size()) <= n) {
            std::vector<BigInt> row(rows_.size() + 1, BigInt(1));
            if (!rows_.empty()) {
                const auto& prev = rows_.back();
                for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
            }
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    std::shared_mutex mu_;
    std::vector<std::vector<BigInt>> rows_;
};

inline BigInt binomial(long long n, long long k) {
    static Binomials table;
    return table(n, k);
}

inline int mod2(long long v) { return static_cast<int>(((v % 2) + 2) % 2); }

}  // namespace pezzo
