#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pezzo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct ParityError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct UnsupportedLattice : Error { using Error::Error; };
struct UndefinedSign : Error { using Error::Error; };
struct EvenPairing : Error { using Error::Error; };
struct DegeneratePolygon : Error { using Error::Error; };
struct ConsistencyError : Error { using Error::Error; };

struct ParseError : Error {
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
    int line;
};

// Thrown when W values needed by a computation are neither derivable nor ingested.
struct DataUnavailable : Error {
    explicit DataUnavailable(std::vector<std::string> keys)
        : Error(describe(keys)), missing(std::move(keys)) {}
    std::vector<std::string> missing;

private:
    static std::string describe(const std::vector<std::string>& keys) {
        std::string s = "data unavailable:";
        for (const auto& k : keys) s += " " + k;
        return s;
    }
};

}  // namespace pezzo
