#pragma once

#include "pezzo/combine.hpp"
#include "pezzo/error.hpp"
#include "pezzo/fixtures.hpp"
#include "pezzo/floor_diagram.hpp"
#include "pezzo/gw.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <vector>

namespace pezzo {

enum class Kind { GW, W };

// A store space is a surface token (p2 .. qx2t) or a threefold family token (deg8 .. deg6t).
struct Space {
    std::string token;
    std::optional<SurfaceId> surface;
    std::optional<FamilyId> family;

    int rank() const {
        return surface ? pezzo::surface(*surface).rank : pezzo::family(*family).anti_invariant_rank;
    }
    static std::optional<Space> parse(std::string_view tok) {
        if (auto s = surface_from_token(tok)) return Space{std::string(tok), s, std::nullopt};
        if (auto f = family_from_token(tok)) return Space{std::string(tok), std::nullopt, f};
        return std::nullopt;
    }
    static Space of(SurfaceId id) { return {pezzo::surface(id).token, id, std::nullopt}; }
    static Space of(FamilyId id) { return {pezzo::family(id).token, std::nullopt, id}; }
};

struct InvariantKey {
    Kind kind = Kind::W;
    std::string space;
    ClassVector cls;
    int pairs = 0;

    friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
};

inline std::string kind_prefix(Kind k) { return k == Kind::GW ? "gw-" : ""; }

inline std::string describe(const InvariantKey& k) {
    return (k.kind == Kind::GW ? "GW " : "W ") + k.space + " " + k.cls.csv() + " l=" +
           std::to_string(k.pairs);
}

inline Space space_of(const InvariantKey& k) {
    auto s = Space::parse(k.space);
    if (!s) throw DomainError("unknown space '" + k.space + "'");
    return *s;
}

// Representative under the symmetries that preserve every invariant of the space:
// the monodromy T where a vanishing cycle exists, reordering of the blown-up points on the
// plane side, and reordering of the factors of (P1)^3.
inline InvariantKey canonical(InvariantKey k) {
    Space sp = space_of(k);
    if ((int)k.cls.rank() != sp.rank())
        throw DimensionError(k.space + " expects " + std::to_string(sp.rank()) + " coordinates");
    if (k.kind == Kind::GW) k.pairs = 0;
    if (sp.surface) {
        const auto& s = surface(*sp.surface);
        if (s.vanishing_cycle) {
            k.cls = std::min(k.cls, monodromy(s, k.cls));
        } else if (s.rank > 2) {
            auto v = k.cls.coeffs();
            std::sort(v.begin() + 1, v.end(), std::greater<>());
            k.cls = ClassVector(v);
        }
    } else if (*sp.family == FamilyId::Deg6) {
        k.cls = deg6_sorted(k.cls);
    }
    return k;
}

// Canonical plane form of a class on a surface whose blown-up points are all real, for
// W with `pairs` conjugate pairs.  A point of multiplicity one is the same as a real point
// of the configuration placed there, so such points are dropped and, while real points
// remain, empty slots are filled with one before trying a Cremona move at the three
// largest multiplicities.  Moves are applied while they lower the degree.
inline ClassVector plane_reduce(ClassVector p, int pairs = 0) {
    auto drop_simple = [](ClassVector& q) {
        std::array<long long, 3> a{q[1], q[2], q[3]};
        for (auto& x : a)
            if (x == 1) x = 0;
        std::sort(a.begin(), a.end(), std::greater<>());
        q = {q[0], a[0], a[1], a[2]};
    };
    auto valid = [](const ClassVector& q) { return q[0] >= 1 && q[1] >= 0 && q[2] >= 0 && q[3] >= 0; };
    if (!valid(p)) return p;
    drop_simple(p);
    while (true) {
        long long real = 3 * p[0] - p[1] - p[2] - p[3] - 1 - 2LL * pairs;
        ClassVector t = p;
        for (int i = 3; i >= 1 && real > 0; --i)
            if (t[i] == 0) {
                t[i] = 1;
                --real;
            }
        if (t[1] + t[2] + t[3] <= t[0]) break;
        ClassVector q = cremona(t);
        if (!valid(q)) break;
        p = q;
        drop_simple(p);
    }
    return p;
}

struct Rejected {
    int line;
    std::string reason;
};

struct IngestReport {
    std::size_t accepted = 0;
    std::vector<Rejected> rejected;
};

struct StoreOptions {
    std::optional<std::filesystem::path> cache_dir;
    bool load_fixtures = true;

    static StoreOptions from_env() {
        StoreOptions o;
        if (const char* d = std::getenv("PEZZO_CACHE_DIR"); d && *d) o.cache_dir = d;
        return o;
    }
};

class InvariantStore {
public:
    explicit InvariantStore(StoreOptions opts = {}) : opts_(std::move(opts)) {
        if (opts_.load_fixtures) {
            std::istringstream in(kRp2Fixture);
            auto rep = ingest_stream(in, std::nullopt, "fixture", false);
            if (!rep.rejected.empty()) throw ConsistencyError("shipped fixture failed validation");
        }
        if (opts_.cache_dir) load_cache();
    }

    InvariantStore(const InvariantStore&) = delete;
    InvariantStore& operator=(const InvariantStore&) = delete;

    std::optional<BigInt> lookup(const InvariantKey& key) const {
        InvariantKey k = canonical(key);
        std::shared_lock lock(mu_);
        if (auto it = values_.find(k); it != values_.end()) return it->second.value;
        return std::nullopt;
    }

    std::size_t size() const {
        std::shared_lock lock(mu_);
        return values_.size();
    }

    // Insert a value; a different existing value is a conflict and throws.
    void put(const InvariantKey& key, const BigInt& value, const std::string& source = "computed",
             bool persist = true) {
        InvariantKey k = canonical(key);
        std::unique_lock lock(mu_);
        insert_locked(k, value, source, persist);
    }

    BigInt get_or_compute(const InvariantKey& key) {
        InvariantKey k = canonical(key);
        std::promise<BigInt> promise;
        std::shared_future<BigInt> pending;
        {
            std::unique_lock lock(mu_);
            if (auto it = values_.find(k); it != values_.end()) return it->second.value;
            if (auto it = inflight_.find(k); it != inflight_.end()) {
                pending = it->second;
            } else {
                inflight_.emplace(k, promise.get_future().share());
            }
        }
        if (pending.valid()) return pending.get();
        try {
            BigInt v = compute(k);
            {
                std::unique_lock lock(mu_);
                insert_locked(k, v, "computed", true);
                inflight_.erase(k);
            }
            promise.set_value(v);
            return v;
        } catch (...) {
            {
                std::unique_lock lock(mu_);
                inflight_.erase(k);
            }
            promise.set_exception(std::current_exception());
            throw;
        }
    }

    BigInt w(SurfaceId s, const ClassVector& D, int pairs) {
        return get_or_compute({Kind::W, surface(s).token, D, pairs});
    }
    BigInt gw(SurfaceId s, const ClassVector& D) {
        return get_or_compute({Kind::GW, surface(s).token, D, 0});
    }

    // CSV with header "space,c1,...,cK,l,value".  A space token prefixed "gw-" holds GW
    // values, a bare token W values.  When only_space is set, rows of other spaces are rejected.
    // Malformed input throws ParseError before anything is inserted.
    IngestReport ingest_csv(const std::filesystem::path& path,
                            const std::optional<std::string>& only_space = std::nullopt) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open " + path.string());
        return ingest_stream(in, only_space, "ingested:" + path.filename().string(), true);
    }

    IngestReport ingest_stream(std::istream& in, const std::optional<std::string>& only_space,
                               const std::string& source, bool persist) {
        struct Row {
            int line;
            InvariantKey key;
            BigInt value;
        };
        std::vector<Row> rows;
        std::string text;
        int lineno = 0, columns = -1;
        while (std::getline(in, text)) {
            ++lineno;
            if (!text.empty() && text.back() == '\r') text.pop_back();
            if (text.empty() || text[0] == '#') continue;
            auto f = split(text);
            // A header may reappear to start a block of a different rank.
            if (columns < 0 || f[0] == "space") {
                check_header(f, lineno);
                columns = static_cast<int>(f.size());
                continue;
            }
            if (static_cast<int>(f.size()) != columns)
                throw ParseError("expected " + std::to_string(columns) + " fields, got " +
                                     std::to_string(f.size()),
                                 lineno);
            Row r{lineno, {}, 0};
            std::string tok = f[0];
            r.key.kind = Kind::W;
            if (tok.rfind("gw-", 0) == 0) {
                r.key.kind = Kind::GW;
                tok = tok.substr(3);
            }
            auto sp = Space::parse(tok);
            if (!sp) throw ParseError("unknown space '" + f[0] + "'", lineno);
            if (sp->rank() != columns - 3)
                throw ParseError("space " + tok + " has rank " + std::to_string(sp->rank()), lineno);
            r.key.space = tok;
            std::vector<long long> c;
            for (int i = 1; i < columns - 2; ++i) c.push_back(parse_int(f[i], lineno));
            r.key.cls = ClassVector(c);
            long long l = parse_int(f[columns - 2], lineno);
            if (l < 0) throw ParseError("negative pair count", lineno);
            r.key.pairs = static_cast<int>(l);
            if (!parse_bigint(f[columns - 1], r.value))
                throw ParseError("invalid value '" + f[columns - 1] + "'", lineno);
            rows.push_back(std::move(r));
        }
        if (columns < 0) throw ParseError("missing header line");

        IngestReport rep;
        for (auto& r : rows) {
            if (only_space && r.key.space != *only_space) {
                rep.rejected.push_back({r.line, "space " + r.key.space + " is not " + *only_space});
                continue;
            }
            InvariantKey k = canonical(r.key);
            if (auto why = validate(k, r.value)) {
                rep.rejected.push_back({r.line, *why});
                continue;
            }
            std::unique_lock lock(mu_);
            if (auto why = conflict_locked(k, r.value)) {
                rep.rejected.push_back({r.line, *why});
                continue;
            }
            insert_locked(k, r.value, source, persist);
            ++rep.accepted;
        }
        return rep;
    }

    const std::optional<std::filesystem::path>& cache_dir() const { return opts_.cache_dir; }

    // Removes the cache files; in-memory values stay until the store is dropped.
    std::size_t clear_cache() {
        std::unique_lock lock(mu_);
        std::size_t n = 0;
        if (!opts_.cache_dir || !std::filesystem::exists(*opts_.cache_dir)) return 0;
        for (const auto& e : std::filesystem::directory_iterator(*opts_.cache_dir))
            if (e.path().extension() == ".tsv") n += std::filesystem::remove(e.path());
        return n;
    }

    std::map<std::string, std::size_t> counts_by_source() const {
        std::shared_lock lock(mu_);
        std::map<std::string, std::size_t> out;
        for (const auto& [k, e] : values_) ++out[e.source];
        return out;
    }

private:
    struct Entry {
        BigInt value;
        std::string source;
    };

    static std::vector<std::string> split(const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : s) {
            if (ch == ',') {
                out.push_back(cur);
                cur.clear();
            } else if (ch != ' ' && ch != '\t') {
                cur += ch;
            }
        }
        out.push_back(cur);
        return out;
    }

    static long long parse_int(const std::string& s, int line) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(s, &pos);
            if (pos == s.size()) return v;
        } catch (const std::exception&) {
        }
        throw ParseError("invalid integer '" + s + "'", line);
    }

    static void check_header(const std::vector<std::string>& f, int line) {
        bool ok = f.size() >= 4 && f[0] == "space" && f[f.size() - 2] == "l" && f.back() == "value";
        for (std::size_t i = 1; ok && i + 2 < f.size(); ++i) ok = f[i] == "c" + std::to_string(i);
        if (!ok) throw ParseError("header must be space,c1,...,cK,l,value", line);
    }

    // GW value of the same class, when one can be computed without stored data.
    std::optional<BigInt> reference_gw(const InvariantKey& k) const {
        Space sp = space_of(k);
        if (sp.surface) return gw_surface(surface(*sp.surface), k.cls);
        switch (*sp.family) {
            case FamilyId::Deg6T: return gw_threefold(FamilyId::Deg6, ClassVector{k.cls[0], k.cls[0], k.cls[1]});
            default: return gw_threefold(*sp.family, k.cls);
        }
    }

    std::optional<std::string> validate(const InvariantKey& k, const BigInt& v) const {
        std::optional<BigInt> gw;
        try {
            gw = reference_gw(k);
        } catch (const Error&) {
        }
        if (!gw) return std::nullopt;
        if (k.kind == Kind::GW) {
            if (v != *gw) return "GW value differs from computed " + to_string(*gw);
            return std::nullopt;
        }
        if ((v - *gw) % 2 != 0) return "parity: W=" + to_string(v) + " but GW=" + to_string(*gw);
        if (abs(v) > *gw) return "bound: |W| exceeds GW=" + to_string(*gw);
        return std::nullopt;
    }

    std::optional<ClassVector> plane_form(const InvariantKey& k) const {
        if (k.kind != Kind::W) return std::nullopt;
        Space sp = space_of(k);
        if (!sp.surface || surface(*sp.surface).twisted) return std::nullopt;
        return plane_reduce(plane_model(surface(*sp.surface), k.cls), k.pairs);
    }

    std::optional<std::string> conflict_locked(const InvariantKey& k, const BigInt& v) const {
        if (auto it = values_.find(k); it != values_.end() && it->second.value != v)
            return "conflicts with stored value " + to_string(it->second.value) + " (" +
                   it->second.source + ")";
        if (auto p = plane_form(k)) {
            auto it = plane_index_.find({*p, k.pairs});
            if (it != plane_index_.end() && it->second != v)
                return "conflicts with stored value " + to_string(it->second) +
                       " of the equivalent plane class (" + p->csv() + ")";
        }
        return std::nullopt;
    }

    void insert_locked(const InvariantKey& k, const BigInt& v, const std::string& source,
                       bool persist) {
        if (auto it = values_.find(k); it != values_.end()) {
            if (it->second.value != v)
                throw ConsistencyError("conflicting values for " + describe(k));
            return;
        }
        values_.emplace(k, Entry{v, source});
        if (auto p = plane_form(k)) plane_index_.emplace(std::make_pair(*p, k.pairs), v);
        if (persist && opts_.cache_dir) append_cache(k, v, source);
    }

    void append_cache(const InvariantKey& k, const BigInt& v, const std::string& source) {
        std::filesystem::create_directories(*opts_.cache_dir);
        std::ofstream out(*opts_.cache_dir / (k.space + ".tsv"), std::ios::app);
        out << (k.kind == Kind::GW ? "GW" : "W") << '\t' << k.cls.csv() << '\t' << k.pairs << '\t'
            << v << '\t' << source << '\n';
    }

    void load_cache() {
        const auto& dir = *opts_.cache_dir;
        if (!std::filesystem::exists(dir)) return;
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::directory_iterator(dir))
            if (e.path().extension() == ".tsv") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& path : files) {
            std::ifstream in(path);
            std::string line;
            int lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                if (line.empty()) continue;
                std::istringstream ls(line);
                std::string kind, coeffs, pairs, value, source;
                if (!std::getline(ls, kind, '\t') || !std::getline(ls, coeffs, '\t') ||
                    !std::getline(ls, pairs, '\t') || !std::getline(ls, value, '\t'))
                    throw ParseError(path.string() + ": malformed cache line", lineno);
                std::getline(ls, source);
                InvariantKey k;
                k.kind = kind == "GW" ? Kind::GW : Kind::W;
                k.space = path.stem().string();
                std::vector<long long> c;
                for (const auto& t : split(coeffs)) c.push_back(parse_int(t, lineno));
                k.cls = ClassVector(c);
                k.pairs = static_cast<int>(parse_int(pairs, lineno));
                BigInt v;
                if (!parse_bigint(value, v)) throw ParseError(path.string() + ": bad value", lineno);
                k = canonical(k);
                std::unique_lock lock(mu_);
                insert_locked(k, v, source.empty() ? "cache" : source, false);
            }
        }
    }

    BigInt compute(const InvariantKey& k) {
        Space sp = space_of(k);
        if (!sp.surface)
            throw DataUnavailable({describe(k) + " (threefold values come from the combiners)"});
        const auto& s = surface(*sp.surface);
        BigInt g = gw_surface(s, k.cls);
        if (k.kind == Kind::GW) return g;
        if (g == 0) return 0;
        if (g == 1 && genus(s, k.cls) == 0) return 1;
        if (s.twisted) throw DataUnavailable({describe(k)});
        ClassVector p = plane_reduce(plane_model(s, k.cls), k.pairs);
        {
            std::shared_lock lock(mu_);
            if (auto it = plane_index_.find({p, k.pairs}); it != plane_index_.end()) return it->second;
        }
        if (k.pairs != 0) throw DataUnavailable({describe(k)});
        BigInt w = fd_count_real_l0(polygon_of(surface(SurfaceId::P2_3), p));
        if (abs(w) > g || (w - g) % 2 != 0)
            throw ConsistencyError("W violates parity or bound for " + describe(k));
        return w;
    }

    StoreOptions opts_;
    mutable std::shared_mutex mu_;
    std::map<InvariantKey, Entry> values_;
    std::map<std::pair<ClassVector, int>, BigInt> plane_index_;
    std::map<InvariantKey, std::shared_future<BigInt>> inflight_;
};

}  // namespace pezzo
