#pragma once

// Command-line front end.  Kept in a header so tests can drive it in-process;
// needs CLI11.hpp on the include path.

#include "pezzo/tables.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace pezzo::cli {

enum ExitCode { kOk = 0, kUsage = 1, kUnavailable = 2 };

inline ClassVector parse_class(const std::string& text) {
    std::vector<long long> c;
    std::string tok;
    auto flush = [&] {
        std::size_t pos = 0;
        long long v = 0;
        bool ok = !tok.empty();
        try {
            v = ok ? std::stoll(tok, &pos) : 0;
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok || pos != tok.size()) throw ParseError("invalid class coordinate '" + tok + "'");
        c.push_back(v);
        tok.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (ch != ' ') {
            tok += ch;
        }
    }
    flush();
    return ClassVector(c);
}

inline FamilyId parse_family(const std::string& tok) {
    if (auto f = family_from_token(tok)) return *f;
    throw ParseError("unknown family '" + tok + "' (deg8, deg7, deg6, deg6t)");
}

inline SurfaceId parse_surface(const std::string& tok) {
    if (auto s = surface_from_token(tok)) return *s;
    throw ParseError("unknown surface '" + tok + "' (p2, p2x1, p2x2, p2x3, q, qx1, qx2, qx2t)");
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Genus-0 GW and Welschinger invariants of del Pezzo threefolds and surfaces", "pezzo"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cache_dir;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--cache-dir", cache_dir, "Cache directory (default: $PEZZO_CACHE_DIR)");
    app.add_option("--jobs", jobs, "Worker threads for tables")->check(CLI::PositiveNumber);

    std::string fam, surf, cls, format = "md", table_name, file, action = "info";
    int pairs = 0, max_sum = 12, max_d = 9, max_a = 5, max_part = 0;
    bool dump = false, generic = false;

    auto* gw3 = app.add_subcommand("gw3", "GW invariant of a threefold class");
    gw3->add_option("--family", fam, "deg8 | deg7 | deg6 | deg6t")->required();
    gw3->add_option("--class", cls, "comma-separated class, e.g. 3,3,3")->required();

    auto* gw2 = app.add_subcommand("gw2", "GW invariant of a surface class");
    gw2->add_option("--surface", surf, "p2 | p2x1 | p2x2 | p2x3 | q | qx1 | qx2 | qx2t")->required();
    gw2->add_option("--class", cls, "comma-separated class")->required();
    gw2->add_flag("--dump-diagrams", dump, "Write the marked floor diagrams to stderr");

    auto* w3 = app.add_subcommand("w3", "Welschinger invariant of a threefold class");
    w3->add_option("--family", fam)->required();
    w3->add_option("--class", cls)->required();
    w3->add_option("--pairs", pairs, "number l of complex conjugate point pairs")->required();
    w3->add_flag("--generic", generic, "Sum over the whole fiber instead of the reduced half");

    auto* w2 = app.add_subcommand("w2", "Welschinger invariant of a surface class");
    w2->add_option("--surface", surf)->required();
    w2->add_option("--class", cls)->required();
    w2->add_option("--pairs", pairs)->required();
    w2->add_flag("--dump-diagrams", dump, "Write the marked floor diagrams to stderr (l = 0)");

    auto* table = app.add_subcommand("table", "Print a table of invariants");
    table->add_option("name", table_name, "gw-deg6 | w-deg7 | w-deg6 | w-deg6t")->required();
    table->add_option("--max-sum", max_sum, "largest a+b+c (gw-deg6, w-deg6)");
    table->add_option("--max-d", max_d, "largest d (w-deg7)");
    table->add_option("--max-a", max_a, "largest a (w-deg6t)");
    table->add_option("--max-part", max_part, "largest coordinate (gw-deg6, w-deg6)");
    table->add_option("--format", format, "md | csv")->check(CLI::IsMember({"md", "csv"}));

    auto* ingest = app.add_subcommand("ingest", "Validate and store a CSV table");
    ingest->add_option("--surface", surf, "space token the rows must carry")->required();
    ingest->add_option("--file", file)->required()->check(CLI::ExistingFile);

    auto* cache = app.add_subcommand("cache", "Inspect or clear the cache directory");
    cache->add_option("action", action, "info | clear")->check(CLI::IsMember({"info", "clear"}));

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        StoreOptions opts = StoreOptions::from_env();
        if (!cache_dir.empty()) opts.cache_dir = cache_dir;
        InvariantStore store(opts);

        if (*gw3) {
            FamilyId f = parse_family(fam);
            ClassVector d = parse_class(cls);
            check_rank(family(f), d);
            if (f == FamilyId::Deg6T) {
                out << gw_threefold(FamilyId::Deg6, ClassVector{d[0], d[0], d[1]}) << '\n';
            } else {
                out << gw_threefold(f, d) << '\n';
            }
        } else if (*gw2 || *w2) {
            SurfaceId s = parse_surface(surf);
            ClassVector D = parse_class(cls);
            check_rank(surface(s), D);
            if (dump) {
                try {
                    dump_floor_diagrams(polygon_of(surface(s), D), err);
                } catch (const DegeneratePolygon& e) {
                    err << "no diagrams: " << e.what() << '\n';
                }
            }
            out << (*gw2 ? store.gw(s, D) : store.w(s, D, pairs)) << '\n';
        } else if (*w3) {
            FamilyId f = parse_family(fam);
            out << w_threefold(store, {f, parse_class(cls), pairs},
                               generic ? CombineMode::Generic : CombineMode::Reduced)
                << '\n';
        } else if (*table) {
            TableOptions o;
            o.name = table_name;
            o.max_sum = max_sum;
            o.max_d = max_d;
            o.max_a = max_a;
            if (max_part > 0) o.max_part = max_part;
            o.csv = format == "csv";
            o.jobs = jobs;
            auto res = make_table(store, o);
            out << res.text;
            if (res.incomplete) {
                err << "some cells need surface data that is not available (shown as ?)\n";
                return kUnavailable;
            }
        } else if (*ingest) {
            std::string space = surf.rfind("gw-", 0) == 0 ? surf.substr(3) : surf;
            if (!Space::parse(space)) throw ParseError("unknown space '" + surf + "'");
            auto rep = store.ingest_csv(file, space);
            out << "accepted " << rep.accepted << " row(s), rejected " << rep.rejected.size() << '\n';
            for (const auto& r : rep.rejected) out << "line " << r.line << ": " << r.reason << '\n';
            if (!store.cache_dir())
                err << "no cache directory set; the rows were validated but not persisted\n";
            if (!rep.rejected.empty()) return kUsage;
        } else if (*cache) {
            if (!store.cache_dir()) {
                err << "no cache directory (use --cache-dir or PEZZO_CACHE_DIR)\n";
                return kUsage;
            }
            if (action == "clear") {
                out << "removed " << store.clear_cache() << " file(s)\n";
            } else {
                out << "cache directory: " << store.cache_dir()->string() << '\n';
                for (const auto& [src, n] : store.counts_by_source()) out << src << ": " << n << '\n';
            }
        }
    } catch (const DataUnavailable& e) {
        err << e.what() << '\n';
        return kUnavailable;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace pezzo::cli
