#pragma once

#include "pezzo/welschinger.hpp"

#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace pezzo {

struct TableOptions {
    std::string name;  // gw-deg6, w-deg7, w-deg6, w-deg6t
    int max_sum = 12;
    int max_d = 9;
    int max_a = 5;
    std::optional<int> max_part;
    bool csv = false;
    unsigned jobs = 1;
};

struct TableResult {
    std::string text;
    bool incomplete = false;  // some cell needed unavailable data
};

// Runs f(0..n-1) on up to `jobs` threads; results land at their own index.
template <class T>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, const std::function<T(std::size_t)>& f) {
    std::vector<T> out(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < n;) {
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

namespace detail {

struct Cell {
    enum State { Value, Blank, Missing } state = Blank;
    BigInt value;
    std::string text() const {
        if (state == Value) return to_string(value);
        return state == Missing ? "?" : "";
    }
};

inline Cell w_cell(InvariantStore& store, FamilyId id, const ClassVector& d, int l) {
    Cell c;
    if (l > max_pairs(id, d)) return c;
    try {
        c.value = w_threefold(store, {id, d, l});
        c.state = Cell::Value;
    } catch (const DataUnavailable&) {
        c.state = Cell::Missing;
    }
    return c;
}

inline std::string csv_header(int rank) {
    std::string h = "space";
    for (int i = 1; i <= rank; ++i) h += ",c" + std::to_string(i);
    return h + ",l,value\n";
}

// A grid of W values: one column per class, one row per l.
struct Grid {
    std::string title;
    FamilyId family;
    std::vector<ClassVector> columns;
};

inline TableResult render_grids(InvariantStore& store, const std::vector<Grid>& grids,
                                const TableOptions& opt) {
    struct Job {
        std::size_t grid, col;
        int l;
    };
    std::vector<Job> jobs;
    std::vector<int> rows(grids.size(), 0);
    for (std::size_t g = 0; g < grids.size(); ++g) {
        for (std::size_t c = 0; c < grids[g].columns.size(); ++c) {
            int top = static_cast<int>(max_pairs(grids[g].family, grids[g].columns[c]));
            rows[g] = std::max(rows[g], top + 1);
            for (int l = 0; l <= top; ++l) jobs.push_back({g, c, l});
        }
    }
    auto cells = parallel_map<Cell>(jobs.size(), opt.jobs, [&](std::size_t i) {
        const auto& j = jobs[i];
        return w_cell(store, grids[j.grid].family, grids[j.grid].columns[j.col], j.l);
    });
    std::map<std::tuple<std::size_t, std::size_t, int>, Cell> at;
    TableResult res;
    std::vector<std::pair<WelschingerQuery, BigInt>> computed;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        at[{jobs[i].grid, jobs[i].col, jobs[i].l}] = cells[i];
        if (cells[i].state == Cell::Missing) res.incomplete = true;
        if (cells[i].state == Cell::Value)
            computed.push_back({{grids[jobs[i].grid].family, grids[jobs[i].grid].columns[jobs[i].col], jobs[i].l},
                                cells[i].value});
    }
    std::ostringstream os;
    if (opt.csv) {
        int rank = grids.empty() ? 1 : family(grids[0].family).anti_invariant_rank;
        os << csv_header(rank);
        for (std::size_t g = 0; g < grids.size(); ++g)
            for (std::size_t c = 0; c < grids[g].columns.size(); ++c)
                for (int l = 0; l < rows[g]; ++l) {
                    auto it = at.find({g, c, l});
                    if (it == at.end() || it->second.state != Cell::Value) continue;
                    os << family(grids[g].family).token << ',' << grids[g].columns[c].csv() << ','
                       << l << ',' << it->second.value << '\n';
                }
    } else {
        for (std::size_t g = 0; g < grids.size(); ++g) {
            const auto& f = family(grids[g].family);
            if (g) os << '\n';
            os << "### " << grids[g].title << "\n\n| l |";
            for (const auto& c : grids[g].columns) os << ' ' << format_class(f, c) << " |";
            os << "\n|---|";
            for (std::size_t c = 0; c < grids[g].columns.size(); ++c) os << "---:|";
            os << '\n';
            for (int l = 0; l < rows[g]; ++l) {
                os << "| " << l << " |";
                for (std::size_t c = 0; c < grids[g].columns.size(); ++c) {
                    auto it = at.find({g, c, l});
                    std::string t = it == at.end() ? "" : it->second.text();
                    os << (t.empty() ? "" : " " + t) << " |";
                }
                os << '\n';
            }
        }
    }
    if (!grids.empty() && grids[0].family == FamilyId::Deg6) {
        auto neg = positivity_report(computed);
        std::string line = neg.empty() ? "no negative values among " + std::to_string(computed.size()) + " computed cells"
                                       : std::to_string(neg.size()) + " negative value(s):";
        for (const auto& v : neg)
            line += " (" + v.cls.csv() + ") l=" + std::to_string(v.pairs) + " " + to_string(v.value) + ";";
        os << (opt.csv ? "# positivity: " : "\npositivity: ") << line << '\n';
    }
    res.text = os.str();
    return res;
}

inline TableResult gw_deg6_table(InvariantStore& store, const TableOptions& opt) {
    std::vector<ClassVector> classes;
    for (int a = 0; a <= opt.max_sum; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c) {
                if (a + b + c == 0 || a + b + c > opt.max_sum) continue;
                if (opt.max_part && a > *opt.max_part) continue;
                ClassVector d{a, b, c};
                if (!gw_vanishes_a_priori(FamilyId::Deg6, d)) classes.push_back(d);
            }
    std::sort(classes.begin(), classes.end());
    const auto& s = surface(SurfaceId::Q_2);
    struct Row {
        ClassVector cls;
        BigInt gw;
        std::vector<std::tuple<ClassVector, long long, BigInt>> members;
    };
    auto rows = parallel_map<Row>(classes.size(), opt.jobs, [&](std::size_t i) {
        Row r{classes[i], gw_threefold(FamilyId::Deg6, classes[i]), {}};
        for (const auto& D : fiber_effective(family(FamilyId::Deg6), classes[i])) {
            if (!(D[2] < D[3])) continue;
            r.members.emplace_back(D, std::abs(dot_vanishing(s, D)), store.gw(SurfaceId::Q_2, D));
        }
        return r;
    });
    std::ostringstream os;
    if (opt.csv) {
        os << csv_header(3);
        for (const auto& r : rows) os << "gw-deg6," << r.cls.csv() << ",0," << r.gw << '\n';
        os << csv_header(4);
        for (const auto& r : rows)
            for (const auto& [D, ds, g] : r.members) os << "gw-qx2," << D.csv() << ",0," << g << '\n';
    } else {
        os << "| d | GW(d) | D | \\|D.S\\| | GW(D) |\n|---|---:|---|---:|---:|\n";
        for (const auto& r : rows) {
            bool first = true;
            for (const auto& [D, ds, g] : r.members) {
                if (first)
                    os << "| (" << r.cls.csv() << ") | " << r.gw << " | ";
                else
                    os << "| | | ";
                os << format_class(s, D) << " | " << ds << " | " << g << " |\n";
                first = false;
            }
            if (first) os << "| (" << r.cls.csv() << ") | " << r.gw << " | | | |\n";
        }
    }
    return {os.str(), false};
}

}  // namespace detail

inline TableResult make_table(InvariantStore& store, const TableOptions& opt) {
    using detail::Grid;
    if (opt.name == "gw-deg6") return detail::gw_deg6_table(store, opt);
    std::vector<Grid> grids;
    if (opt.name == "w-deg7") {
        for (int d = 1; d <= opt.max_d; d += 2) {
            Grid g{"d = " + std::to_string(d), FamilyId::Deg7, {}};
            for (int k = 0; k <= d; ++k) g.columns.push_back(ClassVector{d, k});
            grids.push_back(std::move(g));
        }
    } else if (opt.name == "w-deg6") {
        for (int sum = 1; sum <= opt.max_sum; sum += 2) {
            Grid g{"a+b+c = " + std::to_string(sum), FamilyId::Deg6, {}};
            for (int a = 0; a <= sum; ++a)
                for (int b = 0; b <= a; ++b) {
                    int c = sum - a - b;
                    if (c < 0 || c > b) continue;
                    if (opt.max_part && a > *opt.max_part) continue;
                    ClassVector d{a, b, c};
                    if (!w_vanishes_a_priori(FamilyId::Deg6, d)) g.columns.push_back(d);
                }
            if (!g.columns.empty()) grids.push_back(std::move(g));
        }
    } else if (opt.name == "w-deg6t") {
        for (int a = 1; a <= opt.max_a; ++a) {
            Grid g{"a = " + std::to_string(a), FamilyId::Deg6T, {}};
            for (int c = 1; c <= 2 * a; c += 2) g.columns.push_back(ClassVector{a, c});
            grids.push_back(std::move(g));
        }
    } else {
        throw DomainError("unknown table '" + opt.name + "' (gw-deg6, w-deg7, w-deg6, w-deg6t)");
    }
    return detail::render_grids(store, grids, opt);
}

}  // namespace pezzo
