#pragma once

#include "pezzo/bigint.hpp"
#include "pezzo/lattice.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pezzo {

struct LatticePoint {
    long long x = 0, y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Newton polygon of a class on a toric surface with its standard real structure.
struct PolygonClass {
    SurfaceId surface_id;
    ClassVector cls;
    std::vector<LatticePoint> polygon;  // counter-clockwise, no repeated vertices
};

namespace detail {

inline std::vector<LatticePoint> dedupe_cycle(std::vector<LatticePoint> v) {
    std::vector<LatticePoint> out;
    for (const auto& p : v)
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

}  // namespace detail

// P2 side: triangle of size d with corners (0,0), (d,0), (0,d) cut by a1, a2, a3.
// P1xP1 side: a x b rectangle with corner (0,0) cut by the first exceptional
// multiplicity and the opposite corner (a,b) cut by the second.
inline PolygonClass polygon_of(const SurfaceLattice& s, const ClassVector& D) {
    check_rank(s, D);
    if (s.twisted) throw UnsupportedLattice("the twisted real structure has no toric polygon");
    auto reject = [&](const std::string& why) {
        throw DegeneratePolygon(format_class(s, D) + ": " + why);
    };
    std::vector<LatticePoint> v;
    if (s.plane_side) {
        long long d = D[0];
        long long a[3] = {0, 0, 0};
        for (int i = 1; i < s.rank; ++i) a[i - 1] = D[i];
        if (d < 1) reject("degree must be positive");
        for (long long x : a)
            if (x < 0) reject("negative corner cut");
        if (a[0] + a[1] > d || a[0] + a[2] > d || a[1] + a[2] > d) reject("overlapping cuts");
        v = {{a[0], 0}, {d - a[1], 0}, {d - a[1], a[1]}, {a[2], d - a[2]}, {0, d - a[2]}, {0, a[0]}};
    } else {
        long long a = D[0], b = D[1];
        long long al = s.rank > 2 ? D[2] : 0, be = s.rank > 3 ? D[3] : 0;
        if (a < 0 || b < 0 || a + b == 0) reject("not an effective bidegree");
        long long lim = std::min(a, b);
        if (al < 0 || be < 0) reject("negative corner cut");
        if (al > lim || be > lim) reject("overlapping cuts");
        v = {{al, 0}, {a, 0}, {a, b - be}, {a - be, b}, {0, b}, {0, al}};
    }
    return {s.id, D, detail::dedupe_cycle(std::move(v))};
}

// Horizontal slicing of an h-transverse polygon: widths on the bottom and top edges and
// the horizontal moves of the left and right boundaries across each unit strip.
struct Strips {
    std::vector<long long> dl, dr;
    long long bottom = 0, top = 0;
    int height() const { return static_cast<int>(dl.size()); }
};

namespace detail {

inline std::pair<long long, long long> slice(const std::vector<LatticePoint>& poly, long long y) {
    long long lo = 0, hi = 0;
    bool any = false;
    auto add = [&](long long x) {
        if (!any) lo = hi = x;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
        any = true;
    };
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        if (p.y == q.y) {
            if (p.y == y) {
                add(p.x);
                add(q.x);
            }
        } else if (std::min(p.y, q.y) <= y && y <= std::max(p.y, q.y)) {
            long long num = (q.x - p.x) * (y - p.y);
            if (num % (q.y - p.y) != 0) throw DegeneratePolygon("polygon is not h-transverse");
            add(p.x + num / (q.y - p.y));
        }
    }
    return {lo, hi};
}

// The three unimodular maps sending one of the directions (1,0), (0,1), (1,-1) to horizontal.
inline std::vector<LatticePoint> orient(const std::vector<LatticePoint>& poly, int which) {
    std::vector<LatticePoint> out;
    for (const auto& p : poly) {
        switch (which) {
            case 0: out.push_back(p); break;
            case 1: out.push_back({p.y, p.x}); break;
            default: out.push_back({p.x, p.x + p.y}); break;
        }
    }
    return out;
}

inline Strips strips_of(const std::vector<LatticePoint>& poly) {
    long long y0 = poly[0].y, y1 = poly[0].y;
    for (const auto& p : poly) {
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    Strips s;
    auto prev = slice(poly, y0);
    s.bottom = prev.second - prev.first;
    for (long long y = y0 + 1; y <= y1; ++y) {
        auto cur = slice(poly, y);
        s.dl.push_back(cur.first - prev.first);
        s.dr.push_back(cur.second - prev.second);
        prev = cur;
    }
    s.top = prev.second - prev.first;
    return s;
}

inline long long height_of(const std::vector<LatticePoint>& poly) {
    auto [lo, hi] = std::minmax_element(poly.begin(), poly.end(),
                                        [](const auto& p, const auto& q) { return p.y < q.y; });
    return hi->y - lo->y;
}

inline bool is_segment(const std::vector<LatticePoint>& poly) {
    if (poly.size() <= 2) return true;
    for (std::size_t i = 2; i < poly.size(); ++i) {
        long long cross = (poly[1].x - poly[0].x) * (poly[i].y - poly[0].y) -
                          (poly[1].y - poly[0].y) * (poly[i].x - poly[0].x);
        if (cross != 0) return false;
    }
    return true;
}

inline long long lattice_length(const std::vector<LatticePoint>& poly) {
    long long len = 0;
    for (const auto& p : poly)
        for (const auto& q : poly)
            len = std::max(len, std::gcd(std::abs(p.x - q.x), std::abs(p.y - q.y)));
    return len;
}

}  // namespace detail

// Strips in the orientation of minimal height (fewest floors).  which < 0 picks automatically.
inline Strips strips(const PolygonClass& pc, int which = -1) {
    if (which < 0) {
        which = 0;
        long long best = detail::height_of(pc.polygon);
        for (int w = 1; w < 3; ++w) {
            long long h = detail::height_of(detail::orient(pc.polygon, w));
            if (h < best) {
                best = h;
                which = w;
            }
        }
    }
    return detail::strips_of(detail::orient(pc.polygon, which));
}

enum class Multiplicity { Complex, RealL0 };

inline BigInt edge_multiplicity(Multiplicity m, long long w) {
    if (m == Multiplicity::Complex) return BigInt(w) * w;
    return w % 2 ? 1 : 0;
}

// Sweep over the marked points bottom to top.  Floors are placed in marking order and
// carry one (left move, right move) pair each; bounded edges hang open below the sweep
// line until a later floor absorbs them.  Components of the partial diagram are tracked
// up to isomorphism and merged states are counted with multiplicity.
class FloorCounter {
public:
    FloorCounter(const Strips& s, Multiplicity mode) : mode_(mode), h_(s.height()) {
        auto tally = [](const std::vector<long long>& v, std::vector<long long>& vals,
                        std::vector<int>& cnt) {
            std::map<long long, int> m;
            for (long long x : v) ++m[x];
            for (auto [val, c] : m) {
                vals.push_back(val);
                cnt.push_back(c);
            }
        };
        State st;
        tally(s.dl, dl_vals_, st.dl);
        tally(s.dr, dr_vals_, st.dr);
        st.rb = static_cast<int>(s.bottom);
        st.trem = static_cast<int>(s.top);
        start_ = std::move(st);
    }

    BigInt count() {
        if (h_ == 0) return 0;
        return go(start_);
    }

    std::size_t states_visited() const { return memo_.size(); }

private:
    struct Comp {
        std::vector<std::vector<int>> groups;  // open unmarked edges, grouped by source floor
        std::vector<int> marked;               // open edges already carrying their point
        bool closed() const { return groups.empty() && marked.empty(); }
        std::size_t open() const {
            std::size_t n = marked.size();
            for (const auto& g : groups) n += g.size();
            return n;
        }
        friend auto operator<=>(const Comp&, const Comp&) = default;
    };

    struct State {
        std::vector<int> dl, dr;
        int rb = 0, pb = 0, trem = 0, k = 0;
        std::vector<int> tops;
        std::vector<Comp> comps;
    };

    using Key = std::vector<int>;
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return boost::hash_range(k.begin(), k.end()); }
    };

    static Key encode(const State& s) {
        Key k;
        k.insert(k.end(), s.dl.begin(), s.dl.end());
        k.push_back(-1);
        k.insert(k.end(), s.dr.begin(), s.dr.end());
        k.insert(k.end(), {-1, s.rb, s.pb, s.trem, s.k, -1});
        k.insert(k.end(), s.tops.begin(), s.tops.end());
        for (const auto& c : s.comps) {
            k.push_back(-2);
            for (const auto& g : c.groups) {
                k.insert(k.end(), g.begin(), g.end());
                k.push_back(-3);
            }
            k.push_back(-4);
            k.insert(k.end(), c.marked.begin(), c.marked.end());
        }
        return k;
    }

    const std::vector<std::vector<int>>& partitions(int n) {
        auto it = parts_.find(n);
        if (it != parts_.end()) return it->second;
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int left, int maxp) {
            if (left == 0) {
                out.emplace_back(cur.rbegin(), cur.rend());
                return;
            }
            for (int p = std::min(left, maxp); p >= 1; --p) {
                cur.push_back(p);
                rec(left - p, p);
                cur.pop_back();
            }
        };
        rec(n, n);
        return parts_.emplace(n, std::move(out)).first->second;
    }

    BigInt go(const State& st) {
        const bool at_top = st.k == h_;
        if (at_top && st.rb == 0 && st.pb == 0 && st.trem == 0 && st.tops.empty())
            return st.comps.size() == 1 && st.comps[0].closed() ? 1 : 0;
        for (const auto& c : st.comps) {
            if (c.closed() && !(at_top && st.comps.size() == 1)) return 0;
            if (c.open() > static_cast<std::size_t>(h_ - st.k)) return 0;
        }
        if (at_top && (st.rb > 0 || st.pb > 0 || st.trem > 0)) return 0;

        Key key = encode(st);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        BigInt total = 0;
        if (st.rb > 0) {
            State n = st;
            --n.rb;
            ++n.pb;
            total += go(n);
        }
        for (std::size_t i = 0; i < st.tops.size(); ++i) {
            if (i > 0 && st.tops[i] == st.tops[i - 1]) continue;
            long long mult = std::count(st.tops.begin(), st.tops.end(), st.tops[i]);
            State n = st;
            if (--n.tops[i] == 0) n.tops.erase(n.tops.begin() + i);
            std::sort(n.tops.begin(), n.tops.end());
            total += mult * go(n);
        }
        for (std::size_t ci = 0; ci < st.comps.size(); ++ci) {
            if (ci > 0 && st.comps[ci] == st.comps[ci - 1]) continue;
            const Comp& c = st.comps[ci];
            long long cm = std::count(st.comps.begin(), st.comps.end(), c);
            for (std::size_t gi = 0; gi < c.groups.size(); ++gi) {
                if (gi > 0 && c.groups[gi] == c.groups[gi - 1]) continue;
                const auto& g = c.groups[gi];
                long long gm = std::count(c.groups.begin(), c.groups.end(), g);
                for (std::size_t wi = 0; wi < g.size(); ++wi) {
                    if (wi > 0 && g[wi] == g[wi - 1]) continue;
                    Comp nc = c;
                    auto& ng = nc.groups[gi];
                    ng.erase(ng.begin() + wi);
                    if (ng.empty()) nc.groups.erase(nc.groups.begin() + gi);
                    std::sort(nc.groups.begin(), nc.groups.end());
                    nc.marked.push_back(g[wi]);
                    std::sort(nc.marked.begin(), nc.marked.end());
                    State n = st;
                    n.comps[ci] = std::move(nc);
                    std::sort(n.comps.begin(), n.comps.end());
                    total += cm * gm * go(n);
                }
            }
        }
        if (!at_top) total += place_floor(st);
        return memo_.emplace(std::move(key), total).first->second;
    }

    BigInt place_floor(const State& st) {
        BigInt total = 0;
        for (std::size_t li = 0; li < st.dl.size(); ++li) {
            if (st.dl[li] == 0) continue;
            for (std::size_t ri = 0; ri < st.dr.size(); ++ri) {
                if (st.dr[ri] == 0) continue;
                State base = st;
                --base.dl[li];
                --base.dr[ri];
                ++base.k;
                const long long div = dl_vals_[li] - dr_vals_[ri];
                Absorb acc;
                absorb(st, base, div, 0, acc, total);
            }
        }
        return total;
    }

    struct Absorb {
        long long weight = 0;
        BigInt mult = 1;
        std::vector<Comp> kept;
        std::vector<std::vector<int>> groups;
        std::vector<int> marked;
    };

    // Each component below may hand at most one marked edge to the new floor.
    void absorb(const State& st, const State& base, long long div, std::size_t ci, Absorb& acc,
                BigInt& total) {
        if (ci == st.comps.size()) {
            finish_floor(st, base, div, acc, total);
            return;
        }
        const Comp& c = st.comps[ci];
        acc.kept.push_back(c);
        absorb(st, base, div, ci + 1, acc, total);
        acc.kept.pop_back();
        for (std::size_t i = 0; i < c.marked.size(); ++i) {
            if (i > 0 && c.marked[i] == c.marked[i - 1]) continue;
            int w = c.marked[i];
            long long cnt = std::count(c.marked.begin(), c.marked.end(), w);
            Absorb next = acc;
            next.weight += w;
            next.mult *= cnt;
            next.groups.insert(next.groups.end(), c.groups.begin(), c.groups.end());
            next.marked.insert(next.marked.end(), c.marked.begin(), c.marked.end());
            next.marked.erase(std::find(next.marked.begin(), next.marked.end(), w));
            absorb(st, base, div, ci + 1, next, total);
        }
    }

    void finish_floor(const State& st, const State& base, long long div, const Absorb& acc,
                      BigInt& total) {
        for (int j = 0; j <= st.pb; ++j) {
            const long long out = j + acc.weight - div;
            if (out < 0) continue;
            for (long long t = 0; t <= std::min<long long>(st.trem, out); ++t) {
                for (const auto& part : partitions(static_cast<int>(out - t))) {
                    BigInt f = acc.mult * binomial(st.pb, j);
                    for (int w : part) f *= edge_multiplicity(mode_, w);
                    if (f == 0) continue;
                    Comp nc;
                    nc.groups = acc.groups;
                    if (!part.empty()) nc.groups.push_back(part);
                    std::sort(nc.groups.begin(), nc.groups.end());
                    nc.marked = acc.marked;
                    std::sort(nc.marked.begin(), nc.marked.end());
                    State n = base;
                    n.pb = st.pb - j;
                    n.trem = static_cast<int>(st.trem - t);
                    if (t > 0) {
                        n.tops.push_back(static_cast<int>(t));
                        std::sort(n.tops.begin(), n.tops.end());
                    }
                    n.comps = acc.kept;
                    n.comps.push_back(std::move(nc));
                    std::sort(n.comps.begin(), n.comps.end());
                    total += f * go(n);
                }
            }
        }
    }

    Multiplicity mode_;
    int h_;
    std::vector<long long> dl_vals_, dr_vals_;
    State start_;
    std::unordered_map<Key, BigInt, KeyHash> memo_;
    std::map<int, std::vector<std::vector<int>>> parts_;
};

namespace detail {

inline BigInt fd_count(const PolygonClass& pc, Multiplicity mode, int orientation) {
    if (detail::is_segment(pc.polygon)) return detail::lattice_length(pc.polygon) == 1 ? 1 : 0;
    FloorCounter counter(strips(pc, orientation), mode);
    return counter.count();
}

}  // namespace detail

inline BigInt fd_count_complex(const PolygonClass& pc, int orientation = -1) {
    return detail::fd_count(pc, Multiplicity::Complex, orientation);
}

inline BigInt fd_count_real_l0(const PolygonClass& pc, int orientation = -1) {
    return detail::fd_count(pc, Multiplicity::RealL0, orientation);
}

// ---------------------------------------------------------------------------------------
// Explicit enumeration.  Slow; used for the debug dump and as a cross-check of the sweep.

struct FloorDiagram {
    struct Edge {
        int from, to;
        long long weight;
    };
    std::vector<std::pair<long long, long long>> floors;  // (left move, right move), bottom up
    std::vector<Edge> edges;
    std::vector<int> bottoms, tops;  // unbounded ends per floor
    BigInt multiplicity(Multiplicity m) const {
        BigInt r = 1;
        for (const auto& e : edges) r *= edge_multiplicity(m, e.weight);
        return r;
    }
};

namespace detail {

inline std::vector<std::vector<std::pair<int, int>>> labelled_trees(int n) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (n == 1) return {{}};
    if (n == 2) return {{{0, 1}}};
    std::vector<int> seq(n - 2, 0);
    while (true) {
        std::vector<int> deg(n, 1);
        for (int x : seq) ++deg[x];
        std::vector<std::pair<int, int>> edges;
        for (int x : seq) {
            for (int i = 0; i < n; ++i)
                if (deg[i] == 1) {
                    edges.emplace_back(std::min(i, x), std::max(i, x));
                    --deg[i];
                    --deg[x];
                    break;
                }
        }
        std::vector<int> last;
        for (int i = 0; i < n; ++i)
            if (deg[i] == 1) last.push_back(i);
        edges.emplace_back(last[0], last[1]);
        out.push_back(edges);
        int p = n - 3;
        while (p >= 0 && ++seq[p] == n) seq[p--] = 0;
        if (p < 0) break;
    }
    return out;
}

inline void compositions(int total, int parts, std::vector<int>& cur,
                         const std::function<void(const std::vector<int>&)>& f) {
    if (static_cast<int>(cur.size()) == parts - 1) {
        cur.push_back(total);
        f(cur);
        cur.pop_back();
        return;
    }
    for (int x = 0; x <= total; ++x) {
        cur.push_back(x);
        compositions(total - x, parts, cur, f);
        cur.pop_back();
    }
}

// Marked-point items: a kind tag, an identity, and the range of gaps (between floors) allowed.
struct Item {
    std::string label;
    int lo, hi;
    friend auto operator<=>(const Item&, const Item&) = default;
};

inline std::vector<Item> items_of(const FloorDiagram& fd) {
    const int h = static_cast<int>(fd.floors.size());
    std::vector<Item> items;
    for (const auto& e : fd.edges)
        items.push_back({"e" + std::to_string(e.from) + "-" + std::to_string(e.to), e.from + 1, e.to});
    for (int v = 0; v < h; ++v) {
        for (int i = 0; i < fd.bottoms[v]; ++i) items.push_back({"b" + std::to_string(v), 0, v});
        for (int i = 0; i < fd.tops[v]; ++i) items.push_back({"t" + std::to_string(v), v + 1, h});
    }
    std::sort(items.begin(), items.end());
    return items;
}

// Distinct words: floors sit at fixed positions, identical items are interchangeable.
inline void markings(const std::vector<Item>& items, int h,
                     const std::function<bool(const std::vector<std::string>&)>& f) {
    std::vector<Item> kinds;
    std::vector<int> rem;
    for (const auto& it : items) {
        if (!kinds.empty() && kinds.back() == it) {
            ++rem.back();
        } else {
            kinds.push_back(it);
            rem.push_back(1);
        }
    }
    std::vector<std::string> word;
    bool stop = false;
    std::function<void(int)> rec = [&](int gap) {
        if (stop) return;
        bool done = std::all_of(rem.begin(), rem.end(), [](int r) { return r == 0; });
        if (done && gap == h) {
            stop = !f(word);
            return;
        }
        for (std::size_t i = 0; i < kinds.size(); ++i) {
            if (rem[i] > 0 && kinds[i].lo <= gap && gap <= kinds[i].hi) {
                --rem[i];
                word.push_back(kinds[i].label);
                rec(gap);
                word.pop_back();
                ++rem[i];
            }
        }
        if (gap < h) {
            for (std::size_t i = 0; i < kinds.size(); ++i)
                if (rem[i] > 0 && kinds[i].hi <= gap) return;
            word.push_back("F" + std::to_string(gap));
            rec(gap + 1);
            word.pop_back();
        }
    };
    rec(0);
}

inline BigInt count_markings(const std::vector<Item>& items, int h) {
    std::vector<Item> kinds;
    std::vector<int> rem;
    for (const auto& it : items) {
        if (!kinds.empty() && kinds.back() == it) {
            ++rem.back();
        } else {
            kinds.push_back(it);
            rem.push_back(1);
        }
    }
    std::map<std::pair<int, std::vector<int>>, BigInt> memo;
    std::function<BigInt(int, std::vector<int>&)> go = [&](int gap, std::vector<int>& r) -> BigInt {
        bool done = std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
        if (done && gap == h) return 1;
        auto key = std::make_pair(gap, r);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        BigInt total = 0;
        for (std::size_t i = 0; i < kinds.size(); ++i) {
            if (r[i] > 0 && kinds[i].lo <= gap && gap <= kinds[i].hi) {
                --r[i];
                total += go(gap, r);
                ++r[i];
            }
        }
        if (gap < h) {
            bool ok = true;
            for (std::size_t i = 0; i < kinds.size(); ++i)
                if (r[i] > 0 && kinds[i].hi <= gap) ok = false;
            if (ok) total += go(gap + 1, r);
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return go(0, rem);
}

}  // namespace detail

// Calls f on every connected genus-0 floor diagram of the strips, floors numbered bottom up.
// Edge weights are forced by the balancing condition.
inline void enumerate_floor_diagrams(const Strips& s, const std::function<void(const FloorDiagram&)>& f) {
    const int h = s.height();
    if (h == 0) return;
    std::vector<long long> L = s.dl, R = s.dr;
    std::sort(L.begin(), L.end());
    std::sort(R.begin(), R.end());
    auto trees = detail::labelled_trees(h);
    do {
        do {
            for (const auto& tree : trees) {
                std::vector<int> cb;
                detail::compositions(static_cast<int>(s.bottom), h, cb, [&](const std::vector<int>& bs) {
                    std::vector<int> ct;
                    detail::compositions(static_cast<int>(s.top), h, ct, [&](const std::vector<int>& ts) {
                        FloorDiagram fd;
                        for (int v = 0; v < h; ++v) fd.floors.emplace_back(L[v], R[v]);
                        fd.bottoms = bs;
                        fd.tops = ts;
                        for (auto [i, j] : tree) {
                            // flow across the edge = net source on the side of the lower floor
                            std::vector<char> side(h, 0);
                            std::vector<int> stack{i};
                            side[i] = 1;
                            while (!stack.empty()) {
                                int x = stack.back();
                                stack.pop_back();
                                for (auto [p, q] : tree) {
                                    if (p == i && q == j) continue;
                                    int y = p == x ? q : (q == x ? p : -1);
                                    if (y >= 0 && !side[y]) {
                                        side[y] = 1;
                                        stack.push_back(y);
                                    }
                                }
                            }
                            long long w = 0;
                            for (int v = 0; v < h; ++v)
                                if (side[v]) w += bs[v] - ts[v] - (L[v] - R[v]);
                            if (w < 1) return;
                            fd.edges.push_back({i, j, w});
                        }
                        f(fd);
                    });
                });
            }
        } while (std::next_permutation(R.begin(), R.end()));
    } while (std::next_permutation(L.begin(), L.end()));
}

inline BigInt fd_count_bruteforce(const Strips& s, Multiplicity m) {
    BigInt total = 0;
    enumerate_floor_diagrams(s, [&](const FloorDiagram& fd) {
        BigInt mult = fd.multiplicity(m);
        if (mult == 0) return;
        total += mult * detail::count_markings(detail::items_of(fd), static_cast<int>(fd.floors.size()));
    });
    return total;
}

// One marked diagram per line:
//   floors=[(dl,dr) ...] edges=[i->j:w ...] ends=[b:.. t:..] mult=M marking=...
inline std::size_t dump_floor_diagrams(const PolygonClass& pc, std::ostream& os,
                                       std::size_t limit = 1000) {
    std::size_t lines = 0;
    if (detail::is_segment(pc.polygon)) return 0;
    Strips s = strips(pc);
    enumerate_floor_diagrams(s, [&](const FloorDiagram& fd) {
        if (lines >= limit) return;
        std::string head = "floors=[";
        for (std::size_t v = 0; v < fd.floors.size(); ++v) {
            if (v) head += ' ';
            head += "(" + std::to_string(fd.floors[v].first) + "," + std::to_string(fd.floors[v].second) + ")";
        }
        head += "] edges=[";
        for (std::size_t e = 0; e < fd.edges.size(); ++e) {
            if (e) head += ' ';
            head += std::to_string(fd.edges[e].from) + "->" + std::to_string(fd.edges[e].to) + ":" +
                    std::to_string(fd.edges[e].weight);
        }
        head += "] ends=[b:";
        for (int b : fd.bottoms) head += std::to_string(b);
        head += " t:";
        for (int t : fd.tops) head += std::to_string(t);
        head += "] mult=" + to_string(fd.multiplicity(Multiplicity::Complex)) +
                " real=" + to_string(fd.multiplicity(Multiplicity::RealL0));
        detail::markings(detail::items_of(fd), static_cast<int>(fd.floors.size()),
                         [&](const std::vector<std::string>& word) {
                             if (lines >= limit) return false;
                             os << head << " marking=";
                             for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << word[i];
                             os << '\n';
                             ++lines;
                             return true;
                         });
    });
    return lines;
}

}  // namespace pezzo
