#include "support.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace pezzo;

namespace {

PolygonClass poly(SurfaceId id, ClassVector D) { return polygon_of(surface(id), D); }

// Every class with nonnegative coordinates on the toric standard surfaces, 0 <= k <= kmax.
std::vector<std::pair<SurfaceId, ClassVector>> classes(long long kmax) {
    std::vector<std::pair<SurfaceId, ClassVector>> out;
    for (SurfaceId id : kAllSurfaces) {
        const auto& s = surface(id);
        if (s.twisted) continue;
        std::vector<long long> c(s.rank, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == s.rank) {
                ClassVector D(c);
                long long k = constraint_count(s, D);
                if (k >= 0 && k <= kmax) out.emplace_back(id, D);
                return;
            }
            for (long long v = 0; v <= 10; ++v) {
                c[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }
    return out;
}

}  // namespace

TEST(Polygon, Examples) {
    auto p = poly(SurfaceId::P2, ClassVector{3});
    EXPECT_EQ(p.polygon, (std::vector<LatticePoint>{{0, 0}, {3, 0}, {0, 3}}));
    auto q = poly(SurfaceId::Q, ClassVector{2, 2});
    EXPECT_EQ(q.polygon, (std::vector<LatticePoint>{{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
    auto c = poly(SurfaceId::Q_2, ClassVector{2, 2, 1, 2});
    EXPECT_EQ(c.polygon, (std::vector<LatticePoint>{{1, 0}, {2, 0}, {0, 2}, {0, 1}}));
}

TEST(Polygon, BlownUpPlaneCutsCorners) {
    auto p = poly(SurfaceId::P2_3, ClassVector{5, 2, 2, 2});
    EXPECT_EQ(p.polygon, (std::vector<LatticePoint>{{2, 0}, {3, 0}, {3, 2}, {2, 3}, {0, 3}, {0, 2}}));
}

TEST(Polygon, DegenerateClasses) {
    EXPECT_THROW(poly(SurfaceId::P2_3, ClassVector{2, 1, 2, 0}), DegeneratePolygon);
    EXPECT_THROW(poly(SurfaceId::P2, ClassVector{0}), DegeneratePolygon);
    EXPECT_THROW(poly(SurfaceId::Q_2, ClassVector{2, 2, 0, 3}), DegeneratePolygon);
    EXPECT_THROW(poly(SurfaceId::Q_1, ClassVector{0, 0, 1}), DegeneratePolygon);
    EXPECT_THROW(poly(SurfaceId::Q_2T, ClassVector{1, 0, 1}), UnsupportedLattice);
}

TEST(Strips, LatticeWidthsBalance) {
    for (const auto& [id, D] : classes(9)) {
        PolygonClass p;
        try {
            p = polygon_of(surface(id), D);
        } catch (const DegeneratePolygon&) {
            continue;
        }
        if (detail::is_segment(p.polygon)) continue;
        for (int w = 0; w < 3; ++w) {
            auto s = strips(p, w);
            long long width = s.bottom;
            for (int i = 0; i < s.height(); ++i) width += s.dr[i] - s.dl[i];
            EXPECT_EQ(width, s.top) << D.csv();
        }
    }
}

TEST(FloorCount, ComplexExamples) {
    EXPECT_EQ(fd_count_complex(poly(SurfaceId::P2, ClassVector{3})), 12);
    EXPECT_EQ(fd_count_complex(poly(SurfaceId::Q_2, ClassVector{2, 2, 1, 2})), 1);
    EXPECT_EQ(fd_count_complex(poly(SurfaceId::Q, ClassVector{1, 1})), 1);
    EXPECT_EQ(fd_count_complex(poly(SurfaceId::P2, ClassVector{4})), 620);
    EXPECT_EQ(fd_count_complex(poly(SurfaceId::P2, ClassVector{5})), 87304);
}

TEST(FloorCount, RealPlaneCounts) {
    EXPECT_EQ(fd_count_real_l0(poly(SurfaceId::P2, ClassVector{1})), 1);
    EXPECT_EQ(fd_count_real_l0(poly(SurfaceId::P2, ClassVector{2})), 1);
    EXPECT_EQ(fd_count_real_l0(poly(SurfaceId::P2, ClassVector{3})), 8);
    EXPECT_EQ(fd_count_real_l0(poly(SurfaceId::P2, ClassVector{4})), 240);
    EXPECT_EQ(fd_count_real_l0(poly(SurfaceId::P2, ClassVector{5})), 18264);
    EXPECT_EQ(fd_count_real_l0(poly(SurfaceId::P2, ClassVector{6})), 2845440);
}

TEST(FloorCount, SegmentsAreLinesThroughPoints) {
    EXPECT_EQ(fd_count_complex(poly(SurfaceId::Q, ClassVector{1, 0})), 1);
    EXPECT_EQ(fd_count_complex(poly(SurfaceId::Q, ClassVector{2, 0})), 0);
    EXPECT_EQ(fd_count_real_l0(poly(SurfaceId::P2_3, ClassVector{1, 1, 0, 0})), 1);
}

TEST(FloorCount, AgreesWithRecursion) {
    int n = 0;
    for (const auto& [id, D] : classes(10)) {
        PolygonClass p;
        try {
            p = polygon_of(surface(id), D);
        } catch (const DegeneratePolygon&) {
            continue;
        }
        EXPECT_EQ(fd_count_complex(p), gw_surface(surface(id), D)) << surface(id).token << " " << D.csv();
        ++n;
    }
    EXPECT_GT(n, 300);
}

TEST(FloorCount, SweepAgreesWithExplicitEnumeration) {
    for (const auto& [id, D] : classes(7)) {
        PolygonClass p;
        try {
            p = polygon_of(surface(id), D);
        } catch (const DegeneratePolygon&) {
            continue;
        }
        if (detail::is_segment(p.polygon)) continue;
        auto s = strips(p);
        EXPECT_EQ(fd_count_bruteforce(s, Multiplicity::Complex), fd_count_complex(p)) << D.csv();
        EXPECT_EQ(fd_count_bruteforce(s, Multiplicity::RealL0), fd_count_real_l0(p)) << D.csv();
    }
}

TEST(FloorCount, IndependentOfOrientation) {
    for (const auto& [id, D] : classes(9)) {
        PolygonClass p;
        try {
            p = polygon_of(surface(id), D);
        } catch (const DegeneratePolygon&) {
            continue;
        }
        if (detail::is_segment(p.polygon)) continue;
        BigInt c = fd_count_complex(p, 0), r = fd_count_real_l0(p, 0);
        for (int w = 1; w < 3; ++w) {
            EXPECT_EQ(fd_count_complex(p, w), c) << D.csv() << " orientation " << w;
            EXPECT_EQ(fd_count_real_l0(p, w), r) << D.csv() << " orientation " << w;
        }
    }
}

TEST(FloorCount, SymmetricUnderMonodromy) {
    for (SurfaceId id : {SurfaceId::Q, SurfaceId::Q_1, SurfaceId::Q_2}) {
        const auto& s = surface(id);
        for (const auto& [sid, D] : classes(10)) {
            if (sid != id) continue;
            ClassVector T = monodromy(s, D);
            try {
                auto p = polygon_of(s, D), pt = polygon_of(s, T);
                EXPECT_EQ(fd_count_complex(p), fd_count_complex(pt)) << D.csv();
                EXPECT_EQ(fd_count_real_l0(p), fd_count_real_l0(pt)) << D.csv();
            } catch (const DegeneratePolygon&) {
            }
        }
    }
}

TEST(FloorCount, RealCountHasParityAndBoundOfComplexCount) {
    for (const auto& [id, D] : classes(11)) {
        PolygonClass p;
        try {
            p = polygon_of(surface(id), D);
        } catch (const DegeneratePolygon&) {
            continue;
        }
        BigInt c = fd_count_complex(p), r = fd_count_real_l0(p);
        EXPECT_EQ((c - r) % 2, 0) << D.csv();
        EXPECT_LE(abs(r), c) << D.csv();
        EXPECT_GE(r, 0) << D.csv();
    }
}

TEST(FloorCount, Multiplicities) {
    EXPECT_EQ(edge_multiplicity(Multiplicity::Complex, 3), 9);
    EXPECT_EQ(edge_multiplicity(Multiplicity::RealL0, 3), 1);
    EXPECT_EQ(edge_multiplicity(Multiplicity::RealL0, 2), 0);
}

TEST(FloorCount, StateCacheIsUsed) {
    FloorCounter fc(strips(poly(SurfaceId::P2, ClassVector{5})), Multiplicity::Complex);
    EXPECT_EQ(fc.count(), 87304);
    EXPECT_GT(fc.states_visited(), 0u);
}

TEST(Dump, ListsMarkedDiagrams) {
    std::ostringstream os;
    auto n = dump_floor_diagrams(poly(SurfaceId::P2, ClassVector{2}), os);
    EXPECT_EQ(n, 1u);
    EXPECT_NE(os.str().find("mult=1"), std::string::npos);
    std::ostringstream cubic;
    auto m = dump_floor_diagrams(poly(SurfaceId::P2, ClassVector{3}), cubic);
    EXPECT_GT(m, 1u);
    std::ostringstream capped;
    EXPECT_EQ(dump_floor_diagrams(poly(SurfaceId::P2, ClassVector{4}), capped, 5), 5u);
}

TEST(Internals, LabelledTreeCountsFollowCayley) {
    EXPECT_EQ(detail::labelled_trees(1).size(), 1u);
    EXPECT_EQ(detail::labelled_trees(3).size(), 3u);
    EXPECT_EQ(detail::labelled_trees(4).size(), 16u);
    EXPECT_EQ(detail::labelled_trees(5).size(), 125u);
}
