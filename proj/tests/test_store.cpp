#include "support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

using namespace pezzo;
using support::TempDir;

namespace {

StoreOptions bare(std::optional<std::filesystem::path> dir = std::nullopt) {
    StoreOptions o;
    o.cache_dir = std::move(dir);
    o.load_fixtures = false;
    return o;
}

IngestReport ingest_text(InvariantStore& s, const std::string& text) {
    std::istringstream in(text);
    return s.ingest_stream(in, std::nullopt, "test", false);
}

}  // namespace

TEST(Keys, CanonicalFormsUseSymmetries) {
    InvariantKey a{Kind::W, "qx2", ClassVector{3, 3, 1, 2}, 1};
    InvariantKey b{Kind::W, "qx2", ClassVector{3, 3, 2, 1}, 1};
    EXPECT_EQ(canonical(a), canonical(b));
    InvariantKey c{Kind::W, "p2x3", ClassVector{5, 1, 2, 3}, 0};
    EXPECT_EQ(canonical(c).cls, (ClassVector{5, 3, 2, 1}));
    InvariantKey d{Kind::W, "deg6", ClassVector{2, 5, 3}, 0};
    EXPECT_EQ(canonical(d).cls, (ClassVector{5, 3, 2}));
    InvariantKey g{Kind::GW, "q", ClassVector{1, 2}, 4};
    EXPECT_EQ(canonical(g).pairs, 0);
    EXPECT_THROW(canonical({Kind::W, "q", ClassVector{1, 2, 3}, 0}), DimensionError);
    EXPECT_THROW(canonical({Kind::W, "nowhere", ClassVector{1}, 0}), DomainError);
}

TEST(Keys, PlaneReduceExamples) {
    EXPECT_EQ(plane_reduce(ClassVector{7, 4, 3, 1}), (ClassVector{6, 3, 2, 0}));
    EXPECT_EQ(plane_reduce(ClassVector{7, 4, 3, 0}), (ClassVector{6, 3, 2, 0}));
    EXPECT_EQ(plane_reduce(ClassVector{3, 1, 1, 1}), (ClassVector{3, 0, 0, 0}));
    EXPECT_EQ(plane_reduce(ClassVector{4, 0, 0, 0}), (ClassVector{4, 0, 0, 0}));
}

TEST(Keys, PlaneReduceKeepsRealCount) {
    // Equivalent plane classes must carry the same W: check against the floor count.
    for (long long d = 1; d <= 6; ++d)
        for (long long a = 0; a <= d; ++a)
            for (long long b = 0; b <= a; ++b)
                for (long long c = 0; c <= b; ++c) {
                    ClassVector p{d, a, b, c}, q = plane_reduce(p);
                    PolygonClass pp, pq;
                    try {
                        pp = polygon_of(surface(SurfaceId::P2_3), p);
                        pq = polygon_of(surface(SurfaceId::P2_3), q);
                    } catch (const DegeneratePolygon&) {
                        continue;
                    }
                    if (gw_blowup_p2(d, a, b, c) == 0) continue;
                    EXPECT_EQ(fd_count_real_l0(pp), fd_count_real_l0(pq)) << p.csv() << " -> " << q.csv();
                }
}

TEST(Store, ComputesExamples) {
    InvariantStore s(bare());
    EXPECT_EQ(s.gw(SurfaceId::Q_2, ClassVector{4, 4, 1, 3}), 87304);
    EXPECT_EQ(s.w(SurfaceId::P2, ClassVector{3}, 0), 8);
    EXPECT_EQ(s.w(SurfaceId::Q, ClassVector{2, 1}, 3), 1);
    EXPECT_EQ(s.w(SurfaceId::Q_2, ClassVector{3, 3, 0, 5}, 0), 0);
    EXPECT_EQ(s.lookup({Kind::W, "p2", ClassVector{3}, 0}), BigInt(8));
}

TEST(Store, UnavailableValuesName) {
    InvariantStore s(bare());
    try {
        s.w(SurfaceId::Q_2T, ClassVector{2, 1, 1}, 0);
        FAIL() << "expected DataUnavailable";
    } catch (const DataUnavailable& e) {
        ASSERT_EQ(e.missing.size(), 1u);
        EXPECT_NE(e.missing[0].find("qx2t"), std::string::npos);
    }
    EXPECT_THROW(s.w(SurfaceId::P2, ClassVector{3}, 1), DataUnavailable);
    EXPECT_FALSE(s.lookup({Kind::W, "p2", ClassVector{3}, 1}));
}

TEST(Store, FixtureSuppliesPlaneValues) {
    InvariantStore s;
    EXPECT_EQ(s.w(SurfaceId::P2, ClassVector{3}, 1), 6);
    EXPECT_EQ(s.w(SurfaceId::P2, ClassVector{4}, 1), 144);
    // classes on other surfaces that reduce to a plane class share its value
    EXPECT_EQ(s.w(SurfaceId::P2_3, ClassVector{3, 1, 0, 0}, 1), s.w(SurfaceId::P2, ClassVector{3}, 1));
}

TEST(Store, FixtureMatchesShippedData) {
    InvariantStore fixture;
    InvariantStore file(bare());
    auto rep = file.ingest_csv(std::filesystem::path(PEZZO_DATA_DIR) / "rp2_welschinger.csv");
    EXPECT_TRUE(rep.rejected.empty());
    EXPECT_EQ(rep.accepted, fixture.size());
    for (long long d = 1; d <= 5; ++d)
        for (int l = 0; 2 * l <= 3 * d - 1; ++l) {
            InvariantKey k{Kind::W, "p2", ClassVector{d}, l};
            EXPECT_EQ(fixture.lookup(k), file.lookup(k)) << d << " " << l;
        }
}

TEST(Store, MonodromyImagesShareAnEntry) {
    InvariantStore s(bare());
    s.put({Kind::W, "qx2", ClassVector{3, 3, 1, 2}, 1}, 6, "test", false);
    EXPECT_EQ(s.lookup({Kind::W, "qx2", ClassVector{3, 3, 2, 1}, 1}), BigInt(6));
    EXPECT_EQ(s.size(), 1u);
    EXPECT_THROW(s.put({Kind::W, "qx2", ClassVector{3, 3, 2, 1}, 1}, 4, "test", false), ConsistencyError);
}

TEST(Ingest, AcceptsRows) {
    InvariantStore s(bare());
    auto rep = ingest_text(s, "space,c1,c2,c3,l,value\ndeg6,3,3,3,0,-400\ndeg6,3,3,3,1,100\n"
                              "# comment\n\ndeg6,5,3,1,0,0\n");
    EXPECT_EQ(rep.accepted, 3u);
    EXPECT_TRUE(rep.rejected.empty());
    EXPECT_EQ(s.lookup({Kind::W, "deg6", ClassVector{1, 3, 5}, 0}), BigInt(0));
}

TEST(Ingest, RejectsParityAndBoundViolations) {
    InvariantStore s(bare());
    auto rep = ingest_text(s, "space,c1,l,value\np2,3,0,9\np2,3,0,14\np2,3,0,8\n");
    EXPECT_EQ(rep.accepted, 1u);
    ASSERT_EQ(rep.rejected.size(), 2u);
    EXPECT_EQ(rep.rejected[0].line, 2);
    EXPECT_NE(rep.rejected[0].reason.find("parity"), std::string::npos);
    EXPECT_NE(rep.rejected[1].reason.find("bound"), std::string::npos);
}

TEST(Ingest, RejectsWrongGwValues) {
    InvariantStore s(bare());
    auto rep = ingest_text(s, "space,c1,l,value\ngw-p2,4,0,621\ngw-p2,4,0,620\n");
    EXPECT_EQ(rep.accepted, 1u);
    EXPECT_EQ(rep.rejected.size(), 1u);
}

TEST(Ingest, RejectsConflicts) {
    InvariantStore s;
    auto rep = ingest_text(s, "space,c1,l,value\np2,3,0,6\np2,3,1,6\n");
    EXPECT_EQ(rep.accepted, 1u);
    ASSERT_EQ(rep.rejected.size(), 1u);
    EXPECT_NE(rep.rejected[0].reason.find("conflicts"), std::string::npos);
    // a class reducing to a stored plane class must agree with it too
    auto rep2 = ingest_text(s, "space,c1,c2,c3,c4,l,value\np2x3,3,1,0,0,1,4\n");
    EXPECT_EQ(rep2.accepted, 0u);
}

TEST(Ingest, MalformedInputThrowsBeforeInserting) {
    InvariantStore s(bare());
    try {
        ingest_text(s, "space,c1,l,value\np2,3,0,8\np2,3,x,8\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 3);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    EXPECT_EQ(s.size(), 0u);
    EXPECT_THROW(ingest_text(s, "p2,3,0,8\n"), ParseError);
    EXPECT_THROW(ingest_text(s, "space,c1,l,value\np2,3,8\n"), ParseError);
    EXPECT_THROW(ingest_text(s, "space,c1,l,value\nq,3,0,8\n"), ParseError);
    EXPECT_THROW(ingest_text(s, "space,c1,l,value\nmars,3,0,8\n"), ParseError);
    EXPECT_THROW(ingest_text(s, "space,c1,l,value\np2,3,0,1.5\n"), ParseError);
    EXPECT_THROW(ingest_text(s, ""), ParseError);
}

TEST(Ingest, HeadersMayRepeatForEachRank) {
    InvariantStore s(bare());
    auto rep = ingest_text(s, "space,c1,l,value\np2,3,0,8\nspace,c1,c2,l,value\nq,2,1,0,1\n"
                              "space,c1,c2,c3,l,value\ndeg6,3,3,3,0,-400\n");
    EXPECT_EQ(rep.accepted, 3u);
}

TEST(Ingest, SpaceFilter) {
    InvariantStore s(bare());
    std::istringstream in("space,c1,l,value\np2,3,0,8\ndeg8,3,0,1\n");
    auto rep = s.ingest_stream(in, std::string("p2"), "test", false);
    EXPECT_EQ(rep.accepted, 1u);
    ASSERT_EQ(rep.rejected.size(), 1u);
    EXPECT_EQ(rep.rejected[0].line, 3);
}

TEST(Cache, RoundTripsManyKeys) {
    TempDir dir;
    std::mt19937_64 rng(11);
    std::map<InvariantKey, BigInt> want;
    {
        InvariantStore s(bare(dir.path()));
        while (want.size() < 1000) {
            bool six = rng() % 2;
            InvariantKey k;
            k.kind = Kind::W;
            k.space = six ? "deg6t" : "deg7";
            k.cls = ClassVector{static_cast<long long>(rng() % 40), static_cast<long long>(rng() % 40)};
            k.pairs = static_cast<int>(rng() % 10);
            k = canonical(k);
            if (want.count(k)) continue;
            BigInt v = BigInt(static_cast<long long>(rng() % 1000000)) * BigInt("1000000000000000000000") -
                       BigInt(static_cast<long long>(rng() % 77));
            want[k] = v;
            s.put(k, v, "test");
        }
    }
    InvariantStore again(bare(dir.path()));
    EXPECT_EQ(again.size(), want.size());
    for (const auto& [k, v] : want) EXPECT_EQ(again.lookup(k), v) << describe(k);
    EXPECT_EQ(again.counts_by_source().at("test"), 1000u);
}

TEST(Cache, ComputedValuesPersistUntilCleared) {
    TempDir dir;
    {
        InvariantStore s(bare(dir.path()));
        EXPECT_EQ(s.gw(SurfaceId::P2, ClassVector{4}), 620);
        EXPECT_EQ(s.w(SurfaceId::P2, ClassVector{4}, 0), 240);
        EXPECT_EQ(s.cache_dir(), dir.path());
    }
    {
        InvariantStore s(bare(dir.path()));
        EXPECT_EQ(s.lookup({Kind::GW, "p2", ClassVector{4}, 0}), BigInt(620));
        EXPECT_EQ(s.lookup({Kind::W, "p2", ClassVector{4}, 0}), BigInt(240));
        EXPECT_EQ(s.clear_cache(), 1u);
        // in-memory values survive the clear
        EXPECT_EQ(s.lookup({Kind::W, "p2", ClassVector{4}, 0}), BigInt(240));
    }
    InvariantStore s(bare(dir.path()));
    EXPECT_EQ(s.size(), 0u);
}

TEST(Cache, NonPersistentValuesAreNotWritten) {
    TempDir dir;
    {
        InvariantStore s(StoreOptions{dir.path(), true});
        EXPECT_GT(s.size(), 0u);
    }
    InvariantStore s(bare(dir.path()));
    EXPECT_EQ(s.size(), 0u);
}

TEST(Store, ConcurrentRequestsAgree) {
    InvariantStore s(bare());
    std::vector<std::thread> threads;
    std::vector<BigInt> got(8);
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&, i] { got[i] = s.w(SurfaceId::P2, ClassVector{5}, 0); });
    for (auto& t : threads) t.join();
    for (const auto& v : got) EXPECT_EQ(v, 18264);
    EXPECT_EQ(s.size(), 1u);
}
