#include <l0/dichotomy.hpp>
#include <l0/oracle.hpp>

#include <gtest/gtest.h>

using namespace l0;

TEST(Schedule, DefaultValues)
{
    auto s = unbounded_schedule_default();
    EXPECT_EQ(s(0), 1u);
    EXPECT_EQ(s(1), 1u);
    EXPECT_EQ(s(3), 5u);
    EXPECT_EQ(s(10), 19u);
}

TEST(Decide, BipartiteGivesColouring)
{
    auto c4 = oracle::cycle(4);
    auto d = decide(c4, 3, unbounded_schedule_default());
    auto & col = std::get<Coloring>(d);
    EXPECT_TRUE(is_total(c4, col));
    EXPECT_TRUE(is_proper(c4, col));
}

TEST(Decide, PentagonRaisesFirstJoin)
{
    auto c5 = oracle::cycle(5);
    auto t = std::get<Tower>(decide(c5, 1, [](std::size_t) { return 1u; }));
    EXPECT_EQ(t.prefix, (ParamPrefix{3}));
    EXPECT_TRUE(verify_tower(t, c5).passed());
}

TEST(Decide, TriangleWithOddSchedule)
{
    auto k3 = oracle::complete(3);
    auto t = std::get<Tower>(decide(k3, 2, [](std::size_t n) { return static_cast<std::uint32_t>(2 * n + 1); }));
    EXPECT_EQ(t.prefix, (ParamPrefix{1, 3}));
    EXPECT_EQ(t.schedule, (std::vector<std::uint32_t>{1, 3}));
    EXPECT_TRUE(verify_tower(t, k3).passed());
}

TEST(Decide, TriangleWithDefaultSchedule)
{
    auto k3 = oracle::complete(3);
    auto t = std::get<Tower>(decide(k3, 2, unbounded_schedule_default()));
    EXPECT_EQ(t.prefix, (ParamPrefix{1, 1}));
    auto explicit_t = std::get<Tower>(decide(k3, 2, explicit_schedule({1, 3})));
    EXPECT_EQ(explicit_t.prefix, (ParamPrefix{1, 3}));
}

TEST(Decide, DeepTowersVerify)
{
    for (const auto & g : {oracle::complete(3), oracle::cycle(5), oracle::petersen()}) {
        auto t = std::get<Tower>(decide(g, 6, unbounded_schedule_default()));
        auto r = verify_tower(t, g);
        EXPECT_TRUE(r.passed()) << (r.violations.empty() ? "" : r.violations.front());
        EXPECT_EQ(t.depth(), 6u);
    }
}

TEST(Decide, RootSkipsBipartiteComponents)
{
    // A path on 0-1 first, then a triangle on 2,3,4.
    auto g = WitnessedGraph::simple(5, {{0, 1}, {2, 3}, {3, 4}, {4, 2}});
    auto t = std::get<Tower>(decide(g, 2, unbounded_schedule_default()));
    EXPECT_EQ(t.levels[0].vertices[0], 2u);
    EXPECT_TRUE(verify_tower(t, g).passed());
}

TEST(Evaluate, RootAndIndexChecks)
{
    auto k3 = oracle::complete(3);
    auto t = std::get<Tower>(decide(k3, 2, unbounded_schedule_default()));
    EXPECT_EQ(evaluate(t, 0, 0, ""), t.levels[0].vertices[0]);
    try {
        (void)evaluate(t, 1, 2, "");
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidIndex);
    }
    try {
        (void)evaluate(t, 1, 0, "01");
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.code(), ErrorCode::OutOfTruncation);
    }
}

TEST(VerifyTower, DetectsCorruption)
{
    auto k3 = oracle::complete(3);
    auto t = std::get<Tower>(decide(k3, 3, unbounded_schedule_default()));
    auto bad = t;
    bad.levels[2].vertices[0] = (bad.levels[2].vertices[0] + 1) % 3;
    auto r = verify_tower(bad, k3);
    EXPECT_FALSE(r.passed());

    // Keep every level a homomorphism but break coherence.
    auto incoherent = t;
    for (auto & v : incoherent.levels[3].vertices)
        v = (v + 1) % 3;
    for (std::size_t j = 0; j < incoherent.levels[3].witnesses.size(); ++j) {
        const auto & vs = incoherent.levels[3].vertices;
        incoherent.levels[3].witnesses[j] = *k3.least_witness(vs[j], vs[j + 1]);
    }
    auto rc = verify_tower(incoherent, k3);
    ASSERT_FALSE(rc.passed());
    EXPECT_NE(rc.violations.front().find("coherence"), std::string::npos);
}

TEST(VerifyTower, BipartiteTargetFailsLargeness)
{
    Tower flat;
    flat.levels.push_back(Hom{{0}, {}});
    auto edge = WitnessedGraph::simple(2, {{0, 1}});
    auto r = verify_tower(flat, edge);
    ASSERT_FALSE(r.passed());
    EXPECT_NE(r.violations.front().find("largeness"), std::string::npos);
}
