#include <l0/equiv.hpp>

#include <gtest/gtest.h>

using namespace l0;

TEST(IdentityTower, Verifies)
{
    auto t = identity_tower({1, 3, 5, 7}, 3);
    EXPECT_EQ(t.level_map, (std::vector<std::size_t>{0, 1, 2, 3}));
    for (const auto & s : t.suffixes)
        EXPECT_EQ(s, (std::array<std::string, 2>{"0", "1"}));
    auto r = verify_equivalence(t);
    EXPECT_TRUE(r.passed()) << (r.violations.empty() ? "" : r.violations.front());
}

TEST(Planner, SameSourceAndTargetGivesIdentity)
{
    ParamPrefix c{1, 3, 5, 7};
    EXPECT_EQ(plan_equivalence(c, c, 3), identity_tower(c, 3));
}

TEST(Planner, ShorterSourceIntoLongerTarget)
{
    auto t = plan_equivalence({3, 5}, {1, 3, 5, 7}, 2);
    auto r = verify_equivalence(t);
    EXPECT_TRUE(r.passed()) << (r.violations.empty() ? "" : r.violations.front());
    EXPECT_EQ(t.level_map.front(), 0u);
    EXPECT_EQ(t.joins[0].size(), 6u);
    EXPECT_EQ(t.joins[1].size(), 8u);
}

TEST(Planner, ReportsGap)
{
    // A join of length 3 cannot reach between two copies separated by a join of length 7.
    try {
        (void)plan_equivalence({1}, {5, 5, 5}, 1);
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.code(), ErrorCode::GapInsufficient);
    }
    EXPECT_THROW((void)plan_equivalence({2}, {1}, 1), Error);
}

TEST(VerifyEquivalence, DetectsCorruptedSuffix)
{
    auto t = identity_tower({1, 3, 5}, 3);
    t.suffixes[1][0] = "1";
    auto r = verify_equivalence(t);
    ASSERT_FALSE(r.passed());
    EXPECT_NE(r.violations.front().find("coherence"), std::string::npos);
}

TEST(VerifyEquivalence, DetectsBrokenJoin)
{
    auto t = identity_tower({3, 3}, 2);
    std::swap(t.joins[1][1], t.joins[1][2]);
    EXPECT_FALSE(verify_equivalence(t).passed());
}

TEST(SearchHom, LeastHomIntoLongerPath)
{
    PathGadget h({1});     // 3 edges
    PathGadget g({1, 3});  // 11 edges
    auto found = search_hom(h, g, {});
    ASSERT_TRUE(found);
    EXPECT_EQ(*found, (std::vector<GadgetVertex>{g.at(0), g.at(1), g.at(0), g.at(1)}));
}

TEST(SearchHom, ParityMakesPinsUnsatisfiable)
{
    PathGadget h({1});
    PathGadget g({1, 3});
    std::map<GadgetVertex, GadgetVertex> pins{{h.at(0), g.at(0)}, {h.at(3), g.at(2)}};
    EXPECT_FALSE(search_hom(h, g, pins));
    pins[h.at(3)] = g.at(3);
    EXPECT_TRUE(search_hom(h, g, pins));
}

TEST(SearchHom, SingleVertexTakesLeastVertex)
{
    PathGadget g({1, 3});
    auto found = search_hom(PathGadget(), g, {});
    ASSERT_TRUE(found);
    EXPECT_EQ(found->front(), g.at(0));
    EXPECT_THROW((void)search_hom(PathGadget(), g, {{GadgetVertex{5, ""}, g.at(0)}}), Error);
}
