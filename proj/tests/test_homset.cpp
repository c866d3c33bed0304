#include <l0/homset.hpp>
#include <l0/oracle.hpp>

#include <gtest/gtest.h>

using namespace l0;

namespace {

GraphPtr share(WitnessedGraph g) { return std::make_shared<const WitnessedGraph>(std::move(g)); }
GadgetPtr gadget(ParamPrefix c = {}) { return std::make_shared<const PathGadget>(std::move(c)); }

} // namespace

TEST(AllHoms, CountsOnTriangle)
{
    auto k3 = share(oracle::complete(3));
    EXPECT_EQ(count(all_homs(gadget(), k3)), 3);
    EXPECT_EQ(count(all_homs(gadget({1}), k3)), 24);
    EXPECT_EQ(oracle::walk_count(*k3, 3), 24);
}

TEST(AllHoms, EdgelessTargetGivesEmptyProfile)
{
    auto p = all_homs(gadget({1}), share(WitnessedGraph::simple(3, {})));
    EXPECT_TRUE(p.empty());
    EXPECT_EQ(count(p), 0);
    EXPECT_TRUE(project(p, {0, "0"}).empty());
    EXPECT_TRUE(enumerate(p, 10).homs.empty());
}

TEST(AllHoms, SingleEdgeHasTwoAlternatingWalks)
{
    auto p = all_homs(gadget({1, 3}), share(WitnessedGraph::simple(2, {{0, 1}})));
    EXPECT_EQ(count(p), 2);
}

TEST(Project, FullAndPinned)
{
    auto k3 = share(oracle::complete(3));
    auto p = all_homs(gadget({1}), k3);
    for (const auto & u : p.gadget().vertices())
        EXPECT_EQ(project(p, u), (VertexSet{0, 1, 2}));
    std::vector<HomProfile::Mask> vm(4, HomProfile::Mask(3, true));
    vm[1] = {false, true, false};
    HomProfile pinned(p.gadget_ptr(), k3, vm, p.witness_masks());
    EXPECT_EQ(project(pinned, {0, ""}), (VertexSet{1}));
}

TEST(Enumerate, LexicographicallyLeastFirst)
{
    auto k3 = share(oracle::complete(3));
    EXPECT_EQ(enumerate(all_homs(gadget(), k3), 10).homs.size(), 3u);
    auto p = all_homs(gadget({1}), k3);
    auto e = enumerate(p, 5);
    ASSERT_EQ(e.homs.size(), 5u);
    auto all = oracle::enumerate_homs(p.gadget(), *k3, 100).homs;
    ASSERT_EQ(all.size(), 24u);
    EXPECT_TRUE(std::equal(e.homs.begin(), e.homs.end(), all.begin()));
}

TEST(Tiny, Examples)
{
    // The full C4 projection contains adjacent vertices, so only a pinned
    // profile is tiny there.
    auto c4 = all_homs(gadget({1}), share(oracle::cycle(4)));
    EXPECT_FALSE(is_tiny(c4).tiny);
    auto pinned = is_tiny(pin(c4, enumerate(c4, 1).homs.front()));
    EXPECT_TRUE(pinned.tiny);
    EXPECT_EQ(pinned.position, 0u);
    EXPECT_FALSE(is_tiny(all_homs(gadget({1}), share(oracle::complete(3)))).tiny);
    EXPECT_TRUE(is_tiny(all_homs(gadget({1}), share(WitnessedGraph::simple(2, {})))).tiny);
}

TEST(Small, LevelZero)
{
    auto c4 = share(oracle::cycle(4));
    auto k3 = share(oracle::complete(3));
    auto s4 = to_explicit(all_homs(gadget(), c4), 10);
    auto s3 = to_explicit(all_homs(gadget(), k3), 10);
    EXPECT_TRUE(is_small(s4));
    EXPECT_FALSE(is_small(s3));
    EXPECT_EQ(oracle::small_by_cover_search(*c4, s4.homs(), 1), true);
    EXPECT_EQ(oracle::small_by_cover_search(*k3, s3.homs(), 1), false);
    EXPECT_TRUE(is_small(ExplicitHomSet(gadget(), k3, {})));
}

TEST(Large, Examples)
{
    auto k3 = all_homs(gadget(), share(oracle::complete(3)));
    auto v = is_large(k3);
    EXPECT_TRUE(v.large);
    ASSERT_TRUE(v.witness);
    EXPECT_TRUE(k3.contains(*v.witness));
    EXPECT_FALSE(is_large(all_homs(gadget(), share(oracle::cycle(4)))).large);

    // K3 disjoint union C4: the witness must land in the triangle.
    auto mixed = share(WitnessedGraph::simple(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}}));
    auto lv = is_large(all_homs(gadget({1}), mixed));
    ASSERT_TRUE(lv.large);
    for (auto x : lv.witness->vertices)
        EXPECT_LT(x, 3u);
}

TEST(Doubling, Examples)
{
    auto k3 = share(oracle::complete(3));
    EXPECT_EQ(count(doubling(all_homs(gadget(), k3), 1)), 24);
    auto no_edges = all_homs(gadget({1}), share(WitnessedGraph::simple(2, {})));
    EXPECT_TRUE(doubling(no_edges, 1).empty());

    auto c5 = share(oracle::cycle(5));
    auto pinned = pin(all_homs(gadget(), c5), Hom{{0}, {}});
    EXPECT_EQ(count(doubling(pinned, 3)), 2);
}

TEST(ExtendWitness, JoinLengths)
{
    auto c5 = share(oracle::cycle(5));
    auto k3 = share(oracle::complete(3));
    auto pc5 = pin(all_homs(gadget(), c5), Hom{{0}, {}});
    auto pk3 = pin(all_homs(gadget(), k3), Hom{{0}, {}});
    auto e = extend_witness(pc5, 1);
    EXPECT_EQ(e.join_length, 3u);
    EXPECT_TRUE(is_hom(*e.gadget, *c5, e.hom));
    EXPECT_EQ(extend_witness(pk3, 1).join_length, 1u);
    auto e5 = extend_witness(pk3, 4);
    EXPECT_EQ(e5.join_length, 5u);
    EXPECT_TRUE(is_hom(*e5.gadget, *k3, e5.hom));
}

TEST(PreserveLargeness, Examples)
{
    auto k3 = all_homs(gadget(), share(oracle::complete(3)));
    EXPECT_EQ(preserve_largeness(k3, 1), 1u);
    EXPECT_TRUE(is_large(doubling(k3, 1)).large);

    // Unpinned C5: the two copies may sit on adjacent vertices, so the least
    // odd join already works.  Pinning both copies to one vertex needs 3.
    auto c5 = all_homs(gadget(), share(oracle::cycle(5)));
    EXPECT_EQ(preserve_largeness(c5, 1), 1u);
    EXPECT_EQ(preserve_largeness(pin(c5, Hom{{0}, {}}), 1), 3u);

    EXPECT_THROW((void)preserve_largeness(all_homs(gadget(), share(oracle::cycle(4))), 1), Error);
}

TEST(Pin, NonMemberRejected)
{
    auto k3 = all_homs(gadget({1}), share(oracle::complete(3)));
    Hom bad{{0, 0, 1, 2}, {0, 0, 0}};
    try {
        (void)pin(k3, bad);
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.code(), ErrorCode::NotMember);
    }
    auto first = enumerate(k3, 1).homs.front();
    EXPECT_EQ(count(pin(k3, first)), 1);
}

TEST(Glue, RejectsWrongJoinLength)
{
    auto k3 = oracle::complete(3);
    PathGadget lo, hi({1});
    Hom phi{{0}, {}};
    auto walk = *gluing_walk(k3, 0, 5);
    EXPECT_THROW((void)glue(lo, hi, phi, phi, walk), Error);
    auto ok = *gluing_walk(k3, 0, 3);
    EXPECT_TRUE(is_hom(hi, k3, glue(lo, hi, phi, phi, ok)));
}
