#include <l0/gadget.hpp>

#include <gtest/gtest.h>

using namespace l0;

namespace {

std::vector<std::string> labels(const PathGadget & g)
{
    std::vector<std::string> out;
    for (const auto & v : g.vertices())
        out.push_back(v.label());
    return out;
}

} // namespace

TEST(Gadget, BaseCaseIsSingleVertex)
{
    PathGadget g;
    EXPECT_EQ(g.vertex_count(), 1u);
    EXPECT_EQ(g.edge_count(), 0u);
    EXPECT_EQ(g.at(0), (GadgetVertex{0, ""}));
}

TEST(Gadget, OneLevelWithUnitJoin)
{
    PathGadget g({1});
    EXPECT_EQ(labels(g), (std::vector<std::string>{"p0^0", "p0", "p1", "p0^1"}));
    EXPECT_EQ(g.edge_count(), 3u);
}

TEST(Gadget, SizesFollowRecursion)
{
    PathGadget g({1, 3, 5});
    EXPECT_EQ(g.vertex_count(), 30u);
    EXPECT_EQ(g.edge_count(), 29u);
    EXPECT_EQ(gadget_vertex_count(ParamPrefix{1, 3, 5}, 3), 30u);
}

TEST(Gadget, SecondLevelOrder)
{
    PathGadget g({1, 3});
    EXPECT_EQ(labels(g), (std::vector<std::string>{"p0^00", "p0^0", "p1^0", "p0^10", "p0", "p1", "p2", "p3", "p0^11",
                             "p1^1", "p0^1", "p0^01"}));
}

TEST(Gadget, Endpoints)
{
    EXPECT_EQ(endpoints(PathGadget()), std::pair(GadgetVertex{0, ""}, GadgetVertex{0, ""}));
    EXPECT_EQ(endpoints(PathGadget({1})), std::pair(GadgetVertex{0, "0"}, GadgetVertex{0, "1"}));
    EXPECT_EQ(endpoints(PathGadget({1, 3})), std::pair(GadgetVertex{0, "00"}, GadgetVertex{0, "01"}));
    for (std::size_t n = 0; n <= 5; ++n)
        EXPECT_EQ(endpoints(PathGadget(ParamPrefix{1, 3, 5, 7, 9}.take(n))), endpoint_labels(n));
}

TEST(Gadget, Classify)
{
    PathGadget g({1, 3});
    EXPECT_EQ(classify(g, {2, ""}), VertexKind::PathVertex);
    EXPECT_EQ(classify(g, {0, "0"}), VertexKind::NonPathVertex);
    EXPECT_EQ(classify(g, {1, "1"}), VertexKind::NonPathVertex);
    EXPECT_THROW((void)classify(g, {7, ""}), Error);
}

TEST(Gadget, CopyEmbedding)
{
    PathGadget lo, hi({1});
    EXPECT_EQ(hi.at(copy_embed(lo, hi, 0)[0]), (GadgetVertex{0, "0"}));
    EXPECT_EQ(hi.at(copy_embed(lo, hi, 1)[0]), (GadgetVertex{0, "1"}));
    EXPECT_THROW((void)copy_embed(PathGadget({1}), PathGadget({3, 1}), 0), Error);
}

TEST(Gadget, CopiesPreserveAdjacency)
{
    PathGadget lo({1, 3}), hi({1, 3, 5});
    for (int bit = 0; bit < 2; ++bit) {
        auto emb = copy_embed(lo, hi, bit);
        for (std::size_t j = 0; j + 1 < emb.size(); ++j) {
            auto d = emb[j] > emb[j + 1] ? emb[j] - emb[j + 1] : emb[j + 1] - emb[j];
            EXPECT_EQ(d, 1u);
        }
    }
}

TEST(Gadget, OddDistanceLemma)
{
    PathGadget g({1});
    EXPECT_EQ(gadget_distance(g, {0, "0"}, {0, "1"}), 3u);
    auto r1 = check_odd_distance_lemma(g);
    EXPECT_TRUE(r1.passed());
    EXPECT_EQ(r1.pairs_checked, 1u);
    EXPECT_TRUE(check_odd_distance_lemma(PathGadget({1, 3})).passed());
    EXPECT_THROW((void)check_odd_distance_lemma(PathGadget({2})), Error);
}

TEST(Gadget, SymbolicPositionsMatchConstruction)
{
    ParamPrefix c{3, 1, 5, 1};
    for (std::size_t n = 0; n <= c.size(); ++n) {
        PathGadget g(c.take(n));
        for (std::size_t p = 0; p < g.vertex_count(); ++p)
            EXPECT_EQ(position_in_level(c, n, g.at(p)), p);
    }
    EXPECT_EQ(position_in_level(c, 1, {4, ""}), std::nullopt);
    EXPECT_EQ(position_in_level(c, 1, {0, "00"}), std::nullopt);
}

TEST(ParamPrefix, Parse)
{
    EXPECT_EQ(ParamPrefix::parse("1,3,5"), (ParamPrefix{1, 3, 5}));
    EXPECT_EQ(ParamPrefix::parse(""), ParamPrefix{});
    EXPECT_THROW((void)ParamPrefix::parse("1,0"), Error);
    EXPECT_THROW((void)ParamPrefix::parse("1,x"), Error);
    EXPECT_THROW((void)PathGadget(ParamPrefix(std::vector<std::uint32_t>{0})), Error);
}

TEST(GadgetVertex, LabelsRoundTrip)
{
    for (const auto & v : PathGadget({1, 3, 5}).vertices())
        EXPECT_EQ(GadgetVertex::parse(v.label()), v);
    EXPECT_THROW((void)GadgetVertex::parse("q1"), Error);
    EXPECT_THROW((void)GadgetVertex::parse("p1^2"), Error);
}
