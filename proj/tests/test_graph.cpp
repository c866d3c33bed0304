#include <l0/graph.hpp>
#include <l0/oracle.hpp>

#include <gtest/gtest.h>

using namespace l0;

namespace {

template <typename F>
ErrorCode code_of(F && f)
{
    try {
        f();
    }
    catch (const Error & e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidInput;
}

WitnessedGraph path3() { return WitnessedGraph::simple(3, {{0, 1}, {1, 2}}); }

} // namespace

TEST(WitnessedGraph, RejectsLoopsDuplicatesAndUnknownEnds)
{
    EXPECT_EQ(code_of([] { WitnessedGraph({"a"}, {{"w", 0, 0}}); }), ErrorCode::LoopWitness);
    EXPECT_EQ(code_of([] { WitnessedGraph({"a", "a"}, {}); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { WitnessedGraph({"a", "b"}, {{"w", 0, 1}, {"w", 1, 0}}); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { WitnessedGraph({"a", "b"}, {{"w", 0, 2}}); }), ErrorCode::UnknownVertex);
}

TEST(WitnessedGraph, ParallelWitnessesCountOnceForDegree)
{
    WitnessedGraph g({"a", "b"}, {{"x", 0, 1}, {"y", 1, 0}});
    EXPECT_EQ(g.degree(0), 1u);
    EXPECT_EQ(g.incident(0).size(), 2u);
    EXPECT_EQ(g.least_witness(1, 0), 0u);
}

TEST(BipartiteCertificate, EvenCycleGetsAlternatingColouring)
{
    auto cert = bipartite_certificate(oracle::cycle(4));
    auto & col = std::get<Coloring>(cert);
    EXPECT_EQ(col.colours, (std::map<VertexId, std::uint32_t>{{0, 0}, {1, 1}, {2, 0}, {3, 1}}));
}

TEST(BipartiteCertificate, TriangleGetsOddClosedWalkOfLengthThree)
{
    auto g = oracle::complete(3);
    auto w = std::get<Walk>(bipartite_certificate(g));
    EXPECT_EQ(w.length(), 3u);
    EXPECT_EQ(w.vertices.front(), w.vertices.back());
    EXPECT_TRUE(is_valid_walk(g, w));
}

TEST(BipartiteCertificate, SingleVertexUsesOneColour)
{
    auto cert = bipartite_certificate(WitnessedGraph::simple(1, {}));
    EXPECT_EQ(std::get<Coloring>(cert).colour_count(), 1u);
}

TEST(Phi, BoundMatchesSmallExamples)
{
    auto k3 = oracle::complete(3);
    VertexSet v{0};
    EXPECT_EQ(phi_bound(k3, v).min_odd_length, 3u);
    VertexSet ends{0, 2};
    EXPECT_TRUE(phi_bound(path3(), ends).no_odd_walk());
    EXPECT_TRUE(phi_bound(k3, VertexSet{}).no_odd_walk());
}

TEST(Phi, HoldsIsIndependentOfK)
{
    auto k3 = oracle::complete(3);
    VertexSet v{0};
    EXPECT_FALSE(phi_holds(k3, v, 100));
    VertexSet ends{0, 2};
    EXPECT_TRUE(phi_holds(path3(), ends, 0));
    auto edge = WitnessedGraph::simple(2, {{0, 1}});
    VertexSet both{0, 1};
    EXPECT_FALSE(phi_holds(edge, both, 1));
    // A walk of length 201 exists at a triangle vertex: 3 plus 99 back-and-forth steps.
    auto w = least_walk(k3, 0, 0, 201);
    ASSERT_TRUE(w);
    EXPECT_TRUE(is_valid_walk(k3, *w));
}

TEST(InvariantClosure, IsComponentClosure)
{
    // K3 plus a disjoint edge.
    auto g = WitnessedGraph::simple(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    VertexSet a{1};
    EXPECT_EQ(invariant_closure(g, a), (VertexSet{0, 1, 2}));
    EXPECT_TRUE(invariant_closure(g, VertexSet{}).empty());
    VertexSet one{2};
    EXPECT_EQ(invariant_closure(path3(), one), (VertexSet{0, 1, 2}));
}

TEST(SupersetColouring, Examples)
{
    VertexSet a{0};
    auto [b, col] = bipartite_superset_colouring(path3(), a);
    EXPECT_EQ(b, (VertexSet{0, 1, 2}));
    EXPECT_TRUE(is_proper(path3(), col));

    auto empty = bipartite_superset_colouring(path3(), VertexSet{});
    EXPECT_TRUE(empty.closure.empty());
    EXPECT_TRUE(empty.colouring.colours.empty());

    auto two = WitnessedGraph::simple(4, {{0, 1}, {2, 3}});
    VertexSet ends{0, 2};
    auto res = bipartite_superset_colouring(two, ends);
    EXPECT_EQ(res.closure.size(), 4u);
    EXPECT_TRUE(is_proper(two, res.colouring));

    VertexSet tri{0};
    EXPECT_EQ(code_of([&] { (void)bipartite_superset_colouring(oracle::complete(3), tri); }), ErrorCode::PhiFails);
}

TEST(CoverColouring, Examples)
{
    auto c4 = oracle::cycle(4);
    std::vector<VertexSet> one{{0}};
    auto col = two_colour_from_cover(c4, one);
    EXPECT_TRUE(is_total(c4, col));
    EXPECT_TRUE(is_proper(c4, col));

    auto two = WitnessedGraph::simple(4, {{0, 1}, {2, 3}});
    std::vector<VertexSet> pieces{{0}, {2}};
    auto c2 = two_colour_from_cover(two, pieces);
    EXPECT_TRUE(is_total(two, c2) && is_proper(two, c2));
    EXPECT_EQ(c2.at(0), 0u);
    EXPECT_EQ(c2.at(2), 0u);

    std::vector<VertexSet> tri{{0}, {1}, {2}};
    EXPECT_EQ(code_of([&] { (void)two_colour_from_cover(oracle::complete(3), tri); }), ErrorCode::PieceNotTiny);
    std::vector<VertexSet> partial{{0}};
    EXPECT_EQ(code_of([&] { (void)two_colour_from_cover(two, partial); }), ErrorCode::CoverIncomplete);
}

TEST(GreedyColouring, Examples)
{
    EXPECT_EQ(greedy_colouring(oracle::complete(3)).colour_count(), 3u);
    EXPECT_EQ(greedy_colouring(WitnessedGraph::simple(4, {})).colour_count(), 1u);
    auto p5 = WitnessedGraph::simple(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto col = greedy_colouring(p5);
    EXPECT_LE(col.colour_count(), 3u);
    EXPECT_TRUE(is_proper(p5, col));
}

TEST(PullbackColouring, Examples)
{
    auto k3 = oracle::complete(3);
    auto col = greedy_colouring(k3);
    std::vector<VertexId> id{0, 1, 2};
    EXPECT_EQ(pullback_colouring(k3, k3, id, col), col);

    auto edge = WitnessedGraph::simple(2, {{0, 1}});
    Coloring ec;
    ec.colours = {{0, 0}, {1, 1}};
    std::vector<VertexId> fold{0, 1, 0};
    auto back = pullback_colouring(path3(), edge, fold, ec);
    EXPECT_EQ(back.colours, (std::map<VertexId, std::uint32_t>{{0, 0}, {1, 1}, {2, 0}}));

    std::vector<VertexId> bad{0, 0, 1};
    EXPECT_EQ(code_of([&] { (void)pullback_colouring(path3(), edge, bad, ec); }), ErrorCode::NotHomomorphism);
}

TEST(ParityDistances, MinOddClosedWalk)
{
    EXPECT_EQ(min_odd_closed_walk(oracle::cycle(5), 0), 5u);
    EXPECT_EQ(min_odd_closed_walk(oracle::cycle(4), 0), std::nullopt);
    EXPECT_EQ(min_odd_closed_walk(oracle::petersen(), 3), 5u);
}
