#include <l0/oracle.hpp>
#include <l0/serialization.hpp>

#include <gtest/gtest.h>

using namespace l0;

namespace {

ErrorCode code_of(const std::function<void()> & f)
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

} // namespace

TEST(GraphJson, RoundTrip)
{
    auto text = R"({"vertices":["a","b","c"],"witnesses":[{"id":"x","ends":["a","b"]},
        {"id":"y","ends":["b","a"]},{"id":"z","ends":["b","c"]}]})";
    auto g = parse_graph(text);
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.witness_count(), 3u);
    EXPECT_EQ(g.degree(1), 2u);
    auto back = graph_from_json(to_json(g));
    EXPECT_EQ(to_json(back), to_json(g));
    EXPECT_EQ(to_json(g).dump(), R"({"vertices":["a","b","c"],"witnesses":[{"id":"x","ends":["a","b"]},)"
                                  R"({"id":"y","ends":["b","a"]},{"id":"z","ends":["b","c"]}]})");
}

TEST(GraphJson, Errors)
{
    EXPECT_EQ(code_of([] { (void)parse_graph("{\"vertices\": [\"a\""); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { (void)parse_graph(R"({"vertices":["a"]})"); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { (void)parse_graph(R"({"vertices":["a"],"witnesses":[{"id":"w","ends":["a","a"]}]})"); }),
        ErrorCode::LoopWitness);
    EXPECT_EQ(code_of([] { (void)parse_graph(R"({"vertices":["a"],"witnesses":[{"id":"w","ends":["a","q"]}]})"); }),
        ErrorCode::UnknownVertex);
    EXPECT_EQ(code_of([] { (void)parse_graph(R"({"vertices":[1],"witnesses":[]})"); }), ErrorCode::InvalidInput);
}

TEST(EdgeList, NamesFollowFirstAppearance)
{
    auto g = parse_graph("# triangle\nb a\na c  # closing\n\nc b\n");
    EXPECT_EQ(g.vertex_names(), (std::vector<std::string>{"b", "a", "c"}));
    EXPECT_EQ(g.witness(2).name, "w2");
    EXPECT_TRUE(std::holds_alternative<Walk>(bipartite_certificate(g)));
    EXPECT_EQ(code_of([] { (void)parse_graph("a b c\n"); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { (void)parse_graph("a\n"); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { (void)parse_graph("a a\n"); }), ErrorCode::LoopWitness);
}

TEST(ColoringJson, RoundTrip)
{
    auto c6 = oracle::cycle(6);
    auto col = std::get<Coloring>(bipartite_certificate(c6));
    EXPECT_EQ(coloring_from_json(c6, to_json(c6, col)), col);
}

TEST(WalkJson, RoundTrip)
{
    auto c5 = oracle::cycle(5);
    auto w = std::get<Walk>(bipartite_certificate(c5));
    EXPECT_EQ(walk_from_json(c5, to_json(c5, w)), w);
}

TEST(HomJson, RoundTripAndLabels)
{
    auto k3 = oracle::complete(3);
    PathGadget h({1});
    Hom phi{{0, 1, 2, 0}, {*k3.least_witness(0, 1), *k3.least_witness(1, 2), *k3.least_witness(2, 0)}};
    auto j = to_json(h, k3, phi);
    EXPECT_TRUE(j["vertexAssignments"].contains("p0^0"));
    EXPECT_TRUE(j["witnessAssignments"].contains("p0--p1"));
    EXPECT_EQ(hom_from_json(h, k3, j), phi);
    j["vertexAssignments"]["p1"] = j["vertexAssignments"]["p0^0"];
    EXPECT_EQ(code_of([&] { (void)hom_from_json(h, k3, j); }), ErrorCode::NotHomomorphism);
}

TEST(ProfileJson, RoundTrip)
{
    auto k3 = std::make_shared<const WitnessedGraph>(oracle::complete(3));
    auto gadget = std::make_shared<const PathGadget>(ParamPrefix{1, 3});
    auto p = pin(all_homs(gadget, k3), enumerate(all_homs(gadget, k3), 1).homs.front());
    auto back = profile_from_json(k3, to_json(p));
    EXPECT_EQ(back, p);
    EXPECT_EQ(count(back), 1);
    auto empty = all_homs(gadget, std::make_shared<const WitnessedGraph>(WitnessedGraph::simple(2, {})));
    EXPECT_TRUE(profile_from_json(empty.graph_ptr(), to_json(empty)).empty());
}

TEST(TowerJson, RoundTrip)
{
    auto c5 = oracle::cycle(5);
    auto t = std::get<Tower>(decide(c5, 3, unbounded_schedule_default()));
    auto j = to_json(t, c5);
    EXPECT_EQ(j["formatVersion"], 1);
    EXPECT_EQ(j["levels"].size(), 4u);
    EXPECT_EQ(tower_from_json(c5, j), t);
}

TEST(LcVertexJson, RoundTrip)
{
    LcVertex v{2, 1, EpBits("10", "011")};
    auto j = to_json(v);
    EXPECT_EQ(lc_vertex_from_json(j), v);
    j["x"]["period"] = "";
    EXPECT_EQ(code_of([&] { (void)lc_vertex_from_json(j); }), ErrorCode::InvalidInput);
}

TEST(EquivalenceJson, RoundTrip)
{
    auto t = plan_equivalence({3, 5}, {1, 3, 5, 7}, 2);
    auto j = to_json(t);
    EXPECT_EQ(j["levelMap"].size(), 3u);
    EXPECT_EQ(equivalence_from_json(j), t);
    EXPECT_EQ(code_of([] { (void)equivalence_from_json(Json::object()); }), ErrorCode::InvalidInput);
}
