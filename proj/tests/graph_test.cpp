#include "iasi/error.hpp"
#include "iasi/graph.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace iasi;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

} // namespace

TEST(ParseEdgeList, Examples) {
    const auto p3 = parse("0 1\n1 2");
    EXPECT_EQ(p3, families::path(3));
    const auto k3 = parse("0 1\n1 2\n2 0");
    EXPECT_EQ(k3, families::complete(3));
    EXPECT_THROW(parse("0 0"), GraphError);
}

TEST(ParseEdgeList, CommentsAndBlankLines) {
    const auto g = parse("# triangle\n\n0 1\n  # indented comment\n1 2\r\n2 0\n");
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edge_count(), 3u);
}

TEST(ParseEdgeList, Errors) {
    EXPECT_THROW(parse("0 1\n1 0"), GraphError);       // duplicate
    EXPECT_THROW(parse("0 1 2"), GraphError);          // extra field
    EXPECT_THROW(parse("0 x"), GraphError);            // non-numeric
    EXPECT_THROW(parse("0 -1"), GraphError);           // negative
    try {
        parse("0 1\n3 4");
        FAIL() << "expected isolated-vertex error";
    } catch (const GraphError& e) {
        EXPECT_NE(std::string(e.what()).find("isolated vertex 2"), std::string::npos) << e.what();
    }
}

TEST(ParseEdgeList, RoundTripsThroughText) {
    const auto g = families::complete_bipartite(2, 3);
    EXPECT_EQ(parse(to_edge_list(g)), g);
}

TEST(Bipartition, Examples) {
    const auto c4 = bipartition_of(families::cycle(4));
    ASSERT_TRUE(c4);
    EXPECT_EQ(c4->side_x, (std::vector<VertexId>{0, 2}));
    EXPECT_EQ(c4->side_y, (std::vector<VertexId>{1, 3}));
    EXPECT_FALSE(bipartition_of(families::complete(3)));
    const auto k33 = bipartition_of(families::complete_bipartite(3, 3));
    ASSERT_TRUE(k33);
    EXPECT_EQ(k33->side_x.size(), 3u);
    EXPECT_EQ(k33->side_y.size(), 3u);
}

TEST(Bipartition, LowestIdOfEachComponentOnSideX) {
    const auto g = families::disjoint_union(families::path(2), families::path(3));
    const auto bp = bipartition_of(g);
    ASSERT_TRUE(bp);
    EXPECT_EQ(bp->side_x, (std::vector<VertexId>{0, 2, 4}));
    EXPECT_EQ(bp->side_y, (std::vector<VertexId>{1, 3}));
    EXPECT_TRUE(is_valid_bipartition(g, *bp));
    EXPECT_FALSE(is_valid_bipartition(g, Bipartition{{0, 1, 2}, {3, 4}}));
    EXPECT_FALSE(is_valid_bipartition(g, Bipartition{{0, 2}, {1, 3}}));
}

TEST(Bipartition, AgreesWithExhaustiveColoring) {
    std::mt19937 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + rng() % 7;
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId a = 0; a < n; ++a) {
            for (VertexId b = a + 1; b < n; ++b) {
                if (rng() % 3 == 0) {
                    edges.emplace_back(a, b);
                }
            }
        }
        Graph g;
        try {
            g = Graph::from_edges(n, edges);
        } catch (const GraphError&) {
            continue; // isolated vertex
        }
        ++checked;
        const auto bp = bipartition_of(g);
        ASSERT_EQ(bp.has_value(), oracle::bipartite_by_coloring(g)) << to_edge_list(g);
        if (bp) {
            EXPECT_TRUE(is_valid_bipartition(g, *bp));
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(ConnectedComponents, Examples) {
    EXPECT_EQ(connected_components(families::path(3)), (std::vector<std::vector<VertexId>>{{0, 1, 2}}));
    const auto two = Graph::from_edges(4, {{0, 1}, {2, 3}});
    EXPECT_EQ(connected_components(two), (std::vector<std::vector<VertexId>>{{0, 1}, {2, 3}}));
    const auto k3p2 = families::disjoint_union(families::complete(3), families::path(2));
    EXPECT_EQ(connected_components(k3p2).size(), 2u);
}

TEST(ConnectedComponents, IsAPartitionWithNoCrossEdges) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = families::disjoint_union(oracle::random_bipartite(rng, 1 + rng() % 3, 1 + rng() % 3, 0.4),
                                          families::complete(2 + rng() % 3));
        const auto comps = connected_components(g);
        std::vector<int> owner(g.vertex_count(), -1);
        for (std::size_t c = 0; c < comps.size(); ++c) {
            for (auto v : comps[c]) {
                ASSERT_EQ(owner[v], -1);
                owner[v] = static_cast<int>(c);
            }
            const auto sub = edge_subgraph(g, [&] {
                std::vector<Edge> inside;
                for (const auto& e : g.edges()) {
                    if (owner[e.u] == static_cast<int>(c)) inside.push_back(e);
                }
                return inside;
            }());
            EXPECT_EQ(connected_components(sub.graph).size(), 1u);
        }
        for (const auto& e : g.edges()) {
            EXPECT_EQ(owner[e.u], owner[e.v]);
        }
        EXPECT_EQ(std::count(owner.begin(), owner.end(), -1), 0);
    }
}

TEST(IsClique, Examples) {
    const std::vector<VertexId> all{0, 1, 2};
    EXPECT_TRUE(is_clique(families::complete(3), all));
    EXPECT_FALSE(is_clique(families::path(3), all));
    EXPECT_TRUE(is_clique(families::path(3), std::vector<VertexId>{1}));
    EXPECT_THROW(is_clique(families::path(3), std::vector<VertexId>{0, 7}), GraphError);
}

TEST(EdgeSubgraph, DropsUncoveredVerticesAndRenumbers) {
    const auto g = families::path(4);
    const std::vector<Edge> kept{Edge{2, 3}};
    const auto sub = edge_subgraph(g, kept);
    EXPECT_EQ(sub.graph, families::path(2));
    EXPECT_EQ(sub.original_ids, (std::vector<VertexId>{2, 3}));
    EXPECT_THROW(edge_subgraph(g, std::vector<Edge>{Edge{0, 3}}), GraphError);
}
