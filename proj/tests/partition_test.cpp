#include "iasi/construct.hpp"
#include "iasi/partition.hpp"
#include "iasi/verify.hpp"

#include <gtest/gtest.h>

using namespace iasi;

namespace {

// Labels of two graphs placed side by side; the second graph's labels are
// shifted so no label or edge label is shared across the union.
Labeling union_labeling(const Labeling& a, std::size_t a_vertices, const Labeling& b, Element shift) {
    Labeling out = a;
    for (const auto& [v, label] : b.entries()) {
        out.assign(static_cast<VertexId>(v + a_vertices), label.shifted(shift));
    }
    return out;
}

Labeling two_edges_6_uniform() {
    const auto p2 = families::path(2);
    const auto bp = *bipartition_of(p2);
    const auto first = construct_bipartite_strong(p2, bp, {6, FactorPair{1, 6}, std::nullopt});
    const auto second = construct_bipartite_strong(p2, bp, {6, FactorPair{2, 3}, std::nullopt});
    return union_labeling(first, 2, second, 100);
}

const DivisorClass& class_of(const PartitionReport& r, std::uint64_t d) {
    return *std::find_if(r.classes.begin(), r.classes.end(), [d](const DivisorClass& c) { return c.divisor == d; });
}

} // namespace

TEST(Partition, StrongP2SquareClass) {
    const auto r = analyze_divisor_partition(families::path(2), Labeling({{0, 1}, {0, 2}}), 4);
    EXPECT_EQ(r.divisors, (std::vector<std::uint64_t>{1, 2, 4}));
    EXPECT_TRUE(r.k_is_square);
    EXPECT_EQ(class_of(r, 2).vertices, (std::vector<VertexId>{0, 1}));
    EXPECT_TRUE(class_of(r, 1).vertices.empty());
    ASSERT_EQ(r.components.size(), 1u);
    EXPECT_EQ(r.components[0].kind, ComponentKind::square_class);
    EXPECT_TRUE(r.components[0].is_bipartite);
    EXPECT_FALSE(r.components[0].is_clique);
    EXPECT_TRUE(r.bounds_hold);
}

TEST(Partition, TwoBipartiteComponentsFor6) {
    const auto g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    const auto f = two_edges_6_uniform();
    ASSERT_TRUE(verify(g, f).is_strongly_uniform(6));
    const auto r = analyze_divisor_partition(g, f, 6);
    EXPECT_EQ(r.divisors.size(), 4u);
    EXPECT_FALSE(r.k_is_square);
    EXPECT_EQ(class_of(r, 1).vertices, (std::vector<VertexId>{0}));
    EXPECT_EQ(class_of(r, 6).vertices, (std::vector<VertexId>{1}));
    EXPECT_EQ(class_of(r, 2).vertices, (std::vector<VertexId>{2}));
    EXPECT_EQ(class_of(r, 3).vertices, (std::vector<VertexId>{3}));
    EXPECT_EQ(r.bipartite_groups, 2u);
    EXPECT_EQ(r.max_groups, 2u);
    EXPECT_TRUE(r.bounds_hold);
    EXPECT_FALSE(r.has_clique_component);
    ASSERT_EQ(r.components.size(), 2u);
    EXPECT_EQ(r.components[0].kind, ComponentKind::divisor_pair);
    EXPECT_EQ(r.components[1].low_divisor, 2u);
    EXPECT_EQ(r.components[1].high_divisor, 3u);
}

TEST(Partition, TriangleCliqueNeedsSquareK) {
    const auto r = analyze_divisor_partition(families::complete(3), Labeling({{0, 1}, {10, 12}, {30, 34}}), 4);
    ASSERT_EQ(r.components.size(), 1u);
    EXPECT_EQ(class_of(r, 2).vertices.size(), 3u);
    EXPECT_TRUE(r.components[0].is_clique);
    EXPECT_FALSE(r.components[0].is_bipartite);
    EXPECT_TRUE(r.has_clique_component);
    EXPECT_TRUE(r.k_is_square);
    EXPECT_TRUE(r.clique_implies_square);
    EXPECT_TRUE(r.square_group);
    EXPECT_EQ(r.bipartite_groups, 0u);
    EXPECT_TRUE(r.bounds_hold);
}

TEST(Partition, RepeatedDivisorPairCountsOnce) {
    // Three disjoint (1,6) edges: three graph components, one class group.
    const auto p2 = families::path(2);
    const auto one = construct_bipartite_strong(p2, *bipartition_of(p2), {6, FactorPair{1, 6}, std::nullopt});
    const auto g = families::disjoint_union(families::disjoint_union(p2, p2), p2);
    const auto f = union_labeling(union_labeling(one, 2, one, 100), 4, one, 200);
    const auto r = analyze_divisor_partition(g, f, 6);
    EXPECT_EQ(r.components.size(), 3u);
    EXPECT_EQ(r.bipartite_groups, 1u);
    EXPECT_TRUE(r.bounds_hold);
}

TEST(Partition, RejectsLabelingThatIsNotStronglyKUniform) {
    const Labeling f({{0, 1}, {0, 2}});
    EXPECT_THROW(analyze_divisor_partition(families::path(2), f, 6), PreconditionError);
    EXPECT_THROW(analyze_divisor_partition(families::path(2), Labeling({{0, 1}, {5, 6}}), 4), PreconditionError);
    EXPECT_THROW(analyze_divisor_partition(families::path(2), f, 0), PreconditionError);
}
