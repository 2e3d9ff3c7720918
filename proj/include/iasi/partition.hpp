#pragma once

#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"

#include <cstdint>
#include <vector>

namespace iasi {

/// Vertices whose label size is `divisor`.
struct DivisorClass {
    std::uint64_t divisor = 0;
    std::vector<VertexId> vertices;
};

enum class ComponentKind {
    divisor_pair, // sizes d and k/d with d != k/d; necessarily bipartite
    square_class, // every size equals sqrt(k)
};

struct ComponentReport {
    std::vector<VertexId> vertices;
    ComponentKind kind = ComponentKind::divisor_pair;
    std::uint64_t low_divisor = 0;  // d
    std::uint64_t high_divisor = 0; // k/d; equal to d for a square class
    bool is_bipartite = false;
    bool is_clique = false; // complete on >= 3 vertices
};

/// Divisor-class structure of a strongly k-uniform labeling.
///
/// The component bounds are counted over occupied class groups: each
/// unordered pair {d, k/d} with d != k/d that holds vertices is one bipartite
/// group, and the sqrt(k) class, when occupied, is the one square group.
struct PartitionReport {
    std::uint64_t k = 0;
    std::vector<std::uint64_t> divisors;
    bool k_is_square = false;
    std::vector<DivisorClass> classes; // one per divisor, possibly empty
    std::vector<ComponentReport> components;

    std::size_t bipartite_groups = 0;
    bool square_group = false;
    std::size_t max_groups = 0;           // n/2 non-square, (n+1)/2 square
    std::size_t max_bipartite_groups = 0; // n/2 non-square, (n-1)/2 square
    bool bounds_hold = false;

    bool has_clique_component = false;
    bool clique_implies_square = false; // has_clique_component => k_is_square
};

/// Throws PreconditionError unless verify(g, f) is strongly k-uniform.
PartitionReport analyze_divisor_partition(const Graph& g, const Labeling& f, std::uint64_t k);

} // namespace iasi
