#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace iasi {

using VertexId = std::uint32_t;

/// Undirected edge, normalized so that u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    static Edge between(VertexId a, VertexId b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }

    /// "u-v" with u < v; the key used in report JSON.
    std::string key() const;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on dense vertex ids [0, vertex_count).
///
/// Construction rejects self-loops, duplicate edges, out-of-range ids and
/// isolated vertices. Edges are kept sorted; adjacency lists are ascending.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on any invariant violation.
    static Graph from_edges(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges);
    static Graph from_edges(std::size_t vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
    bool has_edge(VertexId a, VertexId b) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
};

/// Reads "u v" lines; '#' comment lines and blank lines are skipped.
/// vertex_count is one more than the largest id seen.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

/// One "u v" line per edge, sorted.
std::string to_edge_list(const Graph& g);

struct Bipartition {
    std::vector<VertexId> side_x;
    std::vector<VertexId> side_y;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Sides partition V(g) and every edge crosses.
bool is_valid_bipartition(const Graph& g, const Bipartition& bp);

/// Deterministic 2-coloring: the lowest id of each component goes to side_x.
/// Empty optional when some component has an odd cycle.
std::optional<Bipartition> bipartition_of(const Graph& g);

/// Components as ascending id lists, ordered by their minimum id.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// Every pair of `vertices` is adjacent. Throws GraphError for ids out of range.
bool is_clique(const Graph& g, std::span<const VertexId> vertices);

/// A graph built from a subset of another graph's edges, with the surviving
/// vertices renumbered densely. original_ids[new_id] is the id in the parent.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> original_ids;
};

/// Keeps only `kept` edges and drops vertices they no longer touch.
/// Every kept edge must exist in g.
Subgraph edge_subgraph(const Graph& g, std::span<const Edge> kept);

/// Named families used throughout tests and tools. Paths count vertices:
/// path(2) is a single edge.
namespace families {
Graph path(std::size_t vertices);
Graph cycle(std::size_t vertices);
Graph complete(std::size_t vertices);
Graph complete_bipartite(std::size_t left, std::size_t right);
Graph star(std::size_t leaves);
Graph disjoint_union(const Graph& a, const Graph& b);
} // namespace families

} // namespace iasi
