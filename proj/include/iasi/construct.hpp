#pragma once

#include "iasi/error.hpp"
#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"
#include "iasi/setlabel.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace iasi {

/// Label sizes for the two sides of a bipartite construction: side_x labels
/// get m elements, side_y labels get n, so every edge label gets m·n.
struct FactorPair {
    std::uint64_t m = 1;
    std::uint64_t n = 1;

    friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

struct ConstructionParams {
    std::uint64_t k = 0;
    std::optional<FactorPair> factors; // auto-selected when absent
    std::optional<Element> stride;     // auto-selected when absent
};

/// m = largest divisor of k not exceeding sqrt(k), n = k/m.
FactorPair default_factor_pair(std::uint64_t k);

/// Strongly k-uniform IASI of a bipartite graph.
///
/// The x-th vertex of side_x (ascending ids) gets the interval
/// {x·S, ..., x·S + m - 1}; the y-th vertex of side_y gets the progression
/// {y, y + m, ..., y + (n - 1)·m}. Each edge label is then the interval of
/// m·n consecutive integers starting at x·S + y, and S >= |side_y| keeps those
/// starts distinct. Default S = m + n·m·|side_y|. For k = 1 the side_y labels
/// are shifted by one so they cannot coincide with {0}.
Labeling construct_bipartite_strong(const Graph& g, const Bipartition& bp, const ConstructionParams& params);

/// (l², l)-completely uniform strong IASI of K_n.
///
/// Vertex v gets {c_v + t·B^(v+2) : 0 <= t < l} with B = max(l, 2): each
/// difference set sits in its own band [B^(v+2), (l-1)·B^(v+2)], so all are
/// pairwise disjoint. The offsets c_v are Mian-Chowla terms, whose pairwise
/// sums are distinct, so edge labels differ in their minima.
Labeling construct_complete_strong(std::size_t num_vertices, std::uint64_t l);

/// Weakly k-uniform IASI of a bipartite graph: side_x gets singletons
/// {x·S} with S = k·(|side_y| + 1), side_y gets {y·k, ..., y·k + k - 1}.
Labeling construct_weak_uniform(const Graph& g, const Bipartition& bp, std::uint64_t k);

/// First `count` terms of the greedy Sidon sequence 1, 2, 4, 8, 13, 21, ...
std::vector<Element> mian_chowla(std::size_t count);

class ReductionError : public Error {
public:
    enum class Kind {
        vertex_out_of_range,
        degree_not_two,
        neighbors_adjacent,
        input_not_strong,
        shared_difference,
        duplicate_edge_label,
    };

    ReductionError(Kind kind, const std::string& what, std::optional<Element> shared = std::nullopt)
        : Error(what), kind_(kind), shared_(shared) {}

    Kind kind() const noexcept { return kind_; }
    std::optional<Element> shared_difference() const noexcept { return shared_; }

private:
    Kind kind_;
    std::optional<Element> shared_;
};

struct ReductionResult {
    Graph graph;     // ids above the removed vertex shift down by one
    Labeling labeling;
    std::vector<VertexId> original_ids;
    Edge new_edge;   // in the new ids
};

/// Elementary topological reduction at v: delete v (degree 2, neighbours
/// u and w non-adjacent) and join u-w. Succeeds only when the result is still
/// a strong IASI; otherwise throws ReductionError naming the obstruction.
ReductionResult topological_reduce(const Graph& g, const Labeling& f, VertexId v);

} // namespace iasi
