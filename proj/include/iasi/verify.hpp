#pragma once

#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"
#include "iasi/setlabel.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace iasi {

struct EdgeSize {
    Edge edge;
    std::size_t size = 0;

    friend bool operator==(const EdgeSize&, const EdgeSize&) = default;
};

// Violation witnesses. Pairs are reported as (first occurrence, later
// occurrence) in ascending vertex/edge order.
struct DuplicateVertexLabel {
    VertexId first = 0;
    VertexId second = 0;
    SetLabel label;
};

struct DuplicateEdgeLabel {
    Edge first;
    Edge second;
    SetLabel label;
};

struct WeakEqualityFailure {
    Edge edge;
    std::size_t edge_size = 0;
    std::size_t expected = 0; // max of endpoint sizes
};

struct StrongEqualityFailure {
    Edge edge;
    std::size_t edge_size = 0;
    std::size_t expected = 0; // product of endpoint sizes
    Element shared_difference = 0;
};

using Violation = std::variant<DuplicateVertexLabel, DuplicateEdgeLabel, WeakEqualityFailure, StrongEqualityFailure>;

/// Every classification of a labeled graph. Flags are computed independently:
/// is_weak and is_strong are edge-wise size conditions and do not imply is_iasi.
struct VerificationReport {
    bool is_iasi = false;
    bool is_weak = false;
    bool is_strong = false;
    std::optional<std::uint64_t> uniform_k;
    std::optional<std::uint64_t> vertex_uniform_l;
    bool completely_uniform = false;
    std::vector<EdgeSize> edge_sizes; // sorted by edge
    std::vector<Violation> violations;

    bool is_strongly_uniform(std::uint64_t k) const { return is_iasi && is_strong && uniform_k == k; }
    bool is_weakly_uniform(std::uint64_t k) const { return is_iasi && is_weak && uniform_k == k; }
};

/// Throws LabelingError unless f is total on V(g).
VerificationReport verify(const Graph& g, const Labeling& f);

/// Every edge has an endpoint with a singleton label.
bool check_weak_characterization(const Graph& g, const Labeling& f);

/// Adjacent labels have disjoint difference sets.
bool check_strong_criterion(const Graph& g, const Labeling& f);

} // namespace iasi
