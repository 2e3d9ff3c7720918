#pragma once

#include "iasi/error.hpp"
#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"
#include "iasi/setlabel.hpp"
#include "iasi/verify.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace iasi {

enum class TargetKind { any_strong, strong_uniform, weak_uniform };

struct SearchTarget {
    TargetKind kind = TargetKind::any_strong;
    std::uint64_t k = 0; // unused for any_strong

    static SearchTarget any_strong() { return {TargetKind::any_strong, 0}; }
    static SearchTarget strong_uniform(std::uint64_t k) { return {TargetKind::strong_uniform, k}; }
    static SearchTarget weak_uniform(std::uint64_t k) { return {TargetKind::weak_uniform, k}; }
};

inline constexpr std::uint64_t default_node_budget = 10'000'000;

/// Exhaustive search over labels drawn from {0..universe_max} with at most
/// max_label_size elements. A node is one candidate label tried for one vertex.
struct SearchSpec {
    Element universe_max = 0;
    std::size_t max_label_size = 1;
    SearchTarget target;
    std::uint64_t node_budget = default_node_budget;
    unsigned threads = 1; // 0 = hardware concurrency
};

enum class SearchStatus { found, exhausted_none, budget_exceeded };

std::string to_string(SearchStatus status);

/// exhausted_none only covers the universe bound and size cap of the SearchSpec.
struct SearchOutcome {
    SearchStatus status = SearchStatus::exhausted_none;
    std::optional<Labeling> witness;
    std::uint64_t nodes_visited = 0;
};

class SearchSpecError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Whether a verified labeling meets the target. Every target requires an IASI.
bool satisfies_target(const VerificationReport& report, const SearchTarget& target);

/// Depth-first search, vertices in ascending id order, candidate labels by
/// size then lexicographically. Returns the first witness in that order.
/// Prunes duplicate vertex labels, duplicate edge labels, intersecting
/// difference sets (strong targets) and label sizes that cannot multiply to
/// or reach k (uniform targets). The outcome, witness and node count do not
/// depend on spec.threads.
SearchOutcome brute_force_search(const Graph& g, const SearchSpec& spec);

/// Number of labelings meeting the target within the bounds, by the same
/// pruned traversal. Throws BudgetExceeded past spec.node_budget nodes.
std::uint64_t count_labelings(const Graph& g, const SearchSpec& spec);

} // namespace iasi
