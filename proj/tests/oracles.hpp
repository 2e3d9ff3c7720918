#pragma once

// Test-only reference computations. Everything here works on raw vectors and
// brute force, never on the library's arithmetic, so it can check it.

#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"
#include "iasi/search.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace iasi::oracle {

using Raw = std::vector<std::uint64_t>;

inline std::set<std::uint64_t> sumset(const Raw& a, const Raw& b) {
    std::set<std::uint64_t> out;
    for (auto x : a) {
        for (auto y : b) {
            out.insert(x + y);
        }
    }
    return out;
}

// Signed, unordered differences: the unnormalized D_A.
inline std::set<long long> signed_differences(const Raw& a) {
    std::set<long long> out;
    for (auto x : a) {
        for (auto y : a) {
            if (x != y) {
                out.insert(static_cast<long long>(x) - static_cast<long long>(y));
            }
        }
    }
    return out;
}

inline bool differences_disjoint(const Raw& a, const Raw& b) {
    const auto da = signed_differences(a);
    const auto db = signed_differences(b);
    return std::none_of(da.begin(), da.end(), [&](long long d) { return db.contains(d); });
}

inline Raw raw(const SetLabel& s) {
    return Raw(s.elements().begin(), s.elements().end());
}

/// Every nonempty subset of {0..universe_max} with at most max_size elements,
/// ascending, in no particular order.
inline std::vector<Raw> subsets(std::uint64_t universe_max, std::size_t max_size) {
    std::vector<Raw> out;
    const auto n = universe_max + 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Raw s;
        for (std::uint64_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                s.push_back(i);
            }
        }
        if (s.size() <= max_size) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

/// Bipartite iff some 2-coloring of the vertices is proper. Exponential.
inline bool bipartite_by_coloring(const Graph& g) {
    const auto n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool proper = true;
        for (const auto& e : g.edges()) {
            proper = proper && (((mask >> e.u) & 1) != ((mask >> e.v) & 1));
        }
        if (proper) {
            return true;
        }
    }
    return false;
}

/// Target predicate evaluated from raw sumsets.
inline bool satisfies(const Graph& g, const std::vector<Raw>& labels, const SearchTarget& target) {
    std::set<Raw> seen_vertices(labels.begin(), labels.end());
    if (seen_vertices.size() != labels.size()) {
        return false;
    }
    std::set<std::set<std::uint64_t>> seen_edges;
    for (const auto& e : g.edges()) {
        const auto& a = labels[e.u];
        const auto& b = labels[e.v];
        auto s = sumset(a, b);
        const auto size = s.size();
        if (!seen_edges.insert(std::move(s)).second) {
            return false;
        }
        switch (target.kind) {
        case TargetKind::any_strong:
            if (size != a.size() * b.size()) return false;
            break;
        case TargetKind::strong_uniform:
            if (size != a.size() * b.size() || size != target.k) return false;
            break;
        case TargetKind::weak_uniform:
            if (size != std::max(a.size(), b.size()) || size != target.k) return false;
            break;
        }
    }
    return true;
}

/// Unpruned enumeration of every labeling over the candidate family.
inline std::uint64_t count_unpruned(const Graph& g, std::uint64_t universe_max, std::size_t max_size,
                                    const SearchTarget& target) {
    const auto candidates = subsets(universe_max, max_size);
    const auto n = g.vertex_count();
    std::vector<std::size_t> index(n, 0);
    std::vector<Raw> labels(n);
    std::uint64_t count = 0;
    for (;;) {
        for (std::size_t v = 0; v < n; ++v) {
            labels[v] = candidates[index[v]];
        }
        if (satisfies(g, labels, target)) {
            ++count;
        }
        std::size_t pos = 0;
        while (pos < n && ++index[pos] == candidates.size()) {
            index[pos++] = 0;
        }
        if (pos == n) {
            return count;
        }
    }
}

/// Graphs on 2..4 vertices without isolated vertices, one per isomorphism class.
inline std::vector<std::pair<const char*, Graph>> small_graphs() {
    using families::complete;
    using families::cycle;
    using families::path;
    return {
        {"P2", path(2)},
        {"P3", path(3)},
        {"K3", complete(3)},
        {"2K2", Graph::from_edges(4, {{0, 1}, {2, 3}})},
        {"P4", path(4)},
        {"K1,3", families::star(3)},
        {"C4", cycle(4)},
        {"paw", Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})},
        {"diamond", Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})},
        {"K4", complete(4)},
    };
}

/// Random bipartite graph with no isolated vertices: sides of size left and
/// right, each cross pair present with probability p, plus one forced edge
/// for any vertex left uncovered.
inline Graph random_bipartite(std::mt19937& rng, std::size_t left, std::size_t right, double p) {
    std::bernoulli_distribution coin(p);
    std::uniform_int_distribution<std::size_t> pick_left(0, left - 1);
    std::uniform_int_distribution<std::size_t> pick_right(0, right - 1);
    std::set<std::pair<VertexId, VertexId>> edges;
    for (std::size_t a = 0; a < left; ++a) {
        for (std::size_t b = 0; b < right; ++b) {
            if (coin(rng)) {
                edges.emplace(static_cast<VertexId>(a), static_cast<VertexId>(left + b));
            }
        }
    }
    std::vector<bool> covered(left + right, false);
    for (auto [a, b] : edges) {
        covered[a] = covered[b] = true;
    }
    for (std::size_t v = 0; v < left + right; ++v) {
        if (!covered[v]) {
            const auto a = v < left ? v : pick_left(rng);
            const auto b = v < left ? left + pick_right(rng) : v;
            edges.emplace(static_cast<VertexId>(a), static_cast<VertexId>(b));
            covered[a] = covered[b] = true;
        }
    }
    std::vector<std::pair<VertexId, VertexId>> list(edges.begin(), edges.end());
    return Graph::from_edges(left + right, list);
}

} // namespace iasi::oracle
