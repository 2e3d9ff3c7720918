#include "iasi/graph.hpp"

#include "iasi/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>

namespace iasi {

std::string Edge::key() const {
    return std::to_string(u) + "-" + std::to_string(v);
}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges) {
    Graph g;
    g.adjacency_.resize(vertex_count);
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= vertex_count || b >= vertex_count) {
            throw GraphError("edge " + std::to_string(a) + "-" + std::to_string(b) +
                             " references a vertex outside [0, " + std::to_string(vertex_count) + ")");
        }
        if (a == b) {
            throw GraphError("self-loop at vertex " + std::to_string(a));
        }
        g.edges_.push_back(Edge::between(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
        throw GraphError("duplicate edge " + dup->key());
    }
    for (const auto& e : g.edges_) {
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto& adj = g.adjacency_[v];
        if (adj.empty()) {
            throw GraphError("isolated vertex " + std::to_string(v));
        }
        std::sort(adj.begin(), adj.end());
    }
    return g;
}

Graph Graph::from_edges(std::size_t vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    return from_edges(vertex_count, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()));
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    if (a >= vertex_count() || b >= vertex_count()) {
        return false;
    }
    const auto& adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

namespace {

bool parse_id(std::string_view token, VertexId& out) {
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::size_t vertex_count = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string a;
        std::string b;
        std::string extra;
        VertexId u = 0;
        VertexId v = 0;
        if (!(fields >> a >> b) || (fields >> extra) || !parse_id(a, u) || !parse_id(b, v)) {
            throw GraphError("line " + std::to_string(line_no) +
                             ": expected two non-negative integer vertex ids, got \"" + line + "\"");
        }
        if (u == v) {
            throw GraphError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
        }
        edges.emplace_back(u, v);
        vertex_count = std::max<std::size_t>(vertex_count, std::size_t{std::max(u, v)} + 1);
    }
    return Graph::from_edges(vertex_count, edges);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw GraphError("cannot open graph file " + path.string());
    }
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    for (const auto& e : g.edges()) {
        os << e.u << ' ' << e.v << '\n';
    }
    return os.str();
}

bool is_valid_bipartition(const Graph& g, const Bipartition& bp) {
    std::vector<int> side(g.vertex_count(), -1);
    auto mark = [&](std::span<const VertexId> vs, int s) {
        for (auto v : vs) {
            if (v >= g.vertex_count() || side[v] != -1) {
                return false;
            }
            side[v] = s;
        }
        return true;
    };
    if (!mark(bp.side_x, 0) || !mark(bp.side_y, 1)) {
        return false;
    }
    if (std::find(side.begin(), side.end(), -1) != side.end()) {
        return false;
    }
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return side[e.u] != side[e.v]; });
}

std::optional<Bipartition> bipartition_of(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    for (VertexId start = 0; start < g.vertex_count(); ++start) {
        if (color[start] != -1) {
            continue;
        }
        color[start] = 0;
        std::queue<VertexId> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            const auto v = frontier.front();
            frontier.pop();
            for (auto w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    frontier.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition bp;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        (color[v] == 0 ? bp.side_x : bp.side_y).push_back(v);
    }
    return bp;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> seen(g.vertex_count(), false);
    for (VertexId start = 0; start < g.vertex_count(); ++start) {
        if (seen[start]) {
            continue;
        }
        std::vector<VertexId> component;
        std::vector<VertexId> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (auto w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
    }
    return out;
}

bool is_clique(const Graph& g, std::span<const VertexId> vertices) {
    for (auto v : vertices) {
        if (v >= g.vertex_count()) {
            throw GraphError("vertex " + std::to_string(v) + " out of range");
        }
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i] != vertices[j] && !g.has_edge(vertices[i], vertices[j])) {
                return false;
            }
        }
    }
    return true;
}

Subgraph edge_subgraph(const Graph& g, std::span<const Edge> kept) {
    constexpr auto unmapped = static_cast<VertexId>(-1);
    std::vector<VertexId> new_id(g.vertex_count(), unmapped);
    for (const auto& e : kept) {
        if (!g.has_edge(e.u, e.v)) {
            throw GraphError("edge " + e.key() + " is not in the parent graph");
        }
        new_id[e.u] = 0;
        new_id[e.v] = 0;
    }
    Subgraph sub;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (new_id[v] != unmapped) {
            new_id[v] = static_cast<VertexId>(sub.original_ids.size());
            sub.original_ids.push_back(v);
        }
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(kept.size());
    for (const auto& e : kept) {
        edges.emplace_back(new_id[e.u], new_id[e.v]);
    }
    sub.graph = Graph::from_edges(sub.original_ids.size(), edges);
    return sub;
}

namespace families {

namespace {
using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

VertexId id(std::size_t v) { return static_cast<VertexId>(v); }
} // namespace

Graph path(std::size_t vertices) {
    EdgeList edges;
    for (std::size_t v = 1; v < vertices; ++v) {
        edges.emplace_back(id(v - 1), id(v));
    }
    return Graph::from_edges(vertices, edges);
}

Graph cycle(std::size_t vertices) {
    if (vertices < 3) {
        throw GraphError("a cycle needs at least 3 vertices");
    }
    EdgeList edges;
    for (std::size_t v = 0; v < vertices; ++v) {
        edges.emplace_back(id(v), id((v + 1) % vertices));
    }
    return Graph::from_edges(vertices, edges);
}

Graph complete(std::size_t vertices) {
    EdgeList edges;
    for (std::size_t a = 0; a < vertices; ++a) {
        for (std::size_t b = a + 1; b < vertices; ++b) {
            edges.emplace_back(id(a), id(b));
        }
    }
    return Graph::from_edges(vertices, edges);
}

Graph complete_bipartite(std::size_t left, std::size_t right) {
    EdgeList edges;
    for (std::size_t a = 0; a < left; ++a) {
        for (std::size_t b = 0; b < right; ++b) {
            edges.emplace_back(id(a), id(left + b));
        }
    }
    return Graph::from_edges(left + right, edges);
}

Graph star(std::size_t leaves) {
    return complete_bipartite(1, leaves);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    EdgeList edges;
    for (const auto& e : a.edges()) {
        edges.emplace_back(e.u, e.v);
    }
    const auto shift = id(a.vertex_count());
    for (const auto& e : b.edges()) {
        edges.emplace_back(e.u + shift, e.v + shift);
    }
    return Graph::from_edges(a.vertex_count() + b.vertex_count(), edges);
}

} // namespace families

} // namespace iasi
