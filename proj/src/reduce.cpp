#include "iasi/construct.hpp"
#include "iasi/verify.hpp"

namespace iasi {

ReductionResult topological_reduce(const Graph& g, const Labeling& f, VertexId v) {
    using Kind = ReductionError::Kind;
    if (v >= g.vertex_count()) {
        throw ReductionError(Kind::vertex_out_of_range, "vertex " + std::to_string(v) + " is not in the graph");
    }
    if (g.degree(v) != 2) {
        throw ReductionError(Kind::degree_not_two,
                             "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ", need 2");
    }
    const auto u = g.neighbors(v)[0];
    const auto w = g.neighbors(v)[1];
    if (g.has_edge(u, w)) {
        throw ReductionError(Kind::neighbors_adjacent, "neighbours " + std::to_string(u) + " and " +
                                                           std::to_string(w) + " are already adjacent");
    }
    const auto before = verify(g, f);
    if (!before.is_iasi || !before.is_strong) {
        throw ReductionError(Kind::input_not_strong, "input labeling is not a strong IASI");
    }
    if (auto d = shared_difference(f.at(u), f.at(w))) {
        throw ReductionError(Kind::shared_difference,
                             "labels of " + std::to_string(u) + " and " + std::to_string(w) + " share difference " +
                                 std::to_string(*d),
                             d);
    }
    const auto joined = sumset(f.at(u), f.at(w));
    for (const auto& e : g.edges()) {
        if (e.u == v || e.v == v) {
            continue;
        }
        if (sumset(f.at(e.u), f.at(e.v)) == joined) {
            throw ReductionError(Kind::duplicate_edge_label,
                                 "new edge label " + joined.to_string() + " duplicates the label of edge " + e.key());
        }
    }

    auto renumber = [v](VertexId x) { return x > v ? x - 1 : x; };
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : g.edges()) {
        if (e.u != v && e.v != v) {
            edges.emplace_back(renumber(e.u), renumber(e.v));
        }
    }
    edges.emplace_back(renumber(u), renumber(w));

    ReductionResult out;
    out.graph = Graph::from_edges(g.vertex_count() - 1, edges);
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (x != v) {
            out.original_ids.push_back(x);
        }
    }
    out.labeling = restrict_labeling(f, out.original_ids);
    out.new_edge = Edge::between(renumber(u), renumber(w));
    return out;
}

} // namespace iasi
