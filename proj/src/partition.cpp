#include "iasi/partition.hpp"

#include "iasi/error.hpp"
#include "iasi/number_theory.hpp"
#include "iasi/verify.hpp"

#include <algorithm>
#include <set>

namespace iasi {

PartitionReport analyze_divisor_partition(const Graph& g, const Labeling& f, std::uint64_t k) {
    if (k == 0) {
        throw PreconditionError("k must be positive");
    }
    if (!verify(g, f).is_strongly_uniform(k)) {
        throw PreconditionError("labeling is not a strongly " + std::to_string(k) + "-uniform IASI");
    }

    PartitionReport report;
    report.k = k;
    report.divisors = divisors(k);
    report.k_is_square = is_perfect_square(k);
    for (auto d : report.divisors) {
        report.classes.push_back({d, {}});
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto size = f.at(v).size();
        auto cls = std::find_if(report.classes.begin(), report.classes.end(),
                                [size](const DivisorClass& c) { return c.divisor == size; });
        // Strong uniformity makes every size a divisor of k.
        cls->vertices.push_back(v);
    }

    std::set<std::uint64_t> occupied_pairs;
    for (auto& vertices : connected_components(g)) {
        ComponentReport comp;
        const auto a = f.at(vertices.front()).size();
        const auto b = k / a;
        comp.low_divisor = std::min<std::uint64_t>(a, b);
        comp.high_divisor = std::max<std::uint64_t>(a, b);
        comp.kind = comp.low_divisor == comp.high_divisor ? ComponentKind::square_class : ComponentKind::divisor_pair;
        if (comp.kind == ComponentKind::divisor_pair) {
            occupied_pairs.insert(comp.low_divisor);
        } else {
            report.square_group = true;
        }

        const auto sub = edge_subgraph(g, [&] {
            std::vector<Edge> inside;
            for (const auto& e : g.edges()) {
                if (std::binary_search(vertices.begin(), vertices.end(), e.u)) {
                    inside.push_back(e);
                }
            }
            return inside;
        }());
        comp.is_bipartite = bipartition_of(sub.graph).has_value();
        comp.is_clique = vertices.size() >= 3 && is_clique(g, vertices);
        report.has_clique_component = report.has_clique_component || comp.is_clique;
        comp.vertices = std::move(vertices);
        report.components.push_back(std::move(comp));
    }

    const auto n = report.divisors.size();
    report.bipartite_groups = occupied_pairs.size();
    if (report.k_is_square) {
        report.max_groups = (n + 1) / 2;
        report.max_bipartite_groups = (n - 1) / 2;
    } else {
        report.max_groups = n / 2;
        report.max_bipartite_groups = n / 2;
    }
    const auto groups = report.bipartite_groups + (report.square_group ? 1 : 0);
    report.bounds_hold = groups <= report.max_groups && report.bipartite_groups <= report.max_bipartite_groups;
    report.clique_implies_square = !report.has_clique_component || report.k_is_square;
    return report;
}

} // namespace iasi
