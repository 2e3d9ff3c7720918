#include "iasi/verify.hpp"

#include <algorithm>
#include <map>

namespace iasi {

VerificationReport verify(const Graph& g, const Labeling& f) {
    require_total(g, f);
    VerificationReport report;

    bool vertex_injective = true;
    std::map<SetLabel, VertexId> first_vertex;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& label = f.at(v);
        auto [it, inserted] = first_vertex.emplace(label, v);
        if (!inserted) {
            vertex_injective = false;
            report.violations.emplace_back(DuplicateVertexLabel{it->second, v, label});
        }
    }

    bool edge_injective = true;
    bool weak = true;
    bool strong = true;
    std::map<SetLabel, Edge> first_edge;
    for (const auto& e : g.edges()) {
        const auto& a = f.at(e.u);
        const auto& b = f.at(e.v);
        auto sum = sumset(a, b);
        const auto size = sum.size();
        report.edge_sizes.push_back({e, size});

        if (const auto expected = std::max(a.size(), b.size()); size != expected) {
            weak = false;
            report.violations.emplace_back(WeakEqualityFailure{e, size, expected});
        }
        if (const auto expected = a.size() * b.size(); size != expected) {
            strong = false;
            report.violations.emplace_back(StrongEqualityFailure{e, size, expected, shared_difference(a, b).value()});
        }
        auto [it, inserted] = first_edge.emplace(std::move(sum), e);
        if (!inserted) {
            edge_injective = false;
            report.violations.emplace_back(DuplicateEdgeLabel{it->second, e, it->first});
        }
    }

    report.is_iasi = vertex_injective && edge_injective;
    report.is_weak = weak;
    report.is_strong = strong;

    if (!report.edge_sizes.empty()) {
        const auto k = report.edge_sizes.front().size;
        if (std::all_of(report.edge_sizes.begin(), report.edge_sizes.end(),
                        [k](const EdgeSize& es) { return es.size == k; })) {
            report.uniform_k = k;
        }
    }
    if (g.vertex_count() > 0) {
        const auto l = f.at(0).size();
        bool uniform = true;
        for (VertexId v = 1; v < g.vertex_count(); ++v) {
            uniform = uniform && f.at(v).size() == l;
        }
        if (uniform) {
            report.vertex_uniform_l = l;
        }
    }
    report.completely_uniform = report.uniform_k.has_value() && report.vertex_uniform_l.has_value();
    return report;
}

bool check_weak_characterization(const Graph& g, const Labeling& f) {
    require_total(g, f);
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return f.at(e.u).size() == 1 || f.at(e.v).size() == 1; });
}

bool check_strong_criterion(const Graph& g, const Labeling& f) {
    require_total(g, f);
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return difference_set(f.at(e.u)).disjoint_from(difference_set(f.at(e.v))); });
}

} // namespace iasi
