#include "iasi/labeling.hpp"

#include "iasi/error.hpp"

namespace iasi {

Labeling::Labeling(std::vector<SetLabel> by_vertex) {
    for (std::size_t v = 0; v < by_vertex.size(); ++v) {
        labels_.emplace(static_cast<VertexId>(v), std::move(by_vertex[v]));
    }
}

void Labeling::assign(VertexId v, SetLabel label) {
    labels_.insert_or_assign(v, std::move(label));
}

const SetLabel& Labeling::at(VertexId v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) {
        throw LabelingError("vertex " + std::to_string(v) + " has no label");
    }
    return it->second;
}

void require_total(const Graph& g, const Labeling& f) {
    for (const auto& [v, label] : f.entries()) {
        if (v >= g.vertex_count()) {
            throw LabelingError("labeling references unknown vertex " + std::to_string(v) + " (graph has " +
                                std::to_string(g.vertex_count()) + " vertices)");
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!f.contains(v)) {
            throw LabelingError("labeling is missing vertex " + std::to_string(v));
        }
    }
}

Labeling restrict_labeling(const Labeling& f, std::span<const VertexId> original_ids) {
    Labeling out;
    for (std::size_t v = 0; v < original_ids.size(); ++v) {
        out.assign(static_cast<VertexId>(v), f.at(original_ids[v]));
    }
    return out;
}

} // namespace iasi
