#pragma once

#include "iasi/graph.hpp"
#include "iasi/setlabel.hpp"

#include <map>
#include <span>
#include <vector>

namespace iasi {

/// Assignment of SetLabels to vertex ids. Totality against a particular graph
/// is checked by require_total, not by construction, so a labeling read from a
/// file can be diagnosed against the graph it claims to label.
class Labeling {
public:
    Labeling() = default;
    /// Vertex i gets by_vertex[i].
    explicit Labeling(std::vector<SetLabel> by_vertex);

    void assign(VertexId v, SetLabel label);
    /// Throws LabelingError when v is unlabeled.
    const SetLabel& at(VertexId v) const;
    bool contains(VertexId v) const { return labels_.contains(v); }
    std::size_t size() const noexcept { return labels_.size(); }
    const std::map<VertexId, SetLabel>& entries() const noexcept { return labels_; }

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    std::map<VertexId, SetLabel> labels_;
};

/// Throws LabelingError if some vertex of g is unlabeled or f labels an id
/// outside V(g).
void require_total(const Graph& g, const Labeling& f);

/// Labeling of a renumbered subgraph: new vertex i gets f(original_ids[i]).
Labeling restrict_labeling(const Labeling& f, std::span<const VertexId> original_ids);

} // namespace iasi
