#include "iasi/json_io.hpp"

#include "iasi/error.hpp"

#include <charconv>
#include <fstream>
#include <istream>

namespace iasi {

namespace {

Json set_json(const SetLabel& s) {
    Json arr = Json::array();
    for (auto e : s.elements()) {
        arr.push_back(e);
    }
    return arr;
}

Json optional_json(const std::optional<std::uint64_t>& v) {
    return v ? Json(*v) : Json(nullptr);
}

VertexId parse_vertex_key(const std::string& key) {
    VertexId v = 0;
    const auto* last = key.data() + key.size();
    auto [ptr, ec] = std::from_chars(key.data(), last, v);
    if (key.empty() || ec != std::errc{} || ptr != last) {
        throw LabelingError("labeling key \"" + key + "\" is not a decimal vertex id");
    }
    return v;
}

struct ViolationJson {
    Json operator()(const DuplicateVertexLabel& d) const {
        return Json{{"kind", "duplicate-vertex-label"}, {"vertices", {d.first, d.second}}, {"label", set_json(d.label)}};
    }
    Json operator()(const DuplicateEdgeLabel& d) const {
        return Json{{"kind", "duplicate-edge-label"},
                    {"edges", {d.first.key(), d.second.key()}},
                    {"label", set_json(d.label)}};
    }
    Json operator()(const WeakEqualityFailure& w) const {
        return Json{{"kind", "not-weak"}, {"edge", w.edge.key()}, {"edge_size", w.edge_size}, {"expected", w.expected}};
    }
    Json operator()(const StrongEqualityFailure& s) const {
        return Json{{"kind", "not-strong"},
                    {"edge", s.edge.key()},
                    {"edge_size", s.edge_size},
                    {"expected", s.expected},
                    {"shared_difference", s.shared_difference}};
    }
};

std::string kind_name(ComponentKind kind) {
    return kind == ComponentKind::divisor_pair ? "divisor-pair" : "square-class";
}

} // namespace

Json labeling_to_json(const Labeling& f) {
    Json j = Json::object();
    for (const auto& [v, label] : f.entries()) {
        j[std::to_string(v)] = set_json(label);
    }
    return j;
}

Labeling labeling_from_json(const Json& j) {
    if (!j.is_object()) {
        throw LabelingError("labeling JSON must be an object mapping vertex ids to arrays");
    }
    Labeling f;
    for (const auto& [key, value] : j.items()) {
        const auto v = parse_vertex_key(key);
        if (f.contains(v)) {
            throw LabelingError("vertex " + std::to_string(v) + " is labeled twice");
        }
        if (!value.is_array()) {
            throw LabelingError("label of vertex " + key + " must be an array");
        }
        std::vector<Element> elements;
        for (const auto& e : value) {
            if (!e.is_number_unsigned()) {
                throw LabelingError("label of vertex " + key + " must contain non-negative integers only");
            }
            elements.push_back(e.get<Element>());
        }
        try {
            f.assign(v, SetLabel(std::move(elements)));
        } catch (const InvalidLabelError& err) {
            throw LabelingError("label of vertex " + key + ": " + err.what());
        }
    }
    return f;
}

Labeling parse_labeling(std::istream& in) {
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& err) {
        throw LabelingError(std::string("malformed labeling JSON: ") + err.what());
    }
    return labeling_from_json(j);
}

Labeling read_labeling_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw LabelingError("cannot open labeling file " + path.string());
    }
    return parse_labeling(in);
}

Json report_to_json(const VerificationReport& report) {
    Json sizes = Json::object();
    for (const auto& es : report.edge_sizes) {
        sizes[es.edge.key()] = es.size;
    }
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        violations.push_back(std::visit(ViolationJson{}, v));
    }
    return Json{{"is_iasi", report.is_iasi},
                {"is_weak", report.is_weak},
                {"is_strong", report.is_strong},
                {"uniform_k", optional_json(report.uniform_k)},
                {"vertex_uniform_l", optional_json(report.vertex_uniform_l)},
                {"completely_uniform", report.completely_uniform},
                {"edge_sizes", sizes},
                {"violations", violations}};
}

Json partition_to_json(const PartitionReport& report) {
    Json classes = Json::array();
    for (const auto& c : report.classes) {
        classes.push_back(Json{{"divisor", c.divisor}, {"vertices", c.vertices}});
    }
    Json components = Json::array();
    for (const auto& c : report.components) {
        components.push_back(Json{{"vertices", c.vertices},
                                  {"kind", kind_name(c.kind)},
                                  {"divisors", {c.low_divisor, c.high_divisor}},
                                  {"is_bipartite", c.is_bipartite},
                                  {"is_clique", c.is_clique}});
    }
    return Json{{"k", report.k},
                {"divisors", report.divisors},
                {"k_is_square", report.k_is_square},
                {"classes", classes},
                {"components", components},
                {"bipartite_groups", report.bipartite_groups},
                {"square_group", report.square_group},
                {"max_groups", report.max_groups},
                {"max_bipartite_groups", report.max_bipartite_groups},
                {"bounds_hold", report.bounds_hold},
                {"has_clique_component", report.has_clique_component},
                {"clique_implies_square", report.clique_implies_square}};
}

Json outcome_to_json(const SearchOutcome& outcome, const SearchSpec& spec) {
    Json j{{"status", to_string(outcome.status)}};
    if (outcome.witness) {
        j["witness"] = labeling_to_json(*outcome.witness);
    }
    j["nodes_visited"] = outcome.nodes_visited;
    j["universe_max"] = spec.universe_max;
    j["max_label_size"] = spec.max_label_size;
    return j;
}

Json reduction_to_json(const ReductionResult& result) {
    Json edges = Json::array();
    for (const auto& e : result.graph.edges()) {
        edges.push_back({e.u, e.v});
    }
    return Json{{"edges", edges},
                {"labeling", labeling_to_json(result.labeling)},
                {"new_edge", result.new_edge.key()},
                {"original_ids", result.original_ids}};
}

} // namespace iasi
