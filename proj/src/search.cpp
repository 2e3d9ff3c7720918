#include "iasi/search.hpp"

#include "iasi/number_theory.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

namespace iasi {

std::string to_string(SearchStatus status) {
    switch (status) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::exhausted_none:
        return "exhausted-none";
    case SearchStatus::budget_exceeded:
        return "budget-exceeded";
    }
    return "unknown";
}

bool satisfies_target(const VerificationReport& report, const SearchTarget& target) {
    switch (target.kind) {
    case TargetKind::any_strong:
        return report.is_iasi && report.is_strong;
    case TargetKind::strong_uniform:
        return report.is_strongly_uniform(target.k);
    case TargetKind::weak_uniform:
        return report.is_weakly_uniform(target.k);
    }
    return false;
}

namespace {

constexpr std::size_t no_index = std::numeric_limits<std::size_t>::max();

void validate(const Graph& g, const SearchSpec& spec) {
    if (g.edge_count() == 0) {
        throw SearchSpecError("search needs a graph with at least one edge");
    }
    if (spec.node_budget == 0) {
        throw SearchSpecError("node budget must be positive");
    }
    if (spec.max_label_size == 0) {
        throw SearchSpecError("max label size must be positive");
    }
    if (spec.universe_max == std::numeric_limits<Element>::max() || spec.universe_max + 1 < spec.max_label_size) {
        throw SearchSpecError("universe {0.." + std::to_string(spec.universe_max) + "} cannot hold labels of size " +
                              std::to_string(spec.max_label_size));
    }
    if (spec.target.kind != TargetKind::any_strong && spec.target.k == 0) {
        throw SearchSpecError("uniform targets need k >= 1");
    }
}

std::vector<std::size_t> allowed_sizes(const SearchSpec& spec) {
    std::vector<std::size_t> sizes;
    switch (spec.target.kind) {
    case TargetKind::any_strong:
        for (std::size_t s = 1; s <= spec.max_label_size; ++s) {
            sizes.push_back(s);
        }
        break;
    case TargetKind::strong_uniform:
        for (auto d : divisors(spec.target.k)) {
            if (d <= spec.max_label_size) {
                sizes.push_back(d);
            }
        }
        break;
    case TargetKind::weak_uniform:
        sizes.push_back(1);
        if (spec.target.k > 1 && spec.target.k <= spec.max_label_size) {
            sizes.push_back(spec.target.k);
        }
        break;
    }
    return sizes;
}

/// Lexicographic s-subsets of {0..universe_max}.
class Combinations {
public:
    Combinations(std::size_t size, Element universe_max) : universe_max_(universe_max), current_(size) {
        for (std::size_t i = 0; i < size; ++i) {
            current_[i] = i;
        }
    }

    const std::vector<Element>& current() const noexcept { return current_; }

    bool advance() {
        const auto s = current_.size();
        for (std::size_t i = s; i-- > 0;) {
            // Position i may reach universe_max - (s - 1 - i).
            if (current_[i] < universe_max_ - (s - 1 - i)) {
                ++current_[i];
                for (std::size_t j = i + 1; j < s; ++j) {
                    current_[j] = current_[j - 1] + 1;
                }
                return true;
            }
        }
        return false;
    }

private:
    Element universe_max_;
    std::vector<Element> current_;
};

enum class SubtreeStatus { found, exhausted, exceeded, cancelled };

struct SubtreeResult {
    SubtreeStatus status = SubtreeStatus::exhausted;
    std::uint64_t nodes = 0;
    std::uint64_t count = 0;
    std::optional<Labeling> witness;
};

class Engine {
public:
    Engine(const Graph& g, const SearchSpec& spec, bool counting)
        : g_(g), spec_(spec), counting_(counting), sizes_(allowed_sizes(spec)), labels_(g.vertex_count()),
          diffs_(g.vertex_count()), required_(g.vertex_count(), 0) {}

    /// Explores every completion of vertex 0 = root, spending at most cap nodes.
    SubtreeResult run(const SetLabel& root, std::uint64_t cap, const std::atomic<std::size_t>* best = nullptr,
                      std::size_t index = 0) {
        cap_ = cap;
        nodes_ = 0;
        count_ = 0;
        best_ = best;
        index_ = index;
        witness_.reset();
        std::fill(required_.begin(), required_.end(), 0);
        const auto status = try_place(0, root);
        return {status, nodes_, count_, std::move(witness_)};
    }

private:
    bool is_uniform() const noexcept { return spec_.target.kind != TargetKind::any_strong; }

    bool size_allowed(std::uint64_t s) const {
        return std::find(sizes_.begin(), sizes_.end(), s) != sizes_.end();
    }

    bool edge_ok(const SetLabel& a, const DifferenceSet& da, const SetLabel& b, const DifferenceSet& db,
                 const SetLabel& sum) const {
        switch (spec_.target.kind) {
        case TargetKind::any_strong:
            return da.disjoint_from(db);
        case TargetKind::strong_uniform:
            return a.size() * b.size() == spec_.target.k && da.disjoint_from(db);
        case TargetKind::weak_uniform:
            return sum.size() == spec_.target.k && sum.size() == std::max(a.size(), b.size());
        }
        return false;
    }

    // Pushes the partner size k/|label| onto unplaced neighbours of v and
    // checks that every constrained unplaced edge can still reach k.
    bool propagate_sizes(VertexId v, std::size_t size) {
        if (!is_uniform()) {
            return true;
        }
        const auto k = spec_.target.k;
        const std::uint64_t partner = k / size;
        for (auto w : g_.neighbors(v)) {
            if (w <= v) {
                continue;
            }
            if (required_[w] != 0 && required_[w] != partner) {
                return false;
            }
            if (!size_allowed(partner)) {
                return false;
            }
            required_[w] = partner;
        }
        for (auto w : g_.neighbors(v)) {
            if (w <= v) {
                continue;
            }
            for (auto x : g_.neighbors(w)) {
                if (x > v && required_[x] != 0 && required_[w] * required_[x] != k) {
                    return false;
                }
            }
        }
        return true;
    }

    SubtreeStatus try_place(VertexId v, const SetLabel& label) {
        if (nodes_ == cap_) {
            return SubtreeStatus::exceeded;
        }
        ++nodes_;
        if (best_ != nullptr && (nodes_ & 0x3ff) == 0 && best_->load(std::memory_order_relaxed) < index_) {
            return SubtreeStatus::cancelled;
        }
        if (vertex_labels_.contains(label)) {
            return SubtreeStatus::exhausted;
        }
        auto diff = difference_set(label);

        std::vector<SetLabel> new_edges;
        for (auto u : g_.neighbors(v)) {
            if (u >= v) {
                break;
            }
            auto sum = sumset(labels_[u].value(), label);
            if (!edge_ok(labels_[u].value(), diffs_[u], label, diff, sum) || edge_labels_.contains(sum) ||
                std::find(new_edges.begin(), new_edges.end(), sum) != new_edges.end()) {
                return SubtreeStatus::exhausted;
            }
            new_edges.push_back(std::move(sum));
        }

        const auto saved_required = required_;
        if (!propagate_sizes(v, label.size())) {
            required_ = saved_required;
            return SubtreeStatus::exhausted;
        }

        labels_[v] = label;
        diffs_[v] = std::move(diff);
        vertex_labels_.insert(label);
        for (const auto& s : new_edges) {
            edge_labels_.insert(s);
        }

        const auto status = descend(v + 1);

        for (const auto& s : new_edges) {
            edge_labels_.erase(s);
        }
        vertex_labels_.erase(label);
        labels_[v].reset();
        required_ = saved_required;
        return status;
    }

    SubtreeStatus descend(VertexId v) {
        if (v == g_.vertex_count()) {
            if (counting_) {
                ++count_;
                return SubtreeStatus::exhausted;
            }
            Labeling f;
            for (VertexId x = 0; x < g_.vertex_count(); ++x) {
                f.assign(x, labels_[x].value());
            }
            witness_ = std::move(f);
            return SubtreeStatus::found;
        }
        auto visit_size = [&](std::size_t s) {
            if (s > spec_.universe_max + 1) {
                return SubtreeStatus::exhausted;
            }
            Combinations combo(s, spec_.universe_max);
            do {
                const auto status = try_place(v, SetLabel(combo.current()));
                if (status != SubtreeStatus::exhausted) {
                    return status;
                }
            } while (combo.advance());
            return SubtreeStatus::exhausted;
        };
        if (required_[v] != 0) {
            return visit_size(required_[v]);
        }
        for (auto s : sizes_) {
            if (const auto status = visit_size(s); status != SubtreeStatus::exhausted) {
                return status;
            }
        }
        return SubtreeStatus::exhausted;
    }

    const Graph& g_;
    const SearchSpec& spec_;
    bool counting_;
    std::vector<std::size_t> sizes_;

    std::vector<std::optional<SetLabel>> labels_;
    std::vector<DifferenceSet> diffs_;
    std::vector<std::uint64_t> required_; // 0 = unconstrained
    std::set<SetLabel> vertex_labels_;
    std::set<SetLabel> edge_labels_;

    std::uint64_t cap_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t count_ = 0;
    const std::atomic<std::size_t>* best_ = nullptr;
    std::size_t index_ = 0;
    std::optional<Labeling> witness_;
};

std::vector<SetLabel> root_candidates(const SearchSpec& spec) {
    std::vector<SetLabel> out;
    for (auto s : allowed_sizes(spec)) {
        if (s > spec.universe_max + 1) {
            continue;
        }
        Combinations combo(s, spec.universe_max);
        do {
            out.emplace_back(combo.current());
        } while (combo.advance());
    }
    return out;
}

SearchOutcome search_sequential(const Graph& g, const SearchSpec& spec, const std::vector<SetLabel>& roots) {
    Engine engine(g, spec, false);
    SearchOutcome outcome;
    for (const auto& root : roots) {
        auto sub = engine.run(root, spec.node_budget - outcome.nodes_visited);
        outcome.nodes_visited += sub.nodes;
        if (sub.status == SubtreeStatus::exceeded) {
            outcome.status = SearchStatus::budget_exceeded;
            return outcome;
        }
        if (sub.status == SubtreeStatus::found) {
            outcome.status = SearchStatus::found;
            outcome.witness = std::move(sub.witness);
            return outcome;
        }
    }
    outcome.status = SearchStatus::exhausted_none;
    return outcome;
}

// Each root subtree is explored with the full budget as its cap; the results
// are then replayed in root order, which reproduces the sequential node count.
SearchOutcome search_parallel(const Graph& g, const SearchSpec& spec, const std::vector<SetLabel>& roots,
                              unsigned workers) {
    std::vector<SubtreeResult> results(roots.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{no_index};

    auto work = [&] {
        Engine engine(g, spec, false);
        for (;;) {
            const auto i = next.fetch_add(1);
            if (i >= roots.size()) {
                return;
            }
            if (best.load() < i) {
                results[i].status = SubtreeStatus::cancelled;
                continue;
            }
            results[i] = engine.run(roots[i], spec.node_budget, &best, i);
            if (results[i].status == SubtreeStatus::found || results[i].status == SubtreeStatus::exceeded) {
                auto current = best.load();
                while (i < current && !best.compare_exchange_weak(current, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back(work);
    }
    for (auto& t : pool) {
        t.join();
    }

    SearchOutcome outcome;
    for (auto& sub : results) {
        const auto remaining = spec.node_budget - outcome.nodes_visited;
        if (sub.status == SubtreeStatus::exceeded || sub.nodes > remaining) {
            outcome.status = SearchStatus::budget_exceeded;
            outcome.nodes_visited = spec.node_budget;
            return outcome;
        }
        outcome.nodes_visited += sub.nodes;
        if (sub.status == SubtreeStatus::found) {
            outcome.status = SearchStatus::found;
            outcome.witness = std::move(sub.witness);
            return outcome;
        }
    }
    outcome.status = SearchStatus::exhausted_none;
    return outcome;
}

} // namespace

SearchOutcome brute_force_search(const Graph& g, const SearchSpec& spec) {
    validate(g, spec);
    const auto roots = root_candidates(spec);
    unsigned workers = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec.threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(roots.size(), 1)));
    if (workers <= 1) {
        return search_sequential(g, spec, roots);
    }
    return search_parallel(g, spec, roots, workers);
}

std::uint64_t count_labelings(const Graph& g, const SearchSpec& spec) {
    validate(g, spec);
    Engine engine(g, spec, true);
    std::uint64_t nodes = 0;
    std::uint64_t count = 0;
    for (const auto& root : root_candidates(spec)) {
        auto sub = engine.run(root, spec.node_budget - nodes);
        nodes += sub.nodes;
        if (sub.status == SubtreeStatus::exceeded) {
            throw BudgetExceeded("count_labelings exceeded the node budget of " + std::to_string(spec.node_budget));
        }
        count += sub.count;
    }
    return count;
}

} // namespace iasi
