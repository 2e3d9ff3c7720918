#include "iasi/construct.hpp"

#include "iasi/number_theory.hpp"

#include <algorithm>
#include <set>

namespace iasi {

namespace {

void require_bipartition(const Graph& g, const Bipartition& bp) {
    if (!is_valid_bipartition(g, bp)) {
        throw PreconditionError("graph is not bipartite under the given bipartition");
    }
}

std::vector<Element> progression(Element start, Element step, std::uint64_t count) {
    std::vector<Element> out;
    out.reserve(count);
    for (std::uint64_t t = 0; t < count; ++t) {
        out.push_back(checked_add(start, checked_mul(t, step)));
    }
    return out;
}

} // namespace

FactorPair default_factor_pair(std::uint64_t k) {
    if (k == 0) {
        throw PreconditionError("k must be positive");
    }
    std::uint64_t m = 1;
    for (auto d : divisors(k)) {
        if (d * d <= k) {
            m = d;
        }
    }
    return {m, k / m};
}

Labeling construct_bipartite_strong(const Graph& g, const Bipartition& bp, const ConstructionParams& params) {
    if (params.k == 0) {
        throw PreconditionError("k must be positive");
    }
    require_bipartition(g, bp);
    const auto factors = params.factors.value_or(default_factor_pair(params.k));
    if (factors.m == 0 || params.k % factors.m != 0 || params.k / factors.m != factors.n) {
        throw PreconditionError("factor pair " + std::to_string(factors.m) + "," + std::to_string(factors.n) +
                                " does not multiply to k = " + std::to_string(params.k));
    }
    const Element side_y = bp.side_y.size();
    const Element stride =
        params.stride.value_or(checked_add(factors.m, checked_mul(checked_mul(factors.n, factors.m), side_y)));
    if (stride == 0 || stride < side_y) {
        throw PreconditionError("stride " + std::to_string(stride) + " must be at least max(1, |side_y|) = " +
                                std::to_string(std::max<Element>(1, side_y)));
    }
    const Element y_shift = params.k == 1 ? 1 : 0;

    Labeling f;
    for (std::size_t x = 0; x < bp.side_x.size(); ++x) {
        f.assign(bp.side_x[x], SetLabel(progression(checked_mul(x, stride), 1, factors.m)));
    }
    for (std::size_t y = 0; y < bp.side_y.size(); ++y) {
        f.assign(bp.side_y[y], SetLabel(progression(checked_add(y, y_shift), factors.m, factors.n)));
    }
    return f;
}

std::vector<Element> mian_chowla(std::size_t count) {
    std::vector<Element> terms;
    std::set<Element> sums;
    for (Element candidate = 1; terms.size() < count; ++candidate) {
        std::vector<Element> fresh{2 * candidate};
        for (auto t : terms) {
            fresh.push_back(t + candidate);
        }
        if (std::none_of(fresh.begin(), fresh.end(), [&](Element s) { return sums.contains(s); })) {
            terms.push_back(candidate);
            sums.insert(fresh.begin(), fresh.end());
        }
    }
    return terms;
}

Labeling construct_complete_strong(std::size_t num_vertices, std::uint64_t l) {
    if (num_vertices == 0 || l == 0) {
        throw PreconditionError("complete construction needs num_vertices >= 1 and l >= 1");
    }
    const Element base = std::max<std::uint64_t>(l, 2);
    const auto offsets = mian_chowla(num_vertices);
    Labeling f;
    Element band = checked_mul(base, base);
    for (std::size_t v = 0; v < num_vertices; ++v) {
        try {
            f.assign(static_cast<VertexId>(v), SetLabel(progression(offsets[v], band, l)));
            if (v + 1 < num_vertices) {
                band = checked_mul(band, base);
            }
        } catch (const OverflowError&) {
            throw OverflowError("band values overflow for K_" + std::to_string(num_vertices) + " with l = " +
                                std::to_string(l));
        }
    }
    return f;
}

Labeling construct_weak_uniform(const Graph& g, const Bipartition& bp, std::uint64_t k) {
    if (k == 0) {
        throw PreconditionError("k must be positive");
    }
    require_bipartition(g, bp);
    const Element stride = checked_mul(k, checked_add(bp.side_y.size(), 1));
    const Element y_shift = k == 1 ? 1 : 0;
    Labeling f;
    for (std::size_t x = 0; x < bp.side_x.size(); ++x) {
        f.assign(bp.side_x[x], SetLabel{checked_mul(x, stride)});
    }
    for (std::size_t y = 0; y < bp.side_y.size(); ++y) {
        f.assign(bp.side_y[y], SetLabel(progression(checked_add(checked_mul(y, k), y_shift), 1, k)));
    }
    return f;
}

} // namespace iasi
