#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace iasi {

using Element = std::uint64_t;

/// A finite nonempty set of non-negative integers, stored strictly increasing.
///
/// Immutable value type with structural equality and lexicographic ordering on
/// the element sequence.
class SetLabel {
public:
    /// Throws InvalidLabelError unless `elements` is nonempty and strictly
    /// increasing.
    explicit SetLabel(std::vector<Element> elements);
    SetLabel(std::initializer_list<Element> elements);

    /// Sorts and deduplicates first; still rejects an empty input.
    static SetLabel from_unsorted(std::vector<Element> elements);

    std::span<const Element> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    Element min() const noexcept { return elements_.front(); }
    Element max() const noexcept { return elements_.back(); }
    bool contains(Element e) const noexcept;

    /// Every element plus `offset`; throws OverflowError on wraparound.
    SetLabel shifted(Element offset) const;

    /// Canonical text form `{e1,e2,...}`.
    std::string to_string() const;

    friend bool operator==(const SetLabel&, const SetLabel&) = default;
    friend auto operator<=>(const SetLabel&, const SetLabel&) = default;

private:
    std::vector<Element> elements_;
};

/// Positive differences between distinct elements of a SetLabel, ascending.
/// Empty exactly when the source label is a singleton.
class DifferenceSet {
public:
    DifferenceSet() = default;

    std::span<const Element> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    /// Smallest difference present in both sets, if any.
    std::optional<Element> first_common(const DifferenceSet& other) const noexcept;
    bool disjoint_from(const DifferenceSet& other) const noexcept { return !first_common(other); }

    friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;

private:
    friend DifferenceSet difference_set(const SetLabel& a);
    explicit DifferenceSet(std::vector<Element> elements) : elements_(std::move(elements)) {}

    std::vector<Element> elements_;
};

SetLabel sumset(const SetLabel& a, const SetLabel& b);

DifferenceSet difference_set(const SetLabel& a);

/// True iff |a + b| = |a|·|b|, decided through difference-set disjointness.
bool is_sumset_maximal(const SetLabel& a, const SetLabel& b);

/// A difference shared by both labels, i.e. the witness that a + b collapses.
std::optional<Element> shared_difference(const SetLabel& a, const SetLabel& b);

/// a + b with overflow detection.
Element checked_add(Element a, Element b);
Element checked_mul(Element a, Element b);

} // namespace iasi
