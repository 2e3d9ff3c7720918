#include "iasi/setlabel.hpp"

#include "iasi/error.hpp"

#include <algorithm>
#include <sstream>

namespace iasi {

namespace {

void require_canonical(const std::vector<Element>& elements) {
    if (elements.empty()) {
        throw InvalidLabelError("set label must be nonempty");
    }
    for (std::size_t i = 1; i < elements.size(); ++i) {
        if (elements[i - 1] >= elements[i]) {
            throw InvalidLabelError("set label elements must be strictly increasing, got " +
                                    std::to_string(elements[i - 1]) + " before " +
                                    std::to_string(elements[i]));
        }
    }
}

} // namespace

Element checked_add(Element a, Element b) {
    Element out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("integer overflow adding " + std::to_string(a) + " and " + std::to_string(b));
    }
    return out;
}

Element checked_mul(Element a, Element b) {
    Element out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw OverflowError("integer overflow multiplying " + std::to_string(a) + " and " +
                            std::to_string(b));
    }
    return out;
}

SetLabel::SetLabel(std::vector<Element> elements) : elements_(std::move(elements)) {
    require_canonical(elements_);
}

SetLabel::SetLabel(std::initializer_list<Element> elements) : SetLabel(std::vector<Element>(elements)) {}

SetLabel SetLabel::from_unsorted(std::vector<Element> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return SetLabel(std::move(elements));
}

bool SetLabel::contains(Element e) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), e);
}

SetLabel SetLabel::shifted(Element offset) const {
    std::vector<Element> out;
    out.reserve(elements_.size());
    for (Element e : elements_) {
        out.push_back(checked_add(e, offset));
    }
    return SetLabel(std::move(out));
}

std::string SetLabel::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i != 0) {
            os << ',';
        }
        os << elements_[i];
    }
    os << '}';
    return os.str();
}

std::optional<Element> DifferenceSet::first_common(const DifferenceSet& other) const noexcept {
    auto a = elements_.begin();
    auto b = other.elements_.begin();
    while (a != elements_.end() && b != other.elements_.end()) {
        if (*a == *b) {
            return *a;
        }
        if (*a < *b) {
            ++a;
        } else {
            ++b;
        }
    }
    return std::nullopt;
}

SetLabel sumset(const SetLabel& a, const SetLabel& b) {
    std::vector<Element> sums;
    sums.reserve(a.size() * b.size());
    // The max sum is checked once; every other sum is no larger.
    checked_add(a.max(), b.max());
    for (Element x : a.elements()) {
        for (Element y : b.elements()) {
            sums.push_back(x + y);
        }
    }
    return SetLabel::from_unsorted(std::move(sums));
}

DifferenceSet difference_set(const SetLabel& a) {
    const auto e = a.elements();
    std::vector<Element> diffs;
    diffs.reserve(e.size() * (e.size() - 1) / 2);
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            diffs.push_back(e[i] - e[j]);
        }
    }
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    return DifferenceSet(std::move(diffs));
}

std::optional<Element> shared_difference(const SetLabel& a, const SetLabel& b) {
    if (a.size() == 1 || b.size() == 1) {
        return std::nullopt;
    }
    return difference_set(a).first_common(difference_set(b));
}

bool is_sumset_maximal(const SetLabel& a, const SetLabel& b) {
    return !shared_difference(a, b).has_value();
}

} // namespace iasi
