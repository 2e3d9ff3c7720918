#include "iasi/number_theory.hpp"

#include "iasi/error.hpp"

#include <algorithm>
#include <cmath>

namespace iasi {

std::uint64_t isqrt(std::uint64_t n) noexcept {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    // Correct the floating estimate by at most a step each way.
    while (r > 0 && r > n / r) {
        --r;
    }
    while ((r + 1) <= n / (r + 1)) {
        ++r;
    }
    return r;
}

bool is_perfect_square(std::uint64_t n) noexcept {
    const auto r = isqrt(n);
    return r * r == n;
}

std::vector<std::uint64_t> divisors(std::uint64_t k) {
    if (k == 0) {
        throw PreconditionError("divisors of zero are undefined");
    }
    std::vector<std::uint64_t> low;
    std::vector<std::uint64_t> high;
    const auto root = isqrt(k);
    for (std::uint64_t d = 1; d <= root; ++d) {
        if (k % d == 0) {
            low.push_back(d);
            if (d != k / d) {
                high.push_back(k / d);
            }
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factor_pairs(std::uint64_t k) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (auto d : divisors(k)) {
        out.emplace_back(d, k / d);
    }
    return out;
}

} // namespace iasi
