#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace iasi {

/// floor(sqrt(n)), exact for the whole 64-bit range.
std::uint64_t isqrt(std::uint64_t n) noexcept;

bool is_perfect_square(std::uint64_t n) noexcept;

/// All positive divisors of k in ascending order, by trial division up to
/// sqrt(k). k must be positive.
std::vector<std::uint64_t> divisors(std::uint64_t k);

/// Factor pairs (m, k/m) for every divisor m of k, m ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> factor_pairs(std::uint64_t k);

} // namespace iasi
