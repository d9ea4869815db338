#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gsys/universe.hpp"

namespace gsys {

/// Dense tables of size |A|^k are the canonical representation; this cap
/// makes oversized enumerations fail loudly instead of thrashing.
inline constexpr std::size_t kDefaultSizeCap = 10'000'000;

/// |A|^k, throwing SizeCapExceeded past `cap`. k = 0 yields 1 (the empty tuple).
std::size_t checked_tuple_count(std::size_t universe_size, std::size_t arity,
                                std::size_t cap = kDefaultSizeCap);

/// Rank of a k-tuple of indices in lexicographic order, leftmost coordinate
/// most significant.
std::size_t tuple_rank(std::span<const std::size_t> indices, std::size_t base);

/// Inverse of tuple_rank; writes out.size() coordinates.
void tuple_unrank(std::size_t rank, std::size_t base, std::span<std::size_t> out);

std::vector<std::vector<std::string>> enumerate_tuples(const Universe& u, std::size_t arity,
                                                       std::size_t cap = kDefaultSizeCap);

}  // namespace gsys
