#pragma once

// Slot-level helpers shared by the algorithm translation units.

#include <cstddef>
#include <optional>
#include <vector>

#include "timcolor/graph.hpp"

namespace timcolor::detail {

inline constexpr std::size_t npos = Bitset::npos;

template <typename Fn>
void for_each_bit(const Bitset& b, Fn&& fn) {
  for (auto i = b.find_first(); i != npos; i = b.find_next(i)) fn(i);
}

/// Slots reachable from start without leaving allowed (start itself included).
Bitset reachable(const Graph& g, std::size_t start, const Bitset& allowed,
                 std::optional<std::size_t> stop_at = std::nullopt);

/// Two-pair test on slots; x != y.
bool two_pair_slots(const Graph& g, std::size_t x, std::size_t y);

/// A hole through the edge between slots b and c, as slots in cycle order.
std::optional<std::vector<std::size_t>> hole_through_edge_slots(const Graph& g, std::size_t b,
                                                                std::size_t c);

}  // namespace timcolor::detail
