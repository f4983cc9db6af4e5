#pragma once

#include <cstdint>
#include <vector>

namespace superfft {

/// Perfect matching of {0,...,N-1}: pairs (a, b) with a < b, sorted by first
/// element. (Printed 1-based in human-facing output.)
struct Matching {
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  uint32_t arity() const { return static_cast<uint32_t>(2 * pairs.size()); }
  bool operator==(const Matching&) const = default;
};

/// All (N-1)!! matchings in canonical order (smallest free element paired
/// with each larger one, recursively). Empty for odd N; the empty matching
/// for N = 0.
std::vector<Matching> enumerate_matchings(uint32_t n);

}  // namespace superfft
