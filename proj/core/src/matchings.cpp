#include "superfft/matchings.hpp"

namespace superfft {

namespace {

void extend(std::vector<uint32_t>& free_slots, Matching& current,
            std::vector<Matching>& out) {
  if (free_slots.empty()) {
    out.push_back(current);
    return;
  }
  uint32_t a = free_slots.front();
  for (size_t j = 1; j < free_slots.size(); ++j) {
    uint32_t b = free_slots[j];
    std::vector<uint32_t> rest;
    rest.reserve(free_slots.size() - 2);
    for (size_t k = 1; k < free_slots.size(); ++k)
      if (k != j) rest.push_back(free_slots[k]);
    current.pairs.emplace_back(a, b);
    extend(rest, current, out);
    current.pairs.pop_back();
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(uint32_t n) {
  std::vector<Matching> out;
  if (n % 2 != 0) return out;
  std::vector<uint32_t> slots(n);
  for (uint32_t i = 0; i < n; ++i) slots[i] = i;
  Matching current;
  extend(slots, current, out);
  return out;
}

}  // namespace superfft
