#include "altseq/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace altseq {

void Permutation::validate() const {
  const auto n = ranks.size();
  std::vector<bool> seen(n + 1, false);
  for (std::int32_t v : ranks) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation rank_map(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return values[a] < values[b]; });

  Permutation result;
  result.ranks.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && values[order[r]] == values[order[r - 1]])
      throw std::invalid_argument("rank_map: duplicate values");
    result.ranks[order[r]] = static_cast<std::int32_t>(r + 1);
  }
  return result;
}

}  // namespace altseq
