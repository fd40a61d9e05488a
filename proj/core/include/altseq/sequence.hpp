#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace altseq {

/// Word over a finite alphabet [q], symbols 1..q.
using IntWord = std::vector<std::int32_t>;

/// Sequence of reals (iid samples from [0,1] in the sampling paths).
using RealSeq = std::vector<double>;

/// A permutation of 1..n stored one-line: ranks[i] is the image of
/// position i (1-based values).
struct Permutation {
  std::vector<std::int32_t> ranks;

  std::size_t size() const { return ranks.size(); }

  /// Throws std::invalid_argument unless ranks is a bijection on 1..n.
  void validate() const;
};

/// Rank vector of a sequence of pairwise-distinct reals: position i gets the
/// rank of values[i] among all entries (1 = smallest). Order preserving:
/// values[i] < values[j] iff result[i] < result[j], so the alternating
/// structure is untouched. Throws on duplicate values.
Permutation rank_map(std::span<const double> values);

}  // namespace altseq
