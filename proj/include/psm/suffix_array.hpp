#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "psm/symbol.hpp"

namespace psm {

/// Closed 1-based interval [first..last] of suffix array ranks.
struct RankInterval {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const noexcept { return last - first + 1; }
  friend bool operator==(const RankInterval&, const RankInterval&) = default;
};

/// Suffix array, its inverse, and the LCP array of an integer-coded text.
///
/// All positions and ranks are 1-based to match the usual textbook
/// presentation: sa(x) is the start of the x-th smallest suffix,
/// rank(sa(x)) == x, and lcp(x) for x in [2..n] is the longest common
/// prefix of the suffixes at ranks x - 1 and x. lcp(1) is 0.
///
/// The suffix array is built by induced sorting (SA-IS), the LCP array by
/// the rank-scan method. Both are linear in the text length.
class SuffixArray {
 public:
  explicit SuffixArray(Text text);

  std::size_t size() const noexcept { return text_.size(); }
  const Text& text() const noexcept { return text_; }

  std::size_t sa(std::size_t rank) const { return sa_[rank - 1] + 1; }
  std::size_t rank(std::size_t pos) const { return rank_[pos - 1] + 1; }
  std::size_t lcp(std::size_t rank) const { return lcp_[rank - 1]; }
  Symbol at(std::size_t pos) const { return text_[pos - 1]; }

  /// Maximal rank interval containing rank(pos) whose adjacent LCPs are
  /// all >= len; its suffixes are exactly the occurrences of
  /// text[pos..pos+len-1].
  RankInterval occurrence_interval(std::size_t pos, std::size_t len) const;

 private:
  Text text_;
  std::vector<std::size_t> sa_;    // 0-based starts
  std::vector<std::size_t> rank_;  // 0-based ranks
  std::vector<std::size_t> lcp_;
};

/// 0-based suffix array of `text` by induced sorting. Symbols may include
/// the sentinel code any number of times.
std::vector<std::size_t> induced_sort(std::span<const Symbol> text);

}  // namespace psm
