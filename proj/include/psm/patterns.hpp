#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "psm/symbol.hpp"

namespace psm {

enum class PatternKind { prefix, suffix };

/// Redundancy-free pattern list with stable 0-based indices.
///
/// For prefix-kind lists no element is a prefix of another element; for
/// suffix-kind lists no element is a suffix of another. Elements are never
/// empty and never contain the sentinel.
class PatternList {
 public:
  PatternList() = default;

  PatternKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  const Text& operator[](std::size_t k) const { return patterns_[k]; }
  const std::vector<Text>& patterns() const noexcept { return patterns_; }
  std::size_t total_length() const noexcept;

  auto begin() const noexcept { return patterns_.begin(); }
  auto end() const noexcept { return patterns_.end(); }

 private:
  friend PatternList remove_redundant_prefix_patterns(const std::vector<Text>&);
  friend PatternList remove_redundant_suffix_patterns(const std::vector<Text>&);

  PatternList(std::vector<Text> patterns, PatternKind kind)
      : patterns_(std::move(patterns)), kind_(kind) {}

  std::vector<Text> patterns_;
  PatternKind kind_ = PatternKind::prefix;
};

/// Drops duplicates and every pattern that has another pattern as a proper
/// prefix. Survivors come out in lexicographic order; the scan runs over
/// the suffix array of $p_1$p_2$...$p_n$.
PatternList remove_redundant_prefix_patterns(const std::vector<Text>& raw);

/// Suffix analogue: runs the prefix scan on reversed patterns and reverses
/// the survivors back. Survivors are therefore ordered by their reversals.
PatternList remove_redundant_suffix_patterns(const std::vector<Text>& raw);

/// Offset y such that inserting a new occurrence of pattern k at text
/// position j goes immediately before the list entry j + y. Empty when
/// pattern k has no other pattern starting strictly inside it.
using SuccessorOffset = std::optional<std::size_t>;

/// For each prefix pattern p_k: the least y such that some pattern occurs
/// in p_k[2..|p_k|-1] at start index y + 1.
std::vector<SuccessorOffset> compute_successor_offsets(const PatternList& prefixes);

/// For each suffix pattern s_k: the number of prefix-pattern occurrences
/// inside s_k[2..|s_k|].
std::vector<std::size_t> compute_s_p_counts(const PatternList& prefixes,
                                            const PatternList& suffixes);

/// Precomputed tables used by the online engine.
struct PreprocessTables {
  std::vector<SuccessorOffset> successor_offset;
  std::vector<std::size_t> s_p_count;
};

PreprocessTables build_tables(const PatternList& prefixes, const PatternList& suffixes);

}  // namespace psm
