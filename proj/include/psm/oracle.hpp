#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "psm/engine.hpp"
#include "psm/symbol.hpp"

namespace psm {

/// Brute-force reference answers for a whole text.
///
/// Every substring of T is enumerated and checked directly against the raw
/// (not deduplicated) pattern lists. Each qualifying distinct string is
/// kept with its first occurrence, i.e. the one with the smallest end
/// index; it belongs to ans_i exactly when that end index is <= i.
class OracleAnswers {
 public:
  OracleAnswers(const Text& text, const std::vector<Text>& raw_prefixes,
                const std::vector<Text>& raw_suffixes, LengthRange range);

  std::size_t length() const noexcept { return fresh_.size(); }

  /// |ans_i| for 1 <= i <= length().
  std::size_t cumulative(std::size_t i) const { return cumulative_[i - 1]; }

  /// ans_i \ ans_{i-1}, sorted by start index.
  const std::vector<Solution>& fresh(std::size_t i) const { return fresh_[i - 1]; }

  /// ans_i as strings mapped to their canonical (first) occurrence.
  std::map<Text, Solution> answers_at(std::size_t i) const;

 private:
  std::map<Text, Solution> first_occurrence_;
  std::vector<std::vector<Solution>> fresh_;
  std::vector<std::size_t> cumulative_;
};

}  // namespace psm
