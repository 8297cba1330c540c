#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "psm/aho_corasick.hpp"
#include "psm/lrs_tracker.hpp"
#include "psm/patterns.hpp"
#include "psm/position_list.hpp"
#include "psm/symbol.hpp"

namespace psm {

/// Admissible solution lengths [min..max]; no max means unbounded.
struct LengthRange {
  std::size_t min = 1;
  std::optional<std::size_t> max;

  /// Throws InvalidInput unless min >= 1 and max >= min.
  void validate() const;
};

enum class Mode { counting, reporting };

/// Solution reported as the 1-based inclusive span T[start..end].
struct Solution {
  std::size_t start = 0;
  std::size_t end = 0;

  friend auto operator<=>(const Solution&, const Solution&) = default;
};

struct StepResult {
  std::size_t delta = 0;       // |ans_i \ ans_{i-1}|
  std::size_t cumulative = 0;  // |ans_i|
  std::vector<Solution> reported;
};

/// Immutable preprocessed input: redundancy-free pattern lists, their
/// tables and automata. Shareable across engines and threads.
class EngineConfig {
 public:
  static std::shared_ptr<const EngineConfig> create(const std::vector<Text>& raw_prefixes,
                                                    const std::vector<Text>& raw_suffixes,
                                                    LengthRange range, Mode mode);

  const PatternList& prefixes() const noexcept { return prefixes_; }
  const PatternList& suffixes() const noexcept { return suffixes_; }
  const PreprocessTables& tables() const noexcept { return tables_; }
  const AhoCorasick& prefix_automaton() const noexcept { return prefix_automaton_; }
  const AhoCorasick& suffix_automaton() const noexcept { return suffix_automaton_; }
  const LengthRange& range() const noexcept { return range_; }
  Mode mode() const noexcept { return mode_; }

 private:
  EngineConfig(PatternList prefixes, PatternList suffixes, LengthRange range, Mode mode);

  PatternList prefixes_;
  PatternList suffixes_;
  PreprocessTables tables_;
  AhoCorasick prefix_automaton_;
  AhoCorasick suffix_automaton_;
  LengthRange range_;
  Mode mode_;
};

/// Operation counts accumulated by an Engine over its stream.
struct EngineWork {
  std::size_t insertions = 0;
  std::size_t prefix_matches = 0;
  std::size_t suffix_matches = 0;
  std::size_t counter_iterations = 0;  // window-endpoint and start-pointer moves
  std::size_t reported = 0;
};

/// Online matcher for one text stream.
///
/// After feed() returns for symbol i, the candidate list holds every start
/// index of a prefix-pattern occurrence in T_i in increasing order, and the
/// counters describe the final state of iteration i:
///   lrs_count  = |{j : j >= i - |lrs_i| + 1}|
///   k1_count   = |{j : j >= i - k1 + 2}|
///   left_count = |{j : j <= i - k2}|   (0 when k2 is unbounded)
///   start      = least j >= i + 1 - k2, or null
class Engine {
 public:
  explicit Engine(std::shared_ptr<const EngineConfig> config);

  /// Consumes one symbol. Throws InvalidInput on the sentinel.
  StepResult feed(Symbol sym);

  std::size_t position() const noexcept { return position_; }
  std::size_t cumulative() const noexcept { return cumulative_; }
  const Text& text() const noexcept { return lrs_.text(); }
  std::size_t lrs_length() const noexcept { return lrs_.lrs_length(); }
  const PositionList& candidates() const noexcept { return candidates_; }
  std::size_t lrs_count() const noexcept { return lrs_count_; }
  std::size_t k1_count() const noexcept { return k1_count_; }
  std::size_t left_count() const noexcept { return left_count_; }
  PositionList::Position start() const noexcept { return start_; }
  const EngineConfig& config() const noexcept { return *config_; }
  const EngineWork& work() const noexcept { return work_; }
  const LrsWork& lrs_work() const noexcept { return lrs_.work(); }

 private:
  void insert_candidate(std::size_t j, std::size_t pattern);
  StepResult answer(std::size_t suffix_pattern);

  std::shared_ptr<const EngineConfig> config_;
  LrsTracker lrs_;
  AhoCorasick::Cursor prefix_cursor_;
  AhoCorasick::Cursor suffix_cursor_;
  PositionList candidates_;
  std::size_t position_ = 0;
  std::size_t lrs_count_ = 0;
  std::size_t k1_count_ = 0;
  std::size_t left_count_ = 0;
  PositionList::Position start_ = PositionList::kNull;
  std::size_t cumulative_ = 0;
  EngineWork work_;
};

}  // namespace psm
