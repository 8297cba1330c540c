#include "psm/engine.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace psm {

void LengthRange::validate() const {
  if (min < 1) throw InvalidInput("k1 must be at least 1");
  if (max && *max < min)
    throw InvalidInput("k2 (" + std::to_string(*max) + ") is smaller than k1 (" +
                       std::to_string(min) + ")");
}

EngineConfig::EngineConfig(PatternList prefixes, PatternList suffixes, LengthRange range,
                           Mode mode)
    : prefixes_(std::move(prefixes)),
      suffixes_(std::move(suffixes)),
      tables_(build_tables(prefixes_, suffixes_)),
      prefix_automaton_(prefixes_),
      suffix_automaton_(suffixes_),
      range_(range),
      mode_(mode) {}

std::shared_ptr<const EngineConfig> EngineConfig::create(const std::vector<Text>& raw_prefixes,
                                                         const std::vector<Text>& raw_suffixes,
                                                         LengthRange range, Mode mode) {
  range.validate();
  return std::shared_ptr<const EngineConfig>(
      new EngineConfig(remove_redundant_prefix_patterns(raw_prefixes),
                       remove_redundant_suffix_patterns(raw_suffixes), range, mode));
}

Engine::Engine(std::shared_ptr<const EngineConfig> config) : config_(std::move(config)) {}

StepResult Engine::feed(Symbol sym) {
  if (sym == kSentinel) throw InvalidInput("sentinel symbol in text");
  const std::size_t k1 = config_->range().min;
  const std::optional<std::size_t> k2 = config_->range().max;

  // (1) advance
  const std::size_t i = ++position_;
  candidates_.grow_to(i);

  // (2) lrs window [i - |lrs_i| + 1 .. i]; its left end never moves back.
  const std::size_t old_left = i - lrs_.lrs_length();  // (i-1) - |lrs_{i-1}| + 1
  const std::size_t new_left = i - lrs_.extend(sym) + 1;
  for (std::size_t j = old_left; j < new_left; ++j) {
    ++work_.counter_iterations;
    if (candidates_.contains(j)) --lrs_count_;
  }

  // (3) k1 window [i - k1 + 2 .. i] drops i - k1 + 1.
  if (i >= k1) {
    ++work_.counter_iterations;
    if (candidates_.contains(i - k1 + 1)) --k1_count_;
  }

  // (4) k2 window [1 .. i - k2] gains i - k2; start skips entries below i + 1 - k2.
  if (k2) {
    if (i > *k2) {
      ++work_.counter_iterations;
      if (candidates_.contains(i - *k2)) ++left_count_;
    }
    while (start_ != PositionList::kNull && start_ + *k2 < i + 1) {
      ++work_.counter_iterations;
      start_ = candidates_.next(start_);
    }
  }

  // (5) prefix occurrences ending at i, longest first.
  prefix_cursor_ = config_->prefix_automaton().step(prefix_cursor_, sym);
  config_->prefix_automaton().for_each_match(prefix_cursor_, [&](const PatternMatch& m) {
    ++work_.prefix_matches;
    insert_candidate(i - m.length + 1, m.pattern);
  });

  // (6) suffix occurrence ending at i; the shortest one decides.
  suffix_cursor_ = config_->suffix_automaton().step(suffix_cursor_, sym);
  std::optional<std::size_t> suffix;
  config_->suffix_automaton().for_each_match(suffix_cursor_, [&](const PatternMatch& m) {
    ++work_.suffix_matches;
    suffix = m.pattern;
  });
  if (!suffix) return StepResult{0, cumulative_, {}};
  return answer(*suffix);
}

void Engine::insert_candidate(std::size_t j, std::size_t pattern) {
  const std::size_t i = position_;
  const std::size_t k1 = config_->range().min;
  const std::optional<std::size_t> k2 = config_->range().max;
  ++work_.insertions;

  const SuccessorOffset& offset = config_->tables().successor_offset[pattern];
  if (offset) {
    // The successor is an already-listed occurrence lying strictly inside
    // this one, so j + offset < i.
    assert(j + *offset < i && candidates_.contains(j + *offset));
    candidates_.insert_before(j, j + *offset);
  } else {
    assert(candidates_.tail() < j);
    candidates_.push_back(j);
  }

  if (j + lrs_.lrs_length() >= i + 1) ++lrs_count_;
  if (j + k1 >= i + 2) ++k1_count_;
  if (k2 && j + *k2 <= i) ++left_count_;
  if ((!k2 || j + *k2 >= i + 1) && (start_ == PositionList::kNull || start_ > j)) start_ = j;
}

StepResult Engine::answer(std::size_t suffix_pattern) {
  const std::size_t exclude_right =
      std::max({config_->tables().s_p_count[suffix_pattern], lrs_count_, k1_count_});
  const std::size_t exclude_left = left_count_;
  const std::size_t size = candidates_.size();

  StepResult result;
  result.delta = size > exclude_left + exclude_right ? size - exclude_left - exclude_right : 0;
  cumulative_ += result.delta;
  result.cumulative = cumulative_;

  if (config_->mode() == Mode::reporting) {
    result.reported.reserve(result.delta);
    PositionList::Position j = start_;
    for (std::size_t d = 0; d < result.delta; ++d) {
      assert(j != PositionList::kNull);
      result.reported.push_back(Solution{j, position_});
      j = candidates_.next(j);
    }
    work_.reported += result.delta;
  }
  return result;
}

}  // namespace psm
