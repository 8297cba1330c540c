#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "psm/patterns.hpp"
#include "psm/symbol.hpp"

namespace psm {

struct PatternMatch {
  std::size_t pattern = 0;  // index into the PatternList
  std::size_t length = 0;

  friend bool operator==(const PatternMatch&, const PatternMatch&) = default;
};

/// Aho-Corasick automaton over an ordered alphabet.
///
/// Transitions are kept in ordered maps, so a step costs O(log sigma) plus
/// the failure-link walk (amortized constant). Every state carries an
/// output link to the nearest accepting state on its failure chain, which
/// makes match enumeration linear in the number of matches.
class AhoCorasick {
 public:
  using StateId = std::uint32_t;
  static constexpr StateId kRoot = 0;

  struct Cursor {
    StateId state = kRoot;
    std::size_t position = 0;
  };

  explicit AhoCorasick(const PatternList& patterns);

  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t pattern_count() const noexcept { return pattern_length_.size(); }

  /// Advances the cursor by one symbol. Throws InvalidInput on the sentinel.
  Cursor step(Cursor cursor, Symbol sym) const;

  /// Calls fn(PatternMatch) for every pattern that is a suffix of the text
  /// consumed by `cursor`, longest first.
  template <typename Fn>
  void for_each_match(const Cursor& cursor, Fn&& fn) const {
    StateId s = states_[cursor.state].accepts != kNoPattern ? cursor.state
                                                            : states_[cursor.state].output;
    while (s != kNoState) {
      const std::size_t k = states_[s].accepts;
      fn(PatternMatch{k, pattern_length_[k]});
      s = states_[s].output;
    }
  }

  /// Matches ending at the cursor, in strictly decreasing length order.
  std::vector<PatternMatch> matches_at(const Cursor& cursor) const;

 private:
  static constexpr StateId kNoState = static_cast<StateId>(-1);
  static constexpr std::size_t kNoPattern = static_cast<std::size_t>(-1);

  struct State {
    std::map<Symbol, StateId> next;
    StateId fail = kRoot;
    StateId output = kNoState;  // nearest accepting proper-suffix state
    std::size_t accepts = kNoPattern;
  };

  StateId transition(StateId s, Symbol sym) const;

  std::vector<State> states_;
  std::vector<std::size_t> pattern_length_;
};

}  // namespace psm
