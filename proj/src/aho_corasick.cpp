#include "psm/aho_corasick.hpp"

#include <queue>

namespace psm {

AhoCorasick::AhoCorasick(const PatternList& patterns) : states_(1) {
  pattern_length_.reserve(patterns.size());
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    const Text& p = patterns[k];
    if (p.empty()) throw InvalidInput("empty pattern");
    StateId s = kRoot;
    for (Symbol c : p) {
      if (c == kSentinel) throw InvalidInput("pattern contains the reserved sentinel symbol");
      auto it = states_[s].next.find(c);
      if (it == states_[s].next.end()) {
        const auto fresh = static_cast<StateId>(states_.size());
        states_[s].next.emplace(c, fresh);
        states_.emplace_back();
        s = fresh;
      } else {
        s = it->second;
      }
    }
    // Duplicates cannot occur in a redundancy-free list; keep the first.
    if (states_[s].accepts == kNoPattern) states_[s].accepts = k;
    pattern_length_.push_back(p.size());
  }

  std::queue<StateId> bfs;
  for (const auto& [c, child] : states_[kRoot].next) bfs.push(child);
  while (!bfs.empty()) {
    const StateId s = bfs.front();
    bfs.pop();
    for (const auto& [c, child] : states_[s].next) {
      StateId f = states_[s].fail;
      while (f != kRoot && !states_[f].next.contains(c)) f = states_[f].fail;
      auto it = states_[f].next.find(c);
      const StateId target = it != states_[f].next.end() ? it->second : kRoot;
      states_[child].fail = target;
      states_[child].output =
          states_[target].accepts != kNoPattern ? target : states_[target].output;
      bfs.push(child);
    }
  }
}

AhoCorasick::StateId AhoCorasick::transition(StateId s, Symbol sym) const {
  for (;;) {
    auto it = states_[s].next.find(sym);
    if (it != states_[s].next.end()) return it->second;
    if (s == kRoot) return kRoot;
    s = states_[s].fail;
  }
}

AhoCorasick::Cursor AhoCorasick::step(Cursor cursor, Symbol sym) const {
  if (sym == kSentinel) throw InvalidInput("sentinel symbol in text");
  return Cursor{transition(cursor.state, sym), cursor.position + 1};
}

std::vector<PatternMatch> AhoCorasick::matches_at(const Cursor& cursor) const {
  std::vector<PatternMatch> out;
  for_each_match(cursor, [&](const PatternMatch& m) { out.push_back(m); });
  return out;
}

}  // namespace psm
