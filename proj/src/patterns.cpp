#include "psm/patterns.hpp"

#include <algorithm>
#include <limits>

#include "psm/suffix_array.hpp"

namespace psm {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void validate_patterns(const std::vector<Text>& raw) {
  for (const Text& p : raw) {
    if (p.empty()) throw InvalidInput("empty pattern");
    if (std::find(p.begin(), p.end(), kSentinel) != p.end())
      throw InvalidInput("pattern contains the reserved sentinel symbol");
  }
}

// Returns the indices into `raw` of the non-redundant prefix patterns, in
// lexicographic order of the patterns.
std::vector<std::size_t> surviving_prefix_indices(const std::vector<Text>& raw) {
  const std::size_t n = raw.size();
  Text seq{kSentinel};
  std::vector<std::size_t> owner;  // 1-based position of "$p_k" -> k
  owner.push_back(kNone);
  for (std::size_t k = 0; k < n; ++k) {
    // '$' of "$p_k" sits at the current end of seq.
    owner.back() = k;
    seq.insert(seq.end(), raw[k].begin(), raw[k].end());
    owner.resize(seq.size(), kNone);
    seq.push_back(kSentinel);
    owner.push_back(kNone);
  }

  const SuffixArray sa(std::move(seq));
  std::vector<std::size_t> out;
  // Rank 1 is the lone trailing "$"; ranks 2..n+1 are the "$p_k..." suffixes.
  std::size_t x = 2;
  while (x <= n + 1) {
    const std::size_t k = owner[sa.sa(x) - 1];
    out.push_back(k);
    const std::size_t covered = raw[k].size() + 1;
    ++x;
    while (x <= n + 1 && sa.lcp(x) >= covered) ++x;
  }
  return out;
}

struct Concatenation {
  Text text;
  std::vector<std::size_t> prefix_start;  // PL, 1-based
  std::vector<std::size_t> prefix_owner;  // PI, by 1-based position
  std::vector<std::size_t> suffix_owner;  // SI, by 1-based position
};

// p_1$p_2$...p_n$ followed, when `suffixes` is given, by
// s_1[2..]$...$s_m[2..].
Concatenation concatenate(const PatternList& prefixes, const PatternList* suffixes) {
  Concatenation c;
  c.prefix_owner.push_back(kNone);  // position 0 unused
  for (std::size_t k = 0; k < prefixes.size(); ++k) {
    c.prefix_start.push_back(c.text.size() + 1);
    c.text.insert(c.text.end(), prefixes[k].begin(), prefixes[k].end());
    c.prefix_owner.resize(c.text.size() + 1, k);
    c.text.push_back(kSentinel);
    c.prefix_owner.push_back(kNone);
  }
  c.suffix_owner.assign(c.text.size() + 1, kNone);
  if (suffixes != nullptr) {
    for (std::size_t k = 0; k < suffixes->size(); ++k) {
      if (k > 0) {
        c.text.push_back(kSentinel);
        c.suffix_owner.push_back(kNone);
      }
      const Text& s = (*suffixes)[k];
      c.text.insert(c.text.end(), s.begin() + 1, s.end());
      c.suffix_owner.resize(c.text.size() + 1, k);
    }
  }
  c.prefix_owner.resize(c.text.size() + 1, kNone);
  return c;
}

}  // namespace

std::size_t PatternList::total_length() const noexcept {
  std::size_t total = 0;
  for (const Text& p : patterns_) total += p.size();
  return total;
}

PatternList remove_redundant_prefix_patterns(const std::vector<Text>& raw) {
  validate_patterns(raw);
  std::vector<Text> kept;
  if (!raw.empty())
    for (std::size_t k : surviving_prefix_indices(raw)) kept.push_back(raw[k]);
  return PatternList(std::move(kept), PatternKind::prefix);
}

PatternList remove_redundant_suffix_patterns(const std::vector<Text>& raw) {
  validate_patterns(raw);
  std::vector<Text> reversed;
  reversed.reserve(raw.size());
  for (const Text& s : raw) reversed.emplace_back(s.rbegin(), s.rend());
  std::vector<Text> kept;
  if (!raw.empty())
    for (std::size_t k : surviving_prefix_indices(reversed)) kept.push_back(raw[k]);
  return PatternList(std::move(kept), PatternKind::suffix);
}

std::vector<SuccessorOffset> compute_successor_offsets(const PatternList& prefixes) {
  std::vector<SuccessorOffset> offset(prefixes.size());
  if (prefixes.empty()) return offset;

  const Concatenation c = concatenate(prefixes, nullptr);
  const SuffixArray sa(c.text);
  for (std::size_t k = 0; k < prefixes.size(); ++k) {
    const std::size_t len = prefixes[k].size();
    const RankInterval iv = sa.occurrence_interval(c.prefix_start[k], len);
    for (std::size_t x = iv.first; x <= iv.last; ++x) {
      const std::size_t pos = sa.sa(x);
      // The trailing '$' guarantees pos + len is in range.
      if (sa.at(pos + len) == kSentinel) continue;
      const std::size_t host = c.prefix_owner[pos];
      const std::size_t y = pos - c.prefix_start[host];
      if (!offset[host] || y < *offset[host]) offset[host] = y;
    }
  }
  return offset;
}

std::vector<std::size_t> compute_s_p_counts(const PatternList& prefixes,
                                            const PatternList& suffixes) {
  std::vector<std::size_t> count(suffixes.size(), 0);
  if (prefixes.empty() || suffixes.empty()) return count;

  const Concatenation c = concatenate(prefixes, &suffixes);
  const SuffixArray sa(c.text);
  for (std::size_t k = 0; k < prefixes.size(); ++k) {
    const RankInterval iv = sa.occurrence_interval(c.prefix_start[k], prefixes[k].size());
    for (std::size_t x = iv.first; x <= iv.last; ++x) {
      const std::size_t host = c.suffix_owner[sa.sa(x)];
      if (host != kNone) ++count[host];
    }
  }
  return count;
}

PreprocessTables build_tables(const PatternList& prefixes, const PatternList& suffixes) {
  return {compute_successor_offsets(prefixes), compute_s_p_counts(prefixes, suffixes)};
}

}  // namespace psm
