#include "psm/oracle.hpp"

#include <algorithm>

namespace psm {
namespace {

bool has_prefix(const Text& text, std::size_t first, std::size_t last, const Text& p) {
  return p.size() <= last - first + 1 && std::equal(p.begin(), p.end(), text.begin() + first);
}

bool has_suffix(const Text& text, std::size_t first, std::size_t last, const Text& s) {
  return s.size() <= last - first + 1 &&
         std::equal(s.begin(), s.end(), text.begin() + (last + 1 - s.size()));
}

}  // namespace

OracleAnswers::OracleAnswers(const Text& text, const std::vector<Text>& raw_prefixes,
                             const std::vector<Text>& raw_suffixes, LengthRange range) {
  range.validate();
  for (const auto* list : {&raw_prefixes, &raw_suffixes})
    for (const Text& p : *list) {
      if (p.empty()) throw InvalidInput("empty pattern");
      if (std::find(p.begin(), p.end(), kSentinel) != p.end())
        throw InvalidInput("pattern contains the reserved sentinel symbol");
    }
  if (std::find(text.begin(), text.end(), kSentinel) != text.end())
    throw InvalidInput("sentinel symbol in text");

  const std::size_t n = text.size();
  // Enumerate by increasing end so the first insertion wins.
  for (std::size_t last = 0; last < n; ++last) {
    for (std::size_t first = 0; first <= last; ++first) {
      const std::size_t len = last - first + 1;
      if (len < range.min || (range.max && len > *range.max)) continue;
      const bool prefix_ok = std::any_of(raw_prefixes.begin(), raw_prefixes.end(),
                                         [&](const Text& p) { return has_prefix(text, first, last, p); });
      if (!prefix_ok) continue;
      const bool suffix_ok = std::any_of(raw_suffixes.begin(), raw_suffixes.end(),
                                         [&](const Text& s) { return has_suffix(text, first, last, s); });
      if (!suffix_ok) continue;
      first_occurrence_.try_emplace(Text(text.begin() + first, text.begin() + last + 1),
                                    Solution{first + 1, last + 1});
    }
  }

  fresh_.assign(n, {});
  for (const auto& [w, occ] : first_occurrence_) fresh_[occ.end - 1].push_back(occ);
  cumulative_.assign(n, 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(fresh_[i].begin(), fresh_[i].end());
    total += fresh_[i].size();
    cumulative_[i] = total;
  }
}

std::map<Text, Solution> OracleAnswers::answers_at(std::size_t i) const {
  std::map<Text, Solution> out;
  for (const auto& [w, occ] : first_occurrence_)
    if (occ.end <= i) out.emplace(w, occ);
  return out;
}

}  // namespace psm
