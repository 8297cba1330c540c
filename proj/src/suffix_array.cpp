#include "psm/suffix_array.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace psm {
namespace {

using Index = std::int64_t;
constexpr Index kEmpty = -1;

// SA-IS over s, whose last symbol must be a unique minimum. Symbols lie in
// [0..alphabet).
void sais(const std::vector<Index>& s, std::vector<Index>& sa, Index alphabet) {
  const Index n = static_cast<Index>(s.size());
  sa.assign(n, kEmpty);
  if (n == 1) {
    sa[0] = 0;
    return;
  }

  // true = S-type, false = L-type
  std::vector<bool> stype(n, false);
  stype[n - 1] = true;
  for (Index i = n - 2; i >= 0; --i)
    stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
  auto is_lms = [&](Index i) { return i > 0 && stype[i] && !stype[i - 1]; };

  std::vector<Index> bucket_size(alphabet, 0);
  for (Index c : s) ++bucket_size[c];
  std::vector<Index> bucket(alphabet);
  auto bucket_heads = [&] {
    Index sum = 0;
    for (Index c = 0; c < alphabet; ++c) {
      bucket[c] = sum;
      sum += bucket_size[c];
    }
  };
  auto bucket_tails = [&] {
    Index sum = 0;
    for (Index c = 0; c < alphabet; ++c) {
      sum += bucket_size[c];
      bucket[c] = sum;
    }
  };

  auto induce = [&](const std::vector<Index>& lms_order) {
    std::fill(sa.begin(), sa.end(), kEmpty);
    bucket_tails();
    for (auto it = lms_order.rbegin(); it != lms_order.rend(); ++it)
      sa[--bucket[s[*it]]] = *it;
    bucket_heads();
    for (Index x = 0; x < n; ++x) {
      const Index j = sa[x] - 1;
      if (sa[x] > 0 && !stype[j]) sa[bucket[s[j]]++] = j;
    }
    bucket_tails();
    for (Index x = n - 1; x >= 0; --x) {
      const Index j = sa[x] - 1;
      if (sa[x] > 0 && stype[j]) sa[--bucket[s[j]]] = j;
    }
  };

  std::vector<Index> lms;
  for (Index i = 1; i < n; ++i)
    if (is_lms(i)) lms.push_back(i);
  induce(lms);

  // Name LMS substrings in sorted order.
  std::vector<Index> sorted_lms;
  sorted_lms.reserve(lms.size());
  for (Index x = 0; x < n; ++x)
    if (is_lms(sa[x])) sorted_lms.push_back(sa[x]);

  std::vector<Index> name(n, kEmpty);
  Index names = 0;
  Index prev = kEmpty;
  for (Index pos : sorted_lms) {
    bool differs = prev == kEmpty;
    for (Index d = 0; !differs; ++d) {
      if (s[pos + d] != s[prev + d] || stype[pos + d] != stype[prev + d]) {
        differs = true;
      } else if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) {
        break;
      }
    }
    if (differs) ++names;
    name[pos] = names - 1;
    prev = pos;
  }

  std::vector<Index> reduced;
  reduced.reserve(lms.size());
  for (Index pos : lms) reduced.push_back(name[pos]);

  std::vector<Index> lms_sorted_final(lms.size());
  if (names < static_cast<Index>(lms.size())) {
    std::vector<Index> reduced_sa;
    sais(reduced, reduced_sa, names);
    for (std::size_t x = 0; x < reduced_sa.size(); ++x) lms_sorted_final[x] = lms[reduced_sa[x]];
  } else {
    for (std::size_t k = 0; k < lms.size(); ++k) lms_sorted_final[reduced[k]] = lms[k];
  }
  induce(lms_sorted_final);
}

}  // namespace

std::vector<std::size_t> induced_sort(std::span<const Symbol> text) {
  if (text.empty()) return {};
  // Shift by one and append a unique minimum terminator.
  std::vector<Index> s;
  s.reserve(text.size() + 1);
  Index max_symbol = 0;
  for (Symbol c : text) {
    s.push_back(static_cast<Index>(c) + 1);
    max_symbol = std::max(max_symbol, s.back());
  }
  s.push_back(0);

  // Compress the alphabet so bucket arrays stay proportional to the text.
  std::vector<Index> sorted(s);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (static_cast<std::size_t>(max_symbol) + 1 > 2 * s.size()) {
    for (Index& c : s) c = std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin();
    max_symbol = static_cast<Index>(sorted.size()) - 1;
  }

  std::vector<Index> sa;
  sais(s, sa, max_symbol + 1);
  std::vector<std::size_t> out;
  out.reserve(text.size());
  for (std::size_t x = 1; x < sa.size(); ++x) out.push_back(static_cast<std::size_t>(sa[x]));
  return out;
}

SuffixArray::SuffixArray(Text text) : text_(std::move(text)) {
  if (text_.empty()) throw InvalidInput("suffix array of empty text");
  const std::size_t n = text_.size();
  sa_ = induced_sort(text_);
  rank_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) rank_[sa_[x]] = x;

  lcp_.assign(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank_[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa_[rank_[i] - 1];
    while (i + h < n && j + h < n && text_[i + h] == text_[j + h]) ++h;
    lcp_[rank_[i]] = h;
    if (h > 0) --h;
  }
}

RankInterval SuffixArray::occurrence_interval(std::size_t pos, std::size_t len) const {
  if (pos == 0 || len == 0 || pos > size() || len > size() - pos + 1)
    throw InvalidInput("occurrence interval [" + std::to_string(pos) + ", len " +
                       std::to_string(len) + "] outside text of length " + std::to_string(size()));
  RankInterval iv{rank(pos), rank(pos)};
  while (iv.first > 1 && lcp(iv.first) >= len) --iv.first;
  while (iv.last < size() && lcp(iv.last + 1) >= len) ++iv.last;
  return iv;
}

}  // namespace psm
