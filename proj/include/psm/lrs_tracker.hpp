#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "psm/symbol.hpp"

namespace psm {

/// Operation counts accumulated by LrsTracker, for amortization checks.
struct LrsWork {
  std::size_t leaves = 0;
  std::size_t splits = 0;
  std::size_t link_hops = 0;   // suffix-link (or root shortcut) moves
  std::size_t walk_downs = 0;  // edge skips while canonizing the active point

  std::size_t total() const noexcept { return leaves + splits + link_hops + walk_downs; }
};

/// Tracks the longest repeating suffix of a growing text by maintaining
/// its implicit suffix tree online (Ukkonen).
///
/// After each extension the longest suffix of the text that also occurs
/// earlier is exactly the longest suffix that is still implicit, whose
/// length equals the number of pending suffixes.
class LrsTracker {
 public:
  LrsTracker();

  /// Appends `sym` and returns the new longest-repeating-suffix length.
  /// Throws InvalidInput on the sentinel.
  std::size_t extend(Symbol sym);

  std::size_t lrs_length() const noexcept { return remainder_; }
  std::size_t size() const noexcept { return text_.size(); }
  const Text& text() const noexcept { return text_; }
  const LrsWork& work() const noexcept { return work_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }

 private:
  using NodeId = std::uint32_t;
  static constexpr NodeId kRoot = 0;
  static constexpr std::size_t kOpenEnd = static_cast<std::size_t>(-1);

  struct Node {
    std::size_t start = 0;
    std::size_t end = kOpenEnd;  // exclusive; leaves grow with the text
    NodeId link = kRoot;
    std::map<Symbol, NodeId> children;
  };

  std::size_t edge_length(const Node& node) const noexcept {
    return (node.end == kOpenEnd ? text_.size() : node.end) - node.start;
  }
  NodeId add_node(std::size_t start, std::size_t end);

  Text text_;
  std::vector<Node> nodes_;
  NodeId active_node_ = kRoot;
  std::size_t active_edge_ = 0;  // text index of the first symbol on the active edge
  std::size_t active_length_ = 0;
  std::size_t remainder_ = 0;
  LrsWork work_;
};

}  // namespace psm
