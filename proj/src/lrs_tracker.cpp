#include "psm/lrs_tracker.hpp"

namespace psm {

LrsTracker::LrsTracker() { nodes_.push_back(Node{0, 0, kRoot, {}}); }

LrsTracker::NodeId LrsTracker::add_node(std::size_t start, std::size_t end) {
  nodes_.push_back(Node{start, end, kRoot, {}});
  return static_cast<NodeId>(nodes_.size() - 1);
}

std::size_t LrsTracker::extend(Symbol sym) {
  if (sym == kSentinel) throw InvalidInput("sentinel symbol in text");
  text_.push_back(sym);
  const std::size_t pos = text_.size() - 1;
  ++remainder_;
  NodeId pending_link = kRoot;  // internal node created this phase, awaiting its link

  while (remainder_ > 0) {
    if (active_length_ == 0) active_edge_ = pos;
    auto& children = nodes_[active_node_].children;
    auto it = children.find(text_[active_edge_]);

    if (it == children.end()) {
      const NodeId leaf = add_node(pos, kOpenEnd);
      nodes_[active_node_].children.emplace(text_[active_edge_], leaf);
      ++work_.leaves;
      if (pending_link != kRoot) {
        nodes_[pending_link].link = active_node_;
        pending_link = kRoot;
      }
    } else {
      const NodeId next = it->second;
      const std::size_t len = edge_length(nodes_[next]);
      if (active_length_ >= len) {
        active_edge_ += len;
        active_length_ -= len;
        active_node_ = next;
        ++work_.walk_downs;
        continue;
      }
      if (text_[nodes_[next].start + active_length_] == sym) {
        if (pending_link != kRoot && active_node_ != kRoot) {
          nodes_[pending_link].link = active_node_;
          pending_link = kRoot;
        }
        ++active_length_;
        break;
      }
      const std::size_t split_start = nodes_[next].start;
      const NodeId mid = add_node(split_start, split_start + active_length_);
      nodes_[active_node_].children[text_[active_edge_]] = mid;
      const NodeId leaf = add_node(pos, kOpenEnd);
      nodes_[mid].children.emplace(sym, leaf);
      nodes_[next].start += active_length_;
      nodes_[mid].children.emplace(text_[nodes_[next].start], next);
      ++work_.splits;
      ++work_.leaves;
      if (pending_link != kRoot) nodes_[pending_link].link = mid;
      pending_link = mid;
    }

    --remainder_;
    if (active_node_ == kRoot && active_length_ > 0) {
      --active_length_;
      active_edge_ = pos - remainder_ + 1;
      ++work_.link_hops;
    } else if (active_node_ != kRoot) {
      active_node_ = nodes_[active_node_].link;
      ++work_.link_hops;
    }
  }
  return remainder_;
}

}  // namespace psm
