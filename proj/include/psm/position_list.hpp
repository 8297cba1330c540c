#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace psm {

/// Doubly linked list of distinct text positions (1-based), with the
/// nodes stored in arrays indexed by position. Position 0 is the null
/// link, so contains(j) doubles as the position -> node lookup.
class PositionList {
 public:
  using Position = std::size_t;
  static constexpr Position kNull = 0;

  /// Makes positions 1..n addressable.
  void grow_to(Position n) {
    if (n + 1 > next_.size()) {
      next_.resize(n + 1, kNull);
      prev_.resize(n + 1, kNull);
      present_.resize(n + 1, false);
    }
  }

  bool contains(Position j) const noexcept { return j < present_.size() && present_[j]; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  Position head() const noexcept { return head_; }
  Position tail() const noexcept { return tail_; }
  Position next(Position j) const { return next_[j]; }
  Position prev(Position j) const { return prev_[j]; }

  void push_back(Position j) {
    assert(j != kNull && j < present_.size() && !present_[j]);
    present_[j] = true;
    prev_[j] = tail_;
    next_[j] = kNull;
    if (tail_ != kNull) next_[tail_] = j;
    else head_ = j;
    tail_ = j;
    ++size_;
  }

  /// Links j immediately before the existing node `successor`.
  void insert_before(Position j, Position successor) {
    assert(j != kNull && j < present_.size() && !present_[j] && contains(successor));
    present_[j] = true;
    const Position before = prev_[successor];
    prev_[j] = before;
    next_[j] = successor;
    prev_[successor] = j;
    if (before != kNull) next_[before] = j;
    else head_ = j;
    ++size_;
  }

  std::vector<Position> to_vector() const {
    std::vector<Position> out;
    out.reserve(size_);
    for (Position j = head_; j != kNull; j = next_[j]) out.push_back(j);
    return out;
  }

 private:
  std::vector<Position> next_{kNull};
  std::vector<Position> prev_{kNull};
  std::vector<bool> present_{false};
  Position head_ = kNull;
  Position tail_ = kNull;
  std::size_t size_ = 0;
};

}  // namespace psm
