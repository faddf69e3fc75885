#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "rehub/types.hpp"

namespace rehub {

// Flat sorted array holding at most `capacity` pairs in canonical order
// (distance, then object index). Small capacities make insertion-shift
// cheaper than a heap.
class BoundedBuffer {
 public:
  explicit BoundedBuffer(std::size_t capacity) : capacity_(capacity) {
    items_.reserve(capacity);
  }

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  bool full() const noexcept { return items_.size() >= capacity_; }

  // Distance of the last kept pair once full; kInfinity before that.
  Distance worst() const noexcept { return full() ? items_.back().dist : kInfinity; }

  std::span<const ObjectPair> items() const noexcept { return items_; }

  void clear() noexcept { items_.clear(); }

  // Plain bounded insert for lists where each index is pushed at most once.
  bool push(ObjectPair p) {
    if (capacity_ == 0) return false;
    if (full()) {
      if (!precedes(p, items_.back())) return false;
      items_.pop_back();
    }
    insert_sorted(p);
    return true;
  }

  // Insert that keeps one entry per object index: an existing entry is kept
  // if its distance is not larger, otherwise it is lowered and re-sorted.
  bool push_unique(ObjectPair p) {
    auto it = std::find_if(items_.begin(), items_.end(),
                           [&](const ObjectPair& q) { return q.index == p.index; });
    if (it != items_.end()) {
      if (it->dist <= p.dist) return false;
      items_.erase(it);
      insert_sorted(p);
      return true;
    }
    return push(p);
  }

 private:
  void insert_sorted(ObjectPair p) {
    auto pos = std::upper_bound(items_.begin(), items_.end(), p, precedes);
    items_.insert(pos, p);
  }

  std::size_t capacity_;
  std::vector<ObjectPair> items_;
};

}  // namespace rehub
