#pragma once

// Standalone key-carrying doubly linked chain used by the merge sorter.
// Same link discipline as the tree's axis, no tree links. Backed by
// std::list so merges splice nodes instead of copying elements.

#include <list>
#include <optional>
#include <span>
#include <vector>

#include "cbst/tree.hpp"

namespace cbst {

struct MergeStats;

class Chain {
 public:
  Chain() = default;

  static Chain from_keys(std::span<const Key> keys) {
    Chain c;
    for (Key k : keys) c.items_.push_back(k);
    return c;
  }

  void push_back(Key k) { items_.push_back(k); }

  std::size_t length() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }

  std::optional<Key> front() const {
    if (items_.empty()) return std::nullopt;
    return items_.front();
  }
  std::optional<Key> back() const {
    if (items_.empty()) return std::nullopt;
    return items_.back();
  }

  std::vector<Key> keys() const { return {items_.begin(), items_.end()}; }

  // Non-strict: duplicates are allowed in chains.
  bool is_ascending() const {
    const Key* last = nullptr;
    for (const Key& k : items_) {
      if (last && k < *last) return false;
      last = &k;
    }
    return true;
  }

  auto begin() const { return items_.cbegin(); }
  auto end() const { return items_.cend(); }

 private:
  std::list<Key> items_;

  friend Chain merge_chains(Chain x, Chain y, MergeStats* stats);
  friend std::vector<Chain> detect_runs(Chain input);
  friend std::vector<Chain> split_singletons(Chain input);
};

}  // namespace cbst
