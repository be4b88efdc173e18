#pragma once

// Bottom-up bulk builder. Positions 1..n of a sorted sequence are wired into
// a tree of depth exactly floor(log2 n) by pure position arithmetic: a
// position whose largest power-of-two divisor is 2^j takes the positions at
// distance 2^(j-1) as children, clipping the right child to the best
// remaining position when it would fall past n. Axis links are wired in
// input order and subtree counters are assigned in the same pass.

#include <cstdint>
#include <span>
#include <vector>

#include "cbst/tree.hpp"

namespace cbst {

// Parent/side assignment for positions 1..n. Index 0 is unused.
struct SkeletonPlan {
  std::size_t n = 0;
  std::uint32_t root = 0;                     // root position, 0 when n == 0
  std::vector<std::uint32_t> parent;          // parent[p], 0 for the root
  std::vector<std::uint8_t> is_right_child;   // valid where parent[p] != 0
};

SkeletonPlan plan_skeleton(std::size_t n);

struct BuildStats {
  std::uint64_t link_writes = 0;  // node link-field writes (tree + axis)
};

// keys must be strictly ascending (NotSortedError / DuplicateKeyError).
// Single pass per structure: O(n) total work, no recursion.
Cbst build_from_sorted(std::span<const Key> keys, Mode mode = Mode::ordinal,
                       BuildStats* stats = nullptr);

// True iff every node's right-subtree minimum sits after it on the axis and
// every left-subtree maximum sits before it — i.e. full BST order holds.
bool no_foul_check(const Cbst& tree);

}  // namespace cbst
