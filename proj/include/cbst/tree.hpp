#pragma once

// Compound binary search tree: a BST whose nodes are simultaneously threaded
// into a key-sorted doubly linked list (the axis). Walking next-links from
// head() yields exactly the in-order traversal of the tree, so min/max,
// successor and predecessor are single link follows, and deletion can pick
// its replacement from the axis neighbours in O(1) instead of descending a
// subtree.
//
// Nodes live in an arena owned by the tree and are addressed through NodeRef
// handles (slot index + generation). A handle stays valid until its node is
// erased; using it afterwards throws StaleHandleError rather than touching
// reused memory.
//
// Two counter-maintenance modes, fixed at construction:
//   plain   — subtree counters are not kept. erase() performs a constant
//             number of link writes regardless of tree size; select/rank
//             are unavailable (ModeError).
//   ordinal — lcount/rcount are exact after every mutation, which costs an
//             O(depth) counter fixup per insert/erase and enables the
//             select/rank ordinal queries.
//
// Concurrency: single writer. Mutations need exclusive access; any number of
// readers are safe between mutations. No internal locking.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbst/errors.hpp"

namespace cbst {

using Key = std::int64_t;

enum class Mode { plain, ordinal };

enum class NodeClass { terminal, partial_knot, complete_knot };

// Opaque node handle. Comparable; cheap to copy.
struct NodeRef {
  std::uint32_t slot = 0xffffffffu;
  std::uint32_t generation = 0;
  friend bool operator==(NodeRef, NodeRef) = default;
};

// Signed axis-interval delta and unit step contributed by one node on a
// root-to-node walk. The running sum of flexion+step along the walk equals
// the visited node's 1-based axis ordinal.
struct FlexStep {
  std::int64_t flexion = 0;
  int step = 0;  // +1 for the root and right children, -1 for left children
};

struct DeleteStats {
  // Writes to node link fields (parent/left/right/prev/next), excluding the
  // search descent. Updates of the root/head/tail handles are not counted.
  std::uint32_t relinks = 0;
  // lcount/rcount decrements on the root-to-removal-position path. Always 0
  // in plain mode.
  std::uint32_t counter_fixups = 0;
};

struct SearchStats {
  std::uint64_t nodes_visited = 0;
  std::uint64_t comparisons = 0;  // executed key order tests
};

struct ValidationCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

// Outcome of validate(); failures are entries, never exceptions.
struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const ValidationCheck* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

class Cbst {
 public:
  explicit Cbst(Mode mode = Mode::ordinal) : mode_(mode) {}

  Mode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  std::optional<NodeRef> root() const noexcept { return opt_ref(root_); }
  std::optional<NodeRef> head() const noexcept { return opt_ref(head_); }
  std::optional<NodeRef> tail() const noexcept { return opt_ref(tail_); }

  // Node field accessors. All throw StaleHandleError on a dead handle.
  Key key(NodeRef r) const { return nd(resolve(r)).key; }
  std::optional<NodeRef> parent(NodeRef r) const { return opt_ref(nd(resolve(r)).parent); }
  std::optional<NodeRef> left(NodeRef r) const { return opt_ref(nd(resolve(r)).left); }
  std::optional<NodeRef> right(NodeRef r) const { return opt_ref(nd(resolve(r)).right); }
  std::optional<NodeRef> next(NodeRef r) const { return opt_ref(nd(resolve(r)).next); }
  std::optional<NodeRef> prev(NodeRef r) const { return opt_ref(nd(resolve(r)).prev); }
  std::uint32_t left_count(NodeRef r) const { return nd(resolve(r)).lcount; }
  std::uint32_t right_count(NodeRef r) const { return nd(resolve(r)).rcount; }

  NodeClass classify(NodeRef r) const;

  // Root has depth 0.
  std::size_t depth_of(NodeRef r) const;
  // Maximum depth over all nodes; empty tree has no depth at all.
  std::optional<std::size_t> max_depth() const;

  std::optional<NodeRef> find(Key k) const;
  std::optional<NodeRef> find(Key k, SearchStats& stats) const;

  // Axis neighbours: exactly one link dereference, no tree descent. The
  // optional counter records link-field reads for instrumented tests.
  std::optional<NodeRef> successor(NodeRef r, std::uint64_t* link_follows = nullptr) const;
  std::optional<NodeRef> predecessor(NodeRef r, std::uint64_t* link_follows = nullptr) const;

  // Keys by next-links from head; strictly ascending, length == size().
  std::vector<Key> in_order() const;

  ValidationReport validate() const;

  // Attaches the key as a new terminal found by standard BST descent and
  // splices it into the axis immediately beside its parent (before it for a
  // left child, after it for a right child) — no axis scan.
  NodeRef insert(Key k);

  // Removes the key. A node with two children is replaced by an axis
  // neighbour (see choose_alternate), so the number of link writes is a
  // small constant independent of tree size.
  DeleteStats erase(Key k);

  // For a node with two children: the axis successor unless that is itself
  // a CompleteKnot, else the axis predecessor. Never returns a CompleteKnot.
  // ContractError if the node does not have two children.
  NodeRef choose_alternate(NodeRef r) const;

  // --- ordinal queries (ordinal mode only; ModeError otherwise) ---

  FlexStep flex_step(NodeRef r) const;

  // Node at 1-based axis position n, located by descending from the root
  // while accumulating flexion+step. Visits at most max_depth()+1 nodes.
  NodeRef select(std::size_t ordinal, std::size_t* nodes_visited = nullptr) const;

  // 1-based axis position of the key. Inverse of select.
  std::size_t rank(Key k) const;

 private:
  static constexpr std::uint32_t knull = 0xffffffffu;

  struct Node {
    Key key = 0;
    std::uint32_t parent = knull;
    std::uint32_t left = knull;
    std::uint32_t right = knull;
    std::uint32_t prev = knull;
    std::uint32_t next = knull;
    std::uint32_t lcount = 0;
    std::uint32_t rcount = 0;
    std::uint32_t generation = 0;
    bool alive = false;
  };

  Node& nd(std::uint32_t i) { return slots_[i]; }
  const Node& nd(std::uint32_t i) const { return slots_[i]; }

  std::optional<NodeRef> opt_ref(std::uint32_t i) const {
    if (i == knull) return std::nullopt;
    return NodeRef{i, slots_[i].generation};
  }
  NodeRef ref(std::uint32_t i) const { return NodeRef{i, slots_[i].generation}; }

  std::uint32_t resolve(NodeRef r) const;

  std::uint32_t alloc_node(Key k);
  void release_node(std::uint32_t i);

  NodeClass classify_idx(std::uint32_t i) const {
    const Node& n = nd(i);
    int c = (n.left != knull) + (n.right != knull);
    return c == 0 ? NodeClass::terminal
                  : (c == 1 ? NodeClass::partial_knot : NodeClass::complete_knot);
  }

  std::uint32_t alternate_idx(std::uint32_t i) const;
  void unlink_axis(std::uint32_t i, DeleteStats& st);
  void replace_child(std::uint32_t parent, std::uint32_t was, std::uint32_t now,
                     DeleteStats& st);

  std::vector<Node> slots_;
  std::vector<std::uint32_t> free_;
  std::uint32_t root_ = knull;
  std::uint32_t head_ = knull;
  std::uint32_t tail_ = knull;
  std::size_t size_ = 0;
  Mode mode_;

  friend struct BuilderAccess;  // bulk builder wires the arena directly
  friend struct RawAccess;      // test-only corruption hooks
};

}  // namespace cbst
