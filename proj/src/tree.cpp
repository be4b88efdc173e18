#include "cbst/tree.hpp"

#include <algorithm>
#include <cassert>

namespace cbst {

std::uint32_t Cbst::resolve(NodeRef r) const {
  if (r.slot >= slots_.size() || !slots_[r.slot].alive ||
      slots_[r.slot].generation != r.generation) {
    throw StaleHandleError("node handle does not name a live node");
  }
  return r.slot;
}

std::uint32_t Cbst::alloc_node(Key k) {
  std::uint32_t i;
  if (!free_.empty()) {
    i = free_.back();
    free_.pop_back();
  } else {
    i = static_cast<std::uint32_t>(slots_.size());
    slots_.emplace_back();
  }
  Node& n = nd(i);
  std::uint32_t gen = n.generation;
  n = Node{};
  n.generation = gen;
  n.key = k;
  n.alive = true;
  return i;
}

void Cbst::release_node(std::uint32_t i) {
  Node& n = nd(i);
  n.alive = false;
  ++n.generation;  // invalidates outstanding handles to this slot
  free_.push_back(i);
}

NodeClass Cbst::classify(NodeRef r) const { return classify_idx(resolve(r)); }

std::size_t Cbst::depth_of(NodeRef r) const {
  std::uint32_t i = resolve(r);
  std::size_t d = 0;
  while (nd(i).parent != knull) {
    i = nd(i).parent;
    ++d;
  }
  return d;
}

std::optional<std::size_t> Cbst::max_depth() const {
  if (root_ == knull) return std::nullopt;
  std::size_t best = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto [i, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    if (nd(i).left != knull) stack.push_back({nd(i).left, d + 1});
    if (nd(i).right != knull) stack.push_back({nd(i).right, d + 1});
  }
  return best;
}

std::optional<NodeRef> Cbst::find(Key k) const {
  SearchStats ignored;
  return find(k, ignored);
}

std::optional<NodeRef> Cbst::find(Key k, SearchStats& stats) const {
  std::uint32_t cur = root_;
  while (cur != knull) {
    ++stats.nodes_visited;
    const Node& n = nd(cur);
    ++stats.comparisons;
    if (k < n.key) {
      cur = n.left;
    } else {
      ++stats.comparisons;
      if (n.key < k) {
        cur = n.right;
      } else {
        return ref(cur);
      }
    }
  }
  return std::nullopt;
}

std::optional<NodeRef> Cbst::successor(NodeRef r, std::uint64_t* link_follows) const {
  std::uint32_t i = resolve(r);
  if (link_follows) ++*link_follows;
  return opt_ref(nd(i).next);
}

std::optional<NodeRef> Cbst::predecessor(NodeRef r, std::uint64_t* link_follows) const {
  std::uint32_t i = resolve(r);
  if (link_follows) ++*link_follows;
  return opt_ref(nd(i).prev);
}

std::vector<Key> Cbst::in_order() const {
  std::vector<Key> out;
  out.reserve(size_);
  for (std::uint32_t i = head_; i != knull; i = nd(i).next) out.push_back(nd(i).key);
  return out;
}

ValidationReport Cbst::validate() const {
  ValidationReport rep;
  auto check = [&rep](std::string name) -> ValidationCheck& {
    rep.checks.push_back({std::move(name), true, {}});
    return rep.checks.back();
  };
  auto fail = [](ValidationCheck& c, std::string detail) {
    if (c.pass) {
      c.pass = false;
      c.detail = std::move(detail);
    }
  };

  const std::uint32_t nil = knull;
  const std::size_t cap = slots_.size();

  // Axis walk: order, mutual prev/next consistency, membership.
  ValidationCheck& ax = check("axis_ascending");
  std::vector<std::uint32_t> axis;
  axis.reserve(size_);
  {
    std::uint32_t prev_i = nil;
    for (std::uint32_t i = head_; i != nil; i = nd(i).next) {
      if (!nd(i).alive) {
        fail(ax, "axis reaches a freed slot");
        break;
      }
      if (nd(i).prev != prev_i) fail(ax, "prev link does not mirror next link");
      if (prev_i != nil && !(nd(prev_i).key < nd(i).key))
        fail(ax, "axis keys not strictly ascending");
      axis.push_back(i);
      prev_i = i;
      if (axis.size() > cap) {
        fail(ax, "axis walk exceeds arena size (cycle?)");
        break;
      }
    }
    if (tail_ != prev_i) fail(ax, "tail does not terminate the axis");
  }

  // Tree walk: BST order via strictly ascending in-order, link consistency.
  ValidationCheck& bst = check("bst_order");
  std::vector<std::uint32_t> inorder;
  inorder.reserve(size_);
  if (root_ != nil) {
    if (nd(root_).parent != nil) fail(bst, "root has a parent link");
    std::vector<std::uint32_t> stack;
    std::uint32_t cur = root_;
    bool prev_set = false;
    Key prev_key = 0;
    std::size_t steps = 0;
    const std::size_t step_limit = 4 * cap + 4;
    while ((cur != nil || !stack.empty()) && steps <= step_limit) {
      while (cur != nil && ++steps <= step_limit) {
        stack.push_back(cur);
        cur = nd(cur).left;
      }
      if (stack.empty() || steps > step_limit) break;
      cur = stack.back();
      stack.pop_back();
      const Node& n = nd(cur);
      if (!n.alive) fail(bst, "tree reaches a freed slot");
      if (n.left != nil && nd(n.left).parent != cur)
        fail(bst, "left child's parent link is wrong");
      if (n.right != nil && nd(n.right).parent != cur)
        fail(bst, "right child's parent link is wrong");
      if (prev_set && !(prev_key < n.key)) fail(bst, "in-order keys not strictly ascending");
      prev_key = n.key;
      prev_set = true;
      inorder.push_back(cur);
      cur = n.right;
    }
    if (steps > step_limit) fail(bst, "tree walk exceeds arena size (cycle?)");
  }

  // Axis sequence must be the in-order traversal, node for node.
  ValidationCheck& eq = check("axis_equals_inorder");
  if (axis != inorder) fail(eq, "axis sequence differs from in-order traversal");

  // Stored counters vs recount (ordinal mode; plain trees keep none).
  ValidationCheck& cnt = check("counters");
  if (mode_ == Mode::ordinal && root_ != nil) {
    std::vector<std::uint32_t> sz(cap, 0);
    // children precede parents when walking a DFS finish order
    std::vector<std::uint32_t> order;
    order.reserve(inorder.size());
    std::vector<std::uint32_t> stack{root_};
    while (!stack.empty()) {
      std::uint32_t i = stack.back();
      stack.pop_back();
      order.push_back(i);
      if (nd(i).left != nil) stack.push_back(nd(i).left);
      if (nd(i).right != nil) stack.push_back(nd(i).right);
      if (order.size() > cap) break;
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Node& n = nd(*it);
      std::uint32_t ls = n.left != nil ? sz[n.left] : 0;
      std::uint32_t rs = n.right != nil ? sz[n.right] : 0;
      sz[*it] = ls + rs + 1;
      if (n.lcount != ls || n.rcount != rs) fail(cnt, "stored subtree counter mismatch");
    }
  } else if (mode_ == Mode::plain) {
    cnt.detail = "not maintained in plain mode";
  }

  // Depth map for the corollary checks.
  std::vector<std::size_t> depth(cap, 0);
  if (root_ != nil) {
    std::vector<std::uint32_t> stack{root_};
    depth[root_] = 0;
    std::size_t seen = 0;
    while (!stack.empty() && seen <= cap) {
      std::uint32_t i = stack.back();
      stack.pop_back();
      ++seen;
      if (nd(i).left != nil) {
        depth[nd(i).left] = depth[i] + 1;
        stack.push_back(nd(i).left);
      }
      if (nd(i).right != nil) {
        depth[nd(i).right] = depth[i] + 1;
        stack.push_back(nd(i).right);
      }
    }
  }

  // Axis-adjacent pairs never sit at equal depth.
  ValidationCheck& dd = check("adjacent_depth_distinct");
  // The shallower of an axis-adjacent pair is an ancestor of the deeper.
  ValidationCheck& anc = check("adjacent_ancestry");
  // Axis-adjacent pairs are never two CompleteKnots nor two terminals.
  ValidationCheck& cls = check("adjacent_class_exclusion");
  for (std::size_t s = 0; s + 1 < axis.size(); ++s) {
    std::uint32_t a = axis[s], b = axis[s + 1];
    if (depth[a] == depth[b]) fail(dd, "axis-adjacent nodes at equal depth");
    std::uint32_t deep = depth[a] > depth[b] ? a : b;
    std::uint32_t shallow = deep == a ? b : a;
    std::uint32_t walk = deep;
    while (walk != nil && depth[walk] > depth[shallow]) walk = nd(walk).parent;
    if (walk != shallow) fail(anc, "shallower axis neighbour is not an ancestor");
    NodeClass ca = classify_idx(a), cb = classify_idx(b);
    if (ca == NodeClass::complete_knot && cb == NodeClass::complete_knot)
      fail(cls, "axis-adjacent complete knots");
    if (ca == NodeClass::terminal && cb == NodeClass::terminal)
      fail(cls, "axis-adjacent terminals");
  }

  // Size bookkeeping and extrema.
  ValidationCheck& sc = check("size_and_extrema");
  if (axis.size() != size_) fail(sc, "axis length differs from size");
  if (inorder.size() != size_) fail(sc, "tree node count differs from size");
  std::size_t live = 0;
  for (const Node& n : slots_) live += n.alive;
  if (live != size_) fail(sc, "live arena slots differ from size");
  if (size_ == 0) {
    if (root_ != nil || head_ != nil || tail_ != nil)
      fail(sc, "empty tree with dangling handles");
  } else if (!axis.empty()) {
    if (head_ != axis.front()) fail(sc, "head is not the axis front");
    if (tail_ != axis.back()) fail(sc, "tail is not the axis back");
  }

  return rep;
}

}  // namespace cbst
