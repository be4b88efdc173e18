#include <cassert>

#include "cbst/tree.hpp"

// Online mutations. Insertion attaches a terminal and splices it into the
// axis next to its parent, so the axis never needs scanning. Deletion of a
// node with two children takes an axis neighbour as the replacement; that
// neighbour can never have two children itself (axis-adjacent nodes are
// never both complete knots), so the whole operation is a bounded number of
// link writes.

namespace cbst {

NodeRef Cbst::insert(Key k) {
  if (root_ == knull) {
    std::uint32_t i = alloc_node(k);
    root_ = head_ = tail_ = i;
    size_ = 1;
    return ref(i);
  }

  // Descend, remembering the path for the counter pass. Nothing is written
  // until the key is known to be absent.
  std::vector<std::uint32_t> path;
  std::uint32_t cur = root_;
  bool go_left = false;
  for (;;) {
    const Node& n = nd(cur);
    if (k == n.key) throw DuplicateKeyError("key already present");
    path.push_back(cur);
    go_left = k < n.key;
    std::uint32_t nxt = go_left ? n.left : n.right;
    if (nxt == knull) break;
    cur = nxt;
  }

  std::uint32_t fresh = alloc_node(k);  // may reallocate the arena
  std::uint32_t p = cur;
  nd(fresh).parent = p;
  if (go_left) {
    nd(p).left = fresh;
    // left child: axis position immediately before the parent
    std::uint32_t before = nd(p).prev;
    nd(fresh).next = p;
    nd(fresh).prev = before;
    nd(p).prev = fresh;
    if (before != knull)
      nd(before).next = fresh;
    else
      head_ = fresh;
  } else {
    nd(p).right = fresh;
    // right child: immediately after the parent
    std::uint32_t after = nd(p).next;
    nd(fresh).prev = p;
    nd(fresh).next = after;
    nd(p).next = fresh;
    if (after != knull)
      nd(after).prev = fresh;
    else
      tail_ = fresh;
  }

  if (mode_ == Mode::ordinal) {
    for (std::uint32_t i : path) {
      if (k < nd(i).key)
        ++nd(i).lcount;
      else
        ++nd(i).rcount;
    }
  }

  ++size_;
  return ref(fresh);
}

std::uint32_t Cbst::alternate_idx(std::uint32_t i) const {
  std::uint32_t succ = nd(i).next;
  if (succ != knull && classify_idx(succ) != NodeClass::complete_knot) return succ;
  std::uint32_t pred = nd(i).prev;
  assert(pred != knull && classify_idx(pred) != NodeClass::complete_knot);
  return pred;
}

NodeRef Cbst::choose_alternate(NodeRef r) const {
  std::uint32_t i = resolve(r);
  if (classify_idx(i) != NodeClass::complete_knot)
    throw ContractError("choose_alternate requires a node with two children");
  return ref(alternate_idx(i));
}

void Cbst::unlink_axis(std::uint32_t i, DeleteStats& st) {
  std::uint32_t p = nd(i).prev, n = nd(i).next;
  if (p != knull) {
    nd(p).next = n;
    ++st.relinks;
  } else {
    head_ = n;
  }
  if (n != knull) {
    nd(n).prev = p;
    ++st.relinks;
  } else {
    tail_ = p;
  }
}

void Cbst::replace_child(std::uint32_t parent, std::uint32_t was, std::uint32_t now,
                         DeleteStats& st) {
  if (parent == knull) {
    root_ = now;
    return;
  }
  if (nd(parent).left == was)
    nd(parent).left = now;
  else
    nd(parent).right = now;
  ++st.relinks;
}

DeleteStats Cbst::erase(Key k) {
  std::uint32_t d = root_;
  while (d != knull) {
    if (k == nd(d).key) break;
    d = k < nd(d).key ? nd(d).left : nd(d).right;
  }
  if (d == knull) throw KeyNotFoundError("key not present");

  DeleteStats st;
  const bool two_children = nd(d).left != knull && nd(d).right != knull;
  // the node physically detached from its tree position
  std::uint32_t removed = two_children ? alternate_idx(d) : d;

  if (mode_ == Mode::ordinal) {
    for (std::uint32_t c = removed, p = nd(c).parent; p != knull; c = p, p = nd(p).parent) {
      if (nd(p).left == c)
        --nd(p).lcount;
      else
        --nd(p).rcount;
      ++st.counter_fixups;
    }
  }

  if (!two_children) {
    std::uint32_t child = nd(d).left != knull ? nd(d).left : nd(d).right;
    replace_child(nd(d).parent, d, child, st);
    if (child != knull) {
      nd(child).parent = nd(d).parent;
      ++st.relinks;
    }
    unlink_axis(d, st);
  } else {
    std::uint32_t a = removed;
    assert(classify_idx(a) != NodeClass::complete_knot);
    // Detach the alternate from its own position, splicing its single child
    // up if it has one. Its parent may be d itself.
    std::uint32_t achild = nd(a).left != knull ? nd(a).left : nd(a).right;
    replace_child(nd(a).parent, a, achild, st);
    if (achild != knull) {
      nd(achild).parent = nd(a).parent;
      ++st.relinks;
    }
    // Transplant into d's position, adopting parent and both children
    // (d's child links may just have been updated by the detach above).
    std::uint32_t dl = nd(d).left, dr = nd(d).right, dp = nd(d).parent;
    nd(a).left = dl;
    ++st.relinks;
    if (dl != knull) {
      nd(dl).parent = a;
      ++st.relinks;
    }
    nd(a).right = dr;
    ++st.relinks;
    if (dr != knull) {
      nd(dr).parent = a;
      ++st.relinks;
    }
    nd(a).parent = dp;
    ++st.relinks;
    replace_child(dp, d, a, st);
    if (mode_ == Mode::ordinal) {
      nd(a).lcount = nd(d).lcount;
      nd(a).rcount = nd(d).rcount;
    }
    // The alternate is axis-adjacent to d, so dropping d from the axis is
    // all the axis repair there is.
    unlink_axis(d, st);
  }

  release_node(d);
  --size_;
  return st;
}

}  // namespace cbst
