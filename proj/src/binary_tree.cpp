#include "hooklen/binary_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace hooklen {

namespace {

void append_shifted(std::vector<NodeIndex>& out, const std::vector<NodeIndex>& in,
                    NodeIndex offset) {
  for (NodeIndex link : in) {
    out.push_back(link == BinaryTree::kNone ? BinaryTree::kNone : link + offset);
  }
}

}  // namespace

BinaryTree BinaryTree::leaf() { return BinaryTree({kNone}, {kNone}); }

BinaryTree BinaryTree::join(const BinaryTree& left, const BinaryTree& right) {
  const auto left_n = static_cast<NodeIndex>(left.size());
  std::vector<NodeIndex> l;
  std::vector<NodeIndex> r;
  l.reserve(left.size() + right.size() + 1);
  r.reserve(left.size() + right.size() + 1);
  l.push_back(left.empty() ? kNone : 1);
  r.push_back(right.empty() ? kNone : 1 + left_n);
  append_shifted(l, left.left_, 1);
  append_shifted(r, left.right_, 1);
  append_shifted(l, right.left_, 1 + left_n);
  append_shifted(r, right.right_, 1 + left_n);
  return BinaryTree(std::move(l), std::move(r));
}

BinaryTree BinaryTree::left_chain(std::size_t n) {
  std::vector<std::uint32_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) sizes[i] = static_cast<std::uint32_t>(n - 1 - i);
  return from_left_sizes(sizes);
}

BinaryTree BinaryTree::right_chain(std::size_t n) {
  const std::vector<std::uint32_t> sizes(n, 0);
  return from_left_sizes(sizes);
}

BinaryTree BinaryTree::from_left_sizes(std::span<const std::uint32_t> left_sizes) {
  const std::size_t n = left_sizes.size();
  std::vector<NodeIndex> l(n, kNone);
  std::vector<NodeIndex> r(n, kNone);
  // Pending subtree sizes; the top is the subtree whose root comes next in preorder.
  std::vector<std::uint32_t> pending;
  if (n > 0) pending.push_back(static_cast<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (pending.empty()) {
      throw std::invalid_argument("left-size sequence closes the tree early at position " +
                                  std::to_string(i));
    }
    const std::uint32_t s = pending.back();
    pending.pop_back();
    const std::uint32_t k = left_sizes[i];
    if (k > s - 1) {
      throw std::invalid_argument("left size " + std::to_string(k) + " at position " +
                                  std::to_string(i) + " exceeds subtree size " +
                                  std::to_string(s));
    }
    const std::uint32_t right_n = s - 1 - k;
    const auto at = static_cast<NodeIndex>(i);
    if (k > 0) l[i] = at + 1;
    if (right_n > 0) {
      r[i] = at + 1 + static_cast<NodeIndex>(k);
      pending.push_back(right_n);
    }
    if (k > 0) pending.push_back(k);
  }
  return BinaryTree(std::move(l), std::move(r));
}

BinaryTree BinaryTree::from_links(NodeIndex root, std::span<const NodeIndex> left,
                                  std::span<const NodeIndex> right) {
  if (left.size() != right.size()) {
    throw std::invalid_argument("link arrays differ in length");
  }
  if (root == kNone) return BinaryTree();
  const auto total = static_cast<NodeIndex>(left.size());
  auto check = [total](NodeIndex id) {
    if (id != kNone && (id < 0 || id >= total)) {
      throw std::invalid_argument("node id " + std::to_string(id) + " out of range");
    }
  };
  check(root);

  std::vector<NodeIndex> l;
  std::vector<NodeIndex> r;
  std::vector<bool> seen(left.size(), false);
  struct Frame {
    NodeIndex node;
    NodeIndex parent;  // new id of the parent, kNone for the root
    bool is_right;
  };
  std::vector<Frame> stack{{root, kNone, false}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (seen[f.node]) throw std::invalid_argument("node reached twice; links are not a tree");
    seen[f.node] = true;
    const auto id = static_cast<NodeIndex>(l.size());
    l.push_back(kNone);
    r.push_back(kNone);
    if (f.parent != kNone) (f.is_right ? r : l)[f.parent] = id;
    const NodeIndex lc = left[f.node];
    const NodeIndex rc = right[f.node];
    check(lc);
    check(rc);
    if (rc != kNone) stack.push_back({rc, id, true});
    if (lc != kNone) stack.push_back({lc, id, false});
  }
  return BinaryTree(std::move(l), std::move(r));
}

BinaryTree BinaryTree::subtree(std::size_t v) const {
  if (v >= size()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  const std::vector<std::uint32_t> sizes = subtree_sizes(*this);
  const std::size_t end = v + sizes[v];
  const auto offset = static_cast<NodeIndex>(v);
  std::vector<NodeIndex> l;
  std::vector<NodeIndex> r;
  l.reserve(sizes[v]);
  r.reserve(sizes[v]);
  for (std::size_t i = v; i < end; ++i) {
    l.push_back(left_[i] == kNone ? kNone : left_[i] - offset);
    r.push_back(right_[i] == kNone ? kNone : right_[i] - offset);
  }
  return BinaryTree(std::move(l), std::move(r));
}

BinaryTree BinaryTree::left() const {
  if (empty() || left_[0] == kNone) return BinaryTree();
  return subtree(static_cast<std::size_t>(left_[0]));
}

BinaryTree BinaryTree::right() const {
  if (empty() || right_[0] == kNone) return BinaryTree();
  return subtree(static_cast<std::size_t>(right_[0]));
}

std::vector<std::uint32_t> subtree_sizes(const BinaryTree& t) {
  std::vector<std::uint32_t> sizes(t.size(), 1);
  // Children always follow their parent in preorder.
  for (std::size_t i = t.size(); i-- > 0;) {
    if (const NodeIndex c = t.left_child(i); c != BinaryTree::kNone) sizes[i] += sizes[c];
    if (const NodeIndex c = t.right_child(i); c != BinaryTree::kNone) sizes[i] += sizes[c];
  }
  return sizes;
}

HookMultiset::HookMultiset(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  const std::size_t n = entries_.size();
  if (n == 0) throw std::invalid_argument("hook multiset must be nonempty");
  if (entries_.front() < 1 || entries_.back() != n) {
    throw std::invalid_argument("hook entries must lie in [1, n] with the maximum equal to n");
  }
  if (n > 1 && entries_[n - 2] == n) {
    throw std::invalid_argument("exactly one hook entry may equal n");
  }
}

std::size_t HookMultiset::count(std::uint32_t h) const {
  const auto [lo, hi] = std::equal_range(entries_.begin(), entries_.end(), h);
  return static_cast<std::size_t>(hi - lo);
}

HookMultiset hook_lengths(const BinaryTree& t) {
  if (t.empty()) throw std::invalid_argument("hook lengths of the empty tree are undefined");
  return HookMultiset(subtree_sizes(t));
}

std::size_t leaf_count(const BinaryTree& t) {
  std::size_t leaves = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.left_child(i) == BinaryTree::kNone && t.right_child(i) == BinaryTree::kNone) ++leaves;
  }
  return leaves;
}

}  // namespace hooklen
