#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hooklen {

using NodeIndex = std::int32_t;

/// Immutable unlabeled binary tree.
///
/// Vertices are stored in preorder with node 0 as the root, so the subtree of
/// any vertex v occupies the contiguous index range [v, v + size(v)). Two trees
/// of the same shape have identical link arrays, which makes defaulted
/// equality structural equality. The default-constructed tree is the empty
/// tree, the unique element of B(0).
///
/// All traversals are iterative; chains of any length are safe.
class BinaryTree {
 public:
  static constexpr NodeIndex kNone = -1;

  BinaryTree() = default;

  static BinaryTree leaf();
  static BinaryTree join(const BinaryTree& left, const BinaryTree& right);
  static BinaryTree left_chain(std::size_t n);
  static BinaryTree right_chain(std::size_t n);

  /// Builds a tree from the preorder sequence of left-subtree sizes. The
  /// sequence length is the vertex count. Throws std::invalid_argument when a
  /// left size does not fit inside its vertex's subtree.
  static BinaryTree from_left_sizes(std::span<const std::uint32_t> left_sizes);

  /// Builds a tree from child links in an arbitrary numbering; `left[v]` and
  /// `right[v]` are node ids or kNone. Nodes unreachable from `root` are
  /// ignored. Throws std::invalid_argument on out-of-range ids or shared nodes.
  static BinaryTree from_links(NodeIndex root, std::span<const NodeIndex> left,
                               std::span<const NodeIndex> right);

  std::size_t size() const noexcept { return left_.size(); }
  bool empty() const noexcept { return left_.empty(); }

  NodeIndex left_child(std::size_t v) const { return left_.at(v); }
  NodeIndex right_child(std::size_t v) const { return right_.at(v); }

  /// Copy of the subtree rooted at v.
  BinaryTree subtree(std::size_t v) const;
  BinaryTree left() const;
  BinaryTree right() const;

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

 private:
  BinaryTree(std::vector<NodeIndex> left, std::vector<NodeIndex> right)
      : left_(std::move(left)), right_(std::move(right)) {}

  std::vector<NodeIndex> left_;
  std::vector<NodeIndex> right_;
};

inline std::size_t size(const BinaryTree& t) noexcept { return t.size(); }

/// Subtree size of every vertex, indexed by preorder position.
std::vector<std::uint32_t> subtree_sizes(const BinaryTree& t);

/// Multiset of hook lengths of a nonempty tree, kept sorted ascending.
class HookMultiset {
 public:
  /// Throws std::invalid_argument unless exactly one entry equals the entry
  /// count n and every entry lies in [1, n].
  explicit HookMultiset(std::vector<std::uint32_t> entries);

  std::size_t n() const noexcept { return entries_.size(); }
  std::span<const std::uint32_t> entries() const noexcept { return entries_; }
  std::size_t count(std::uint32_t h) const;

  friend bool operator==(const HookMultiset&, const HookMultiset&) = default;
  friend auto operator<=>(const HookMultiset&, const HookMultiset&) = default;

 private:
  std::vector<std::uint32_t> entries_;
};

/// The hook length of v is the number of descendants of v, v included.
/// Throws std::invalid_argument for the empty tree.
HookMultiset hook_lengths(const BinaryTree& t);

std::size_t leaf_count(const BinaryTree& t);

}  // namespace hooklen
