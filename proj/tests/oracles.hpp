#pragma once

// Test-only reference implementations. They are deliberately naive and share
// no code paths with the library beyond BinaryTree::join/leaf.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hooklen/binary_tree.hpp"

namespace hooklen::oracle {

// Recursive generation in the documented canonical order: root left size
// k = 0..n-1, then left subtree order, then right subtree order.
inline std::vector<BinaryTree> trees_recursive(std::size_t n) {
  if (n == 0) return {BinaryTree()};
  std::vector<BinaryTree> out;
  for (std::size_t k = 0; k < n; ++k) {
    const auto lefts = trees_recursive(k);
    const auto rights = trees_recursive(n - 1 - k);
    for (const BinaryTree& l : lefts) {
      for (const BinaryTree& r : rights) out.push_back(BinaryTree::join(l, r));
    }
  }
  return out;
}

// Hook length of a vertex by recursing through its children.
inline std::uint32_t descendants(const BinaryTree& t, NodeIndex v) {
  if (v == BinaryTree::kNone) return 0;
  return 1 + descendants(t, t.left_child(v)) + descendants(t, t.right_child(v));
}

inline std::vector<std::uint32_t> hooks_recursive(const BinaryTree& t) {
  std::vector<std::uint32_t> out;
  for (std::size_t v = 0; v < t.size(); ++v) out.push_back(descendants(t, static_cast<NodeIndex>(v)));
  return out;
}

}  // namespace hooklen::oracle
