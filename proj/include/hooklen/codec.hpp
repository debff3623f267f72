#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "hooklen/binary_tree.hpp"

namespace hooklen {

// Preorder code: each vertex emits '1', then its left subtree, then its right
// subtree; every absent child emits '0'. The final '0' is always forced and is
// dropped, so a tree on n vertices has a 2n-character code with n of each
// symbol and every prefix holding at least as many '1's as '0's.
class TreeCode {
 public:
  /// Code of the empty tree.
  TreeCode() = default;

  /// Throws std::invalid_argument on characters outside {'0','1'}, odd length,
  /// unequal symbol counts, or a prefix with more '0's than '1's.
  static TreeCode parse(std::string_view text);

  std::size_t n() const noexcept { return bits_.size() / 2; }
  const std::string& str() const noexcept { return bits_; }

  friend bool operator==(const TreeCode&, const TreeCode&) = default;
  friend auto operator<=>(const TreeCode&, const TreeCode&) = default;

 private:
  explicit TreeCode(std::string bits) : bits_(std::move(bits)) {}
  friend TreeCode encode(const BinaryTree& t);

  std::string bits_;
};

TreeCode encode(const BinaryTree& t);
BinaryTree decode(const TreeCode& code);

}  // namespace hooklen
