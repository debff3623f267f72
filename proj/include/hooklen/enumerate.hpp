#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "hooklen/binary_tree.hpp"
#include "hooklen/rational.hpp"

namespace hooklen {

/// (1/(n+1)) * C(2n, n).
BigInt catalan(std::size_t n);

/// catalan(0) .. catalan(n).
std::vector<BigInt> catalan_table(std::size_t n);

/// Sequential iterator over B(n) in canonical order: by left-subtree size of
/// the root ascending, then by the left subtree's order, then the right's.
///
/// That order is lexicographic order on the preorder sequence of left-subtree
/// sizes, so the state is that sequence plus the matching subtree sizes, O(n)
/// regardless of how many trees have been produced.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(std::size_t n);

  bool done() const noexcept { return done_; }
  const BinaryTree& tree() const noexcept { return tree_; }
  /// Preorder left-subtree sizes of the current tree.
  const std::vector<std::uint32_t>& left_sizes() const noexcept { return left_sizes_; }
  void advance();

 private:
  void refresh_sizes(std::size_t from);

  std::vector<std::uint32_t> left_sizes_;
  std::vector<std::uint32_t> sizes_;
  BinaryTree tree_;
  bool done_ = false;
};

/// Input range over B(n); `for (const BinaryTree& t : enumerate(n))`.
class TreeRange {
 public:
  struct Sentinel {};

  class Iterator {
   public:
    using value_type = BinaryTree;
    using difference_type = std::ptrdiff_t;

    explicit Iterator(TreeEnumerator* e) : e_(e) {}
    const BinaryTree& operator*() const { return e_->tree(); }
    Iterator& operator++() {
      e_->advance();
      return *this;
    }
    void operator++(int) { e_->advance(); }
    friend bool operator==(const Iterator& it, Sentinel) { return it.e_->done(); }

   private:
    TreeEnumerator* e_;
  };

  explicit TreeRange(std::size_t n) : enumerator_(n) {}
  Iterator begin() { return Iterator(&enumerator_); }
  Sentinel end() const { return {}; }

 private:
  TreeEnumerator enumerator_;
};

inline TreeRange enumerate(std::size_t n) { return TreeRange(n); }

std::vector<BinaryTree> enumerate_all(std::size_t n);

/// Position of t in the canonical order of B(size(t)).
BigInt rank(const BinaryTree& t);

/// Inverse of rank; does not materialize the enumeration. Throws
/// std::out_of_range unless 0 <= index < catalan(n).
BinaryTree unrank(std::size_t n, const BigInt& index);

}  // namespace hooklen
