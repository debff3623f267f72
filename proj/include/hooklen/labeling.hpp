#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hooklen/binary_tree.hpp"
#include "hooklen/codec.hpp"
#include "hooklen/rational.hpp"

namespace hooklen {

inline constexpr std::size_t kDefaultLabelingCap = 10;
inline constexpr std::size_t kDefaultFiberCap = 8;

/// A rearrangement of 1..n.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<std::uint32_t> values);

  /// Comma-separated values, e.g. "2,1,3". The empty string is the empty
  /// permutation.
  static Permutation parse(std::string_view text);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const std::uint32_t> values() const noexcept { return values_; }

 private:
  std::vector<std::uint32_t> values_;
};

/// n! / prod_v h_v. Throws std::invalid_argument for the empty tree and
/// std::logic_error if the division is not exact.
BigInt increasing_labelings_count(const BinaryTree& t);

/// Counts, over all size(t)! labelings, those where every vertex's label is
/// smaller than all its descendants' labels. Throws CapExceeded above `cap`.
BigInt increasing_labelings_brute(const BinaryTree& t, std::size_t cap = kDefaultLabelingCap);

/// Shape of the binary search tree built by inserting p's values left to right;
/// strictly smaller keys go left.
BinaryTree bst_shape(const Permutation& p);

/// Number of permutations of 1..n per BST shape, keyed by the shape's code.
/// Throws CapExceeded above `cap`.
std::map<TreeCode, BigInt> shape_fiber_histogram(std::size_t n, std::size_t cap = kDefaultFiberCap);

/// Lines "code<TAB>count" sorted by code string.
std::string format_histogram(const std::map<TreeCode, BigInt>& histogram);

/// sum over B(n) of n!/prod h_v == n!, exactly. Throws CapExceeded above `cap`.
bool verify_eq2(std::size_t n, std::size_t cap = 14);

}  // namespace hooklen
