#include "hooklen/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace hooklen {

BigInt catalan(std::size_t n) { return binomial(2 * n, n) / BigInt(n + 1); }

std::vector<BigInt> catalan_table(std::size_t n) {
  std::vector<BigInt> table;
  table.reserve(n + 1);
  table.emplace_back(1);
  for (std::size_t m = 0; m < n; ++m) {
    // C(m+1) = C(m) * 2(2m+1) / (m+2), exact at every step.
    table.push_back(table.back() * (2 * (2 * m + 1)) / (m + 2));
  }
  return table;
}

TreeEnumerator::TreeEnumerator(std::size_t n) : left_sizes_(n, 0), sizes_(n, 0) {
  refresh_sizes(0);
  tree_ = BinaryTree::from_left_sizes(left_sizes_);
}

void TreeEnumerator::refresh_sizes(std::size_t from) {
  // Replays the preorder size bookkeeping; positions before `from` keep their
  // sizes, but the pending stack has to be rebuilt from the start.
  std::vector<std::uint32_t> pending;
  if (!left_sizes_.empty()) pending.push_back(static_cast<std::uint32_t>(left_sizes_.size()));
  for (std::size_t i = 0; i < left_sizes_.size(); ++i) {
    const std::uint32_t s = pending.back();
    pending.pop_back();
    if (i >= from) sizes_[i] = s;
    const std::uint32_t k = left_sizes_[i];
    if (s - 1 - k > 0) pending.push_back(s - 1 - k);
    if (k > 0) pending.push_back(k);
  }
}

void TreeEnumerator::advance() {
  if (done_) return;
  // Rightmost position whose left size can still grow; everything after it
  // resets to the smallest completion (all left sizes zero).
  for (std::size_t i = left_sizes_.size(); i-- > 0;) {
    if (left_sizes_[i] + 1 < sizes_[i]) {
      ++left_sizes_[i];
      std::fill(left_sizes_.begin() + static_cast<std::ptrdiff_t>(i) + 1, left_sizes_.end(), 0);
      refresh_sizes(i + 1);
      tree_ = BinaryTree::from_left_sizes(left_sizes_);
      return;
    }
  }
  done_ = true;
}

std::vector<BinaryTree> enumerate_all(std::size_t n) {
  std::vector<BinaryTree> out;
  for (const BinaryTree& t : enumerate(n)) out.push_back(t);
  return out;
}

namespace {

// Number of trees of size n whose root has left size below k.
BigInt split_offset(const std::vector<BigInt>& cat, std::size_t n, std::size_t k) {
  BigInt offset = 0;
  for (std::size_t j = 0; j < k; ++j) offset += cat[j] * cat[n - 1 - j];
  return offset;
}

}  // namespace

BigInt rank(const BinaryTree& t) {
  const std::size_t n = t.size();
  if (n == 0) return 0;
  const std::vector<BigInt> cat = catalan_table(n);
  const std::vector<std::uint32_t> sizes = subtree_sizes(t);
  std::vector<BigInt> ranks(n);
  for (std::size_t i = n; i-- > 0;) {
    const NodeIndex l = t.left_child(i);
    const NodeIndex r = t.right_child(i);
    const std::size_t k = l == BinaryTree::kNone ? 0 : sizes[l];
    const std::size_t right_n = sizes[i] - 1 - k;
    BigInt value = split_offset(cat, sizes[i], k);
    if (l != BinaryTree::kNone) value += ranks[l] * cat[right_n];
    if (r != BinaryTree::kNone) value += ranks[r];
    ranks[i] = std::move(value);
  }
  return ranks[0];
}

BinaryTree unrank(std::size_t n, const BigInt& index) {
  const std::vector<BigInt> cat = catalan_table(n);
  if (index < 0 || index >= cat[n]) {
    throw std::out_of_range("rank " + index.get_str() + " outside [0, " + cat[n].get_str() +
                            ") for n = " + std::to_string(n));
  }
  struct Task {
    std::size_t size;
    BigInt index;
  };
  std::vector<std::uint32_t> left_sizes;
  left_sizes.reserve(n);
  std::vector<Task> stack;
  if (n > 0) stack.push_back({n, index});
  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    const std::size_t s = task.size;
    std::size_t k = 0;
    for (;; ++k) {
      const BigInt block = cat[k] * cat[s - 1 - k];
      if (task.index < block) break;
      task.index -= block;
    }
    const std::size_t right_n = s - 1 - k;
    BigInt left_index;
    BigInt right_index;
    mpz_fdiv_qr(left_index.get_mpz_t(), right_index.get_mpz_t(), task.index.get_mpz_t(),
                cat[right_n].get_mpz_t());
    left_sizes.push_back(static_cast<std::uint32_t>(k));
    if (right_n > 0) stack.push_back({right_n, std::move(right_index)});
    if (k > 0) stack.push_back({k, std::move(left_index)});
  }
  return BinaryTree::from_left_sizes(left_sizes);
}

}  // namespace hooklen
