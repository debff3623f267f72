#include "hooklen/labeling.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "hooklen/enumerate.hpp"
#include "hooklen/identity.hpp"

namespace hooklen {

Permutation::Permutation(std::vector<std::uint32_t> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (const std::uint32_t v : values_) {
    if (v < 1 || v > values_.size() || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(values_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<std::uint32_t> values;
  if (text.empty()) return Permutation();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view field = text.substr(start, comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    std::uint32_t value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || end != field.data() + field.size() || field.empty()) {
      throw std::invalid_argument("bad permutation entry '" + std::string(field) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> values(n);
  std::iota(values.begin(), values.end(), 1U);
  return Permutation(std::move(values));
}

BigInt increasing_labelings_count(const BinaryTree& t) {
  const HookMultiset hooks = hook_lengths(t);
  BigInt product = 1;
  for (const std::uint32_t h : hooks.entries()) product *= h;
  const BigInt total = factorial(t.size());
  if (!mpz_divisible_p(total.get_mpz_t(), product.get_mpz_t())) {
    throw std::logic_error("hook product does not divide n!");
  }
  return total / product;
}

BigInt increasing_labelings_brute(const BinaryTree& t, std::size_t cap) {
  if (t.size() > cap) throw CapExceeded("increasing labeling enumeration", t.size(), cap);
  // label[v] for preorder vertex v; parent < child on every edge is the same
  // as "less than every descendant" by transitivity.
  std::vector<std::uint32_t> label(t.size());
  std::iota(label.begin(), label.end(), 1U);
  std::uint64_t count = 0;
  do {
    bool increasing = true;
    for (std::size_t v = 0; v < t.size() && increasing; ++v) {
      const NodeIndex l = t.left_child(v);
      const NodeIndex r = t.right_child(v);
      if (l != BinaryTree::kNone && label[l] < label[v]) increasing = false;
      if (r != BinaryTree::kNone && label[r] < label[v]) increasing = false;
    }
    if (increasing) ++count;
  } while (std::next_permutation(label.begin(), label.end()));
  return BigInt(static_cast<unsigned long>(count));
}

BinaryTree bst_shape(const Permutation& p) {
  const auto values = p.values();
  const std::size_t n = values.size();
  // Node i holds key values[i].
  std::vector<NodeIndex> left(n, BinaryTree::kNone);
  std::vector<NodeIndex> right(n, BinaryTree::kNone);
  for (std::size_t i = 1; i < n; ++i) {
    NodeIndex at = 0;
    while (true) {
      NodeIndex& slot = values[i] < values[at] ? left[at] : right[at];
      if (slot == BinaryTree::kNone) {
        slot = static_cast<NodeIndex>(i);
        break;
      }
      at = slot;
    }
  }
  return BinaryTree::from_links(n == 0 ? BinaryTree::kNone : 0, left, right);
}

std::map<TreeCode, BigInt> shape_fiber_histogram(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded("shape fiber histogram", n, cap);
  std::map<TreeCode, std::uint64_t> counts;
  std::vector<std::uint32_t> values(n);
  std::iota(values.begin(), values.end(), 1U);
  do {
    ++counts[encode(bst_shape(Permutation(values)))];
  } while (std::next_permutation(values.begin(), values.end()));

  std::map<TreeCode, BigInt> histogram;
  for (const auto& [code, count] : counts) {
    histogram.emplace(code, BigInt(static_cast<unsigned long>(count)));
  }
  return histogram;
}

std::string format_histogram(const std::map<TreeCode, BigInt>& histogram) {
  std::string out;
  for (const auto& [code, count] : histogram) {
    out += code.str() + '\t' + count.get_str() + '\n';
  }
  return out;
}

bool verify_eq2(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded("verify_eq2", n, cap);
  BigInt sum = 0;
  for (const BinaryTree& t : enumerate(n)) {
    sum += t.empty() ? BigInt(1) : increasing_labelings_count(t);
  }
  return sum == factorial(n);
}

}  // namespace hooklen
