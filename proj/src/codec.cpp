#include "hooklen/codec.hpp"

#include <stdexcept>
#include <vector>

namespace hooklen {

TreeCode TreeCode::parse(std::string_view text) {
  if (text.size() % 2 != 0) {
    throw std::invalid_argument("tree code has odd length " + std::to_string(text.size()));
  }
  long balance = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '1') {
      ++balance;
    } else if (c == '0') {
      if (--balance < 0) {
        throw std::invalid_argument("tree code violates the ballot property at position " +
                                    std::to_string(i));
      }
    } else {
      throw std::invalid_argument("tree code contains '" + std::string(1, c) + "'");
    }
  }
  if (balance != 0) throw std::invalid_argument("tree code has unequal counts of 1s and 0s");
  return TreeCode(std::string(text));
}

TreeCode encode(const BinaryTree& t) {
  std::string bits;
  bits.reserve(2 * t.size() + 1);
  // Stack of pending child slots; kNone stands for an absent child.
  std::vector<NodeIndex> stack{t.empty() ? BinaryTree::kNone : 0};
  while (!stack.empty()) {
    const NodeIndex v = stack.back();
    stack.pop_back();
    if (v == BinaryTree::kNone) {
      bits.push_back('0');
      continue;
    }
    bits.push_back('1');
    stack.push_back(t.right_child(v));
    stack.push_back(t.left_child(v));
  }
  bits.pop_back();
  return TreeCode(std::move(bits));
}

BinaryTree decode(const TreeCode& code) {
  const std::string& bits = code.str();
  const std::size_t n = code.n();
  std::vector<NodeIndex> left(n, BinaryTree::kNone);
  std::vector<NodeIndex> right(n, BinaryTree::kNone);

  struct Slot {
    NodeIndex parent;
    bool is_right;
  };
  std::vector<Slot> slots{{BinaryTree::kNone, false}};
  NodeIndex next = 0;
  // The forced trailing '0' closes the last open slot; a valid code leaves
  // exactly that one slot open.
  for (const char c : bits) {
    const Slot s = slots.back();
    slots.pop_back();
    if (c == '0') continue;
    const NodeIndex v = next++;
    if (s.parent != BinaryTree::kNone) (s.is_right ? right : left)[s.parent] = v;
    slots.push_back({v, true});
    slots.push_back({v, false});
  }
  return BinaryTree::from_links(n == 0 ? BinaryTree::kNone : 0, left, right);
}

}  // namespace hooklen
