#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "hooklen/binary_tree.hpp"
#include "hooklen/codec.hpp"
#include "hooklen/enumerate.hpp"
#include "oracles.hpp"

using namespace hooklen;

namespace {

std::vector<std::uint32_t> entries_of(const HookMultiset& h) {
  return {h.entries().begin(), h.entries().end()};
}

const BinaryTree kBalanced3 = BinaryTree::join(BinaryTree::leaf(), BinaryTree::leaf());

}  // namespace

TEST_CASE("size") {
  CHECK(size(BinaryTree()) == 0);
  CHECK(size(BinaryTree::leaf()) == 1);
  CHECK(size(BinaryTree::left_chain(3)) == 3);
  CHECK(BinaryTree().empty());
}

TEST_CASE("join and subtrees") {
  const BinaryTree t = BinaryTree::join(BinaryTree::left_chain(2), BinaryTree::leaf());
  CHECK(t.size() == 4);
  CHECK(t.left() == BinaryTree::left_chain(2));
  CHECK(t.right() == BinaryTree::leaf());
  CHECK(BinaryTree::leaf().left().empty());
  CHECK(BinaryTree::right_chain(3).right() == BinaryTree::right_chain(2));
}

TEST_CASE("from_left_sizes rejects inconsistent sequences") {
  const std::vector<std::uint32_t> too_big{3, 0, 0};
  CHECK_THROWS_AS(BinaryTree::from_left_sizes(too_big), std::invalid_argument);
  const std::vector<std::uint32_t> ok{1, 0, 0};
  CHECK(BinaryTree::from_left_sizes(ok) == kBalanced3);
}

TEST_CASE("from_links rejects shared nodes") {
  const std::vector<NodeIndex> left{1, BinaryTree::kNone};
  const std::vector<NodeIndex> right{1, BinaryTree::kNone};
  CHECK_THROWS_AS(BinaryTree::from_links(0, left, right), std::invalid_argument);
}

TEST_CASE("hook lengths") {
  SUBCASE("chains on three vertices") {
    CHECK(entries_of(hook_lengths(BinaryTree::left_chain(3))) == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(entries_of(hook_lengths(BinaryTree::right_chain(3))) == std::vector<std::uint32_t>{1, 2, 3});
  }
  SUBCASE("balanced tree on three vertices") {
    CHECK(entries_of(hook_lengths(kBalanced3)) == std::vector<std::uint32_t>{1, 1, 3});
  }
  SUBCASE("single vertex") {
    CHECK(entries_of(hook_lengths(BinaryTree::leaf())) == std::vector<std::uint32_t>{1});
  }
  SUBCASE("empty tree is rejected") {
    CHECK_THROWS_AS(hook_lengths(BinaryTree()), std::invalid_argument);
  }
  SUBCASE("a chain of 100000 vertices does not overflow the stack") {
    const HookMultiset h = hook_lengths(BinaryTree::left_chain(100000));
    CHECK(h.count(100000) == 1);
    CHECK(encode(BinaryTree::left_chain(100000)).n() == 100000);
  }
}

TEST_CASE("HookMultiset invariants are enforced") {
  CHECK_THROWS_AS(HookMultiset({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(HookMultiset({3, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(HookMultiset({0, 2}), std::invalid_argument);
  CHECK(HookMultiset({3, 1, 1}).count(1) == 2);
}

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  // Frozen from counting enumerate(10).
  CHECK(catalan(10) == 16796);
  const auto table = catalan_table(30);
  for (std::size_t n = 0; n <= 30; ++n) CHECK(table[n] == catalan(n));
}

TEST_CASE("enumerate") {
  SUBCASE("n = 0 yields the empty tree") {
    const auto all = enumerate_all(0);
    REQUIRE(all.size() == 1);
    CHECK(all[0].empty());
  }
  SUBCASE("n = 3 matches the worked example") {
    const auto all = enumerate_all(3);
    REQUIRE(all.size() == 5);
    int chains = 0;
    int balanced = 0;
    for (const BinaryTree& t : all) {
      const auto h = entries_of(hook_lengths(t));
      if (h == std::vector<std::uint32_t>{1, 2, 3}) ++chains;
      if (h == std::vector<std::uint32_t>{1, 1, 3}) ++balanced;
    }
    CHECK(chains == 4);
    CHECK(balanced == 1);
  }
  SUBCASE("n = 3 canonical codes") {
    std::vector<std::string> codes;
    for (const BinaryTree& t : enumerate(3)) codes.push_back(encode(t).str());
    CHECK(codes == std::vector<std::string>{"101010", "101100", "110010", "110100", "111000"});
  }
  SUBCASE("n = 8 gives 1430 distinct codes") {
    std::set<TreeCode> codes;
    std::size_t count = 0;
    for (const BinaryTree& t : enumerate(8)) {
      codes.insert(encode(t));
      ++count;
    }
    CHECK(count == 1430);
    CHECK(codes.size() == 1430);
  }
  SUBCASE("order matches the recursive reference generator") {
    for (std::size_t n = 0; n <= 9; ++n) {
      CAPTURE(n);
      CHECK(enumerate_all(n) == oracle::trees_recursive(n));
    }
  }
  SUBCASE("count equals catalan and codes are distinct for n <= 12") {
    for (std::size_t n = 0; n <= 12; ++n) {
      CAPTURE(n);
      std::set<std::string> codes;
      std::size_t count = 0;
      for (const BinaryTree& t : enumerate(n)) {
        codes.insert(encode(t).str());
        ++count;
      }
      CHECK(BigInt(static_cast<unsigned long>(count)) == catalan(n));
      CHECK(codes.size() == count);
    }
  }
}

TEST_CASE("hook multisets of enumerated trees") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const BinaryTree& t : enumerate(n)) {
      const HookMultiset h = hook_lengths(t);
      CHECK(h.count(static_cast<std::uint32_t>(n)) == 1);
      CHECK(h.count(1) == leaf_count(t));
      auto reference = oracle::hooks_recursive(t);
      std::uint64_t a = 0;
      std::uint64_t b = 0;
      for (auto e : h.entries()) a += e;
      for (auto e : reference) b += e;
      CHECK(a == b);
    }
  }
}

TEST_CASE("codec") {
  CHECK(encode(BinaryTree()).str().empty());
  CHECK(encode(BinaryTree::leaf()).str() == "10");
  // Preorder by hand: root '1', left child '1', its two absent children "00",
  // the root's absent right child is the dropped final '0'.
  CHECK(decode(TreeCode::parse("1100")) == BinaryTree::join(BinaryTree::leaf(), BinaryTree()));
  CHECK(decode(TreeCode::parse("1010")) == BinaryTree::right_chain(2));
  CHECK(decode(TreeCode::parse("")).empty());

  SUBCASE("invalid codes") {
    CHECK_THROWS_AS(TreeCode::parse("01"), std::invalid_argument);
    CHECK_THROWS_AS(TreeCode::parse("1"), std::invalid_argument);
    CHECK_THROWS_AS(TreeCode::parse("1110"), std::invalid_argument);
    CHECK_THROWS_AS(TreeCode::parse("1001"), std::invalid_argument);
    CHECK_THROWS_AS(TreeCode::parse("1x"), std::invalid_argument);
  }
  SUBCASE("roundtrip over B(6)") {
    for (const BinaryTree& t : enumerate(6)) {
      const TreeCode c = encode(t);
      CHECK(c.str().size() == 12);
      CHECK(decode(c) == t);
      CHECK(TreeCode::parse(c.str()) == c);
    }
  }
}

TEST_CASE("rank and unrank") {
  CHECK(unrank(0, 0).empty());
  CHECK(rank(BinaryTree()) == 0);
  CHECK(unrank(3, 4) == BinaryTree::left_chain(3));
  CHECK(unrank(3, 4) == enumerate_all(3).back());
  CHECK_THROWS_AS(unrank(3, 5), std::out_of_range);
  CHECK_THROWS_AS(unrank(0, 1), std::out_of_range);

  for (unsigned i = 0; i < 42; ++i) CHECK(rank(unrank(5, i)) == i);

  SUBCASE("unrank reproduces the enumeration order") {
    for (std::size_t n = 0; n <= 9; ++n) {
      unsigned long i = 0;
      for (const BinaryTree& t : enumerate(n)) {
        CHECK(unrank(n, i) == t);
        CHECK(rank(t) == i);
        ++i;
      }
    }
  }
  SUBCASE("random large indices") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(12345);
    std::mt19937_64 pick(7);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 30 + pick() % 40;
      const BigInt i = rng.get_z_range(catalan(n));
      CHECK(rank(unrank(n, i)) == i);
    }
  }
}
