#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

namespace skein {
namespace {

using namespace test;

std::vector<int> hooks_of(const Partition& p) {
  std::vector<int> out;
  for (const Cell& c : cells(p)) out.push_back(c.hook);
  return out;
}
std::vector<int> contents_of(const Partition& p) {
  std::vector<int> out;
  for (const Cell& c : cells(p)) out.push_back(c.content);
  return out;
}

// Independent generator: all nonincreasing sequences by brute force over
// compositions, deduplicated.
std::set<std::vector<int>> brute_force_partitions(int n) {
  std::set<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << (n > 0 ? n - 1 : 0)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    if (n > 0) parts.push_back(run);
    std::sort(parts.rbegin(), parts.rend());
    out.insert(parts);
  }
  return out;
}

TEST(PartitionType, RejectsInvalidParts) {
  EXPECT_THROW(Partition({1, 2}), InvalidPartition);
  EXPECT_THROW(Partition({2, 0}), InvalidPartition);
  EXPECT_THROW(Partition({-1}), InvalidPartition);
}

TEST(PartitionType, ParseAndRender) {
  EXPECT_EQ(Partition::parse("6,4,2"), (Partition{6, 4, 2}));
  EXPECT_EQ(Partition::parse(""), Partition());
  EXPECT_EQ(Partition::parse("0"), Partition());
  EXPECT_EQ(Partition().to_string(), "");
  EXPECT_EQ((Partition{3, 1, 1}).to_string(), "3,1,1");
  for (const char* bad : {"1,,2", "a", "1,2", "3,", ",3", "2 1", "0,1"}) {
    EXPECT_THROW(Partition::parse(bad), InvalidPartition) << bad;
  }
}

TEST(PartitionType, SizeAndLength) {
  const Partition p{6, 4, 2};
  EXPECT_EQ(p.size(), 12);
  EXPECT_EQ(p.length(), 3);
  EXPECT_EQ(Partition().size(), 0);
}

TEST(EnumeratePartitions, Zero) { EXPECT_EQ(enumerate_partitions(0), std::vector<Partition>{Partition()}); }

TEST(EnumeratePartitions, FourInReverseLexOrder) {
  const std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(enumerate_partitions(4), expected);
}

TEST(EnumeratePartitions, EightMatchesIndependentGenerator) {
  const auto list = enumerate_partitions(8);
  EXPECT_EQ(list.size(), 22u);
  std::set<std::vector<int>> seen;
  for (const Partition& p : list) seen.insert(p.parts());
  EXPECT_EQ(seen.size(), list.size());
  EXPECT_EQ(seen, brute_force_partitions(8));
}

TEST(EnumeratePartitions, CumulativeCounts) {
  EXPECT_EQ(partitions_up_to(8).size(), 67u);
  EXPECT_EQ(partitions_up_to(12).size() - 1, 271u);
  const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176};
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(enumerate_partitions(n).size(), p[n]) << n;
}

TEST(EnumeratePartitions, GradedOrderIsStrict) {
  const auto all = partitions_up_to(9);
  for (std::size_t i = 1; i < all.size(); ++i) ASSERT_LT(all[i - 1], all[i]);
}

TEST(Cells, SixFourTwoContents) {
  const std::vector<int> expected{0, 1, 2, 3, 4, 5, -1, 0, 1, 2, -2, -1};
  EXPECT_EQ(contents_of(Partition{6, 4, 2}), expected);
}

TEST(Cells, SixFourTwoHooks) {
  const std::vector<int> expected{8, 7, 5, 4, 2, 1, 5, 4, 2, 1, 2, 1};
  EXPECT_EQ(hooks_of(Partition{6, 4, 2}), expected);
}

TEST(Cells, Empty) { EXPECT_TRUE(cells(Partition()).empty()); }

TEST(Cells, ArmLegCoarmColeg) {
  const Cell c = cell(Partition{6, 4, 2}, 1, 2);
  EXPECT_EQ(c.arm, 4);
  EXPECT_EQ(c.leg, 2);
  EXPECT_EQ(c.coarm, 1);
  EXPECT_EQ(c.coleg, 0);
  EXPECT_EQ(c.content, 1);
  EXPECT_EQ(c.hook, 7);
  EXPECT_THROW(cell(Partition{6, 4, 2}, 2, 5), CellNotInPartition);
  EXPECT_THROW(cell(Partition{6, 4, 2}, 0, 1), CellNotInPartition);
}

TEST(ContentPolynomial, SixFourTwo) {
  const L expected = q(-2) + 2 * q(-1) + 2 + 2 * q() + 2 * q(2) + q(3) + q(4) + q(5);
  EXPECT_EQ(content_polynomial(Partition{6, 4, 2}), expected);
  EXPECT_EQ(expected.to_string(), "q^{-2} + 2q^{-1} + 2 + 2q + 2q^2 + q^3 + q^4 + q^5");
}

TEST(ContentPolynomial, EmptyAndSmall) {
  EXPECT_TRUE(content_polynomial(Partition()).is_zero());
  EXPECT_EQ(content_polynomial(Partition{2, 1}), q(-1) + 1 + q());
}

TEST(ContentPolynomial, AtOneIsSize) {
  EvaluationPoint one;
  for (const Partition& p : partitions_up_to(10)) {
    ASSERT_EQ(content_polynomial(p).evaluate(one), p.size());
  }
}

TEST(QHooklength, Examples) {
  EXPECT_EQ(q_hooklength(Partition{2}, 1, 1), 1 + q());
  EXPECT_EQ(q_hooklength(Partition{2}, 1, 2), 1);
  EXPECT_EQ(q_hooklength(Partition{1, 1}, 1, 1), 1 + q(-1));
  EXPECT_THROW(q_hooklength(Partition{2}, 2, 1), CellNotInPartition);
}

TEST(QHooklength, AtOneIsHookAndPowerTimesQInteger) {
  EvaluationPoint one;
  for (const Partition& p : partitions_up_to(9)) {
    for (const Cell& c : cells(p)) {
      const L h = q_hooklength(p, c);
      ASSERT_EQ(h.evaluate(one), c.hook);
      ASSERT_EQ(h, q(-c.leg) * q_integer(c.hook));
    }
  }
}

TEST(HookPolynomial, Examples) {
  EXPECT_EQ(hook_polynomial(Partition()), 1);
  EXPECT_EQ(hook_polynomial(Partition{2}), 1 + q());
  EXPECT_EQ(hook_polynomial(Partition{1, 1}), q(-1) + 1);
  EXPECT_EQ(hook_polynomial_power_form(Partition{2}), 1 + q());
  EXPECT_EQ(hook_polynomial_power_form(Partition{1, 1}), q(-1) + 1);
}

TEST(HookPolynomial, TwoFormulasAgreeThroughTwelve) {
  for (const Partition& p : partitions_up_to(12)) {
    ASSERT_EQ(hook_polynomial(p), hook_polynomial_power_form(p)) << p.to_string();
  }
}

TEST(HookPolynomial, BalancedFormIsPalindromic) {
  const Substitution invert{{Variable::s, SignedMonomial{1, {-1, 0, 0, 0}}}};
  for (const Partition& p : partitions_up_to(12)) {
    int csum = 0;
    for (const Cell& c : cells(p)) csum += c.content;
    const L balanced = hook_polynomial(p).shifted({-csum, 0, 0, 0});
    ASSERT_EQ(substitute(balanced, invert), balanced) << p.to_string();
  }
}

std::vector<std::pair<Partition, int>> moves(const std::vector<BoxMove>& ms) {
  std::vector<std::pair<Partition, int>> out;
  for (const BoxMove& m : ms) out.emplace_back(m.partition, m.box.content);
  return out;
}

TEST(Addable, Examples) {
  using V = std::vector<std::pair<Partition, int>>;
  EXPECT_EQ(moves(addable(Partition())), (V{{Partition{1}, 0}}));
  EXPECT_EQ(moves(addable(Partition{2, 1})),
            (V{{Partition{3, 1}, 2}, {Partition{2, 2}, 0}, {Partition{2, 1, 1}, -2}}));
  EXPECT_EQ(moves(addable(Partition{1})), (V{{Partition{2}, 1}, {Partition{1, 1}, -1}}));
  const auto m = addable(Partition{2, 1});
  EXPECT_EQ(m[0].box.row, 1);
  EXPECT_EQ(m[0].box.col, 3);
}

TEST(Removable, Examples) {
  using V = std::vector<std::pair<Partition, int>>;
  EXPECT_EQ(moves(removable(Partition{1})), (V{{Partition(), 0}}));
  EXPECT_EQ(moves(removable(Partition{2, 1})), (V{{Partition{1, 1}, 1}, {Partition{2}, -1}}));
  EXPECT_EQ(moves(removable(Partition{2, 2})), (V{{Partition{2, 1}, 0}}));
  EXPECT_THROW(removable(Partition()), EmptyPartition);
}

TEST(AddableRemovable, MutuallyInverse) {
  for (const Partition& lambda : partitions_up_to(10)) {
    for (const BoxMove& up : addable(lambda)) {
      const auto back = removable(up.partition);
      ASSERT_TRUE(std::any_of(back.begin(), back.end(), [&](const BoxMove& d) {
        return d.partition == lambda && d.box == up.box;
      }));
    }
    if (lambda.empty()) continue;
    for (const BoxMove& down : removable(lambda)) {
      const auto fwd = addable(down.partition);
      ASSERT_TRUE(std::any_of(fwd.begin(), fwd.end(), [&](const BoxMove& u) {
        return u.partition == lambda && u.box == down.box;
      }));
    }
  }
}

TEST(AddableRemovable, ContentPolynomialJump) {
  for (const Partition& mu : partitions_up_to(12)) {
    if (mu.empty()) continue;
    for (const BoxMove& m : removable(mu)) {
      ASSERT_EQ(content_polynomial(mu) - content_polynomial(m.partition), q(m.box.content));
    }
  }
}

TEST(ParitySum, Examples) {
  EXPECT_EQ(parity_sum(Partition()), 0);
  EXPECT_EQ(parity_sum(Partition{1}), 2);
  EXPECT_EQ(parity_sum(Partition{6, 4, 2}) % 2, 0);
}

TEST(ParitySum, EvenThroughFifteen) {
  for (const Partition& p : partitions_up_to(15)) ASSERT_EQ(parity_sum(p) % 2, 0) << p.to_string();
}

TEST(VerifyBranching, Examples) {
  EXPECT_TRUE(verify_branching(Partition{1}));
  EXPECT_TRUE(verify_branching(Partition{2}));
  EXPECT_TRUE(verify_branching(Partition{2, 1}));
  EXPECT_EQ(RF(1, 1 + q()) + RF(1, 1 + q(-1)), 1);
  EXPECT_THROW(verify_branching(Partition()), EmptyPartition);
}

TEST(VerifyBranching, AbsoluteContentReadingFails) {
  // The literal h_□(q) = Σ_{hook} q^{c(■)} breaks the rule already at (2).
  const Partition mu{2};
  L literal = 1;
  for (const Cell& c : cells(mu)) {
    L h;
    for (int j = c.col; j <= mu.part(c.row); ++j) h += q((j - 1) - (c.row - 1));
    for (int i = c.row + 1; mu.part(i) >= c.col; ++i) h += q((c.col - 1) - (i - 1));
    literal *= h;
  }
  EXPECT_FALSE(RF(content_polynomial(mu), literal) == RF(1));
}

}  // namespace
}  // namespace skein
