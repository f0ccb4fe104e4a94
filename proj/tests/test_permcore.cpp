#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "tamewild/classes.hpp"
#include "tamewild/group.hpp"
#include "tamewild/permutation.hpp"

using namespace tamewild;

namespace {

GroupPtr symmetric(int n) {
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = i;
  if (n < 2) return FiniteGroup::closure(n, {});
  return FiniteGroup::closure(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cyc})});
}

GroupPtr cyclic(int n) {
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = i;
  return FiniteGroup::closure(n, {Permutation::from_cycles(n, {cyc})});
}

std::vector<std::string> cycle_types(const PowerClassSet& S) {
  std::vector<std::string> out;
  for (std::size_t c = 1; c < S.size(); ++c) out.push_back(S[c].cycle_type.compact());
  return out;
}

}  // namespace

TEST(Permutation, CompositionAndInverse) {
  auto g = Permutation::from_cycles(5, {{0, 1, 2}});
  auto h = Permutation::from_cycles(5, {{1, 3}});
  EXPECT_EQ((g * h)(1), g(h(1)));
  EXPECT_TRUE((g * g.inverse()).is_identity());
  EXPECT_EQ(((g * h) * g), (g * (h * g)));
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.pow(3), Permutation::identity(5));
  EXPECT_EQ(g.pow(-1), g.inverse());
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), Error);
}

TEST(Permutation, CycleTypeAndFixedPoints) {
  auto e = Permutation::identity(8);
  EXPECT_EQ(cycle_type(e).compact(), "11111111");
  EXPECT_EQ(fixed_points(e), 8);
  auto g = Permutation::from_cycles(5, {{0, 1}, {2, 3}});
  EXPECT_EQ(cycle_type(g).compact(), "221");
  EXPECT_EQ(fixed_points(g), 1);
  auto big = Permutation::from_cycles(12, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {10, 11}});
  EXPECT_EQ(cycle_type(big).compact(), "(10)2");
  EXPECT_EQ(cycle_type(big).exponential(), "10 2");
  EXPECT_EQ(Partition::parse("(10)2"), cycle_type(big));
  EXPECT_EQ(Partition::parse("2211").exponential(), "2^2 1^2");
}

TEST(Closure, SymmetricAndTrivial) {
  auto s5 = symmetric(5);
  EXPECT_EQ(s5->order(), 120u);
  EXPECT_TRUE(s5->element_at(0).is_identity());
  auto triv = FiniteGroup::closure(4, {});
  EXPECT_EQ(triv->order(), 1u);
  EXPECT_THROW(FiniteGroup::closure(5, {Permutation::from_cycles(4, {{0, 1}})}), Error);
  EXPECT_THROW(FiniteGroup::closure(6, symmetric(6)->generators(), 100), Error);
}

TEST(Closure, DeterministicUnderGeneratorOrder) {
  std::vector<Permutation> gens = {Permutation::from_cycles(6, {{0, 1}}), Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}}),
                                   Permutation::from_cycles(6, {{2, 4}})};
  auto a = FiniteGroup::closure(6, gens);
  std::reverse(gens.begin(), gens.end());
  auto b = FiniteGroup::closure(6, gens);
  ASSERT_EQ(a->order(), b->order());
  for (std::size_t i = 0; i < a->order(); ++i) EXPECT_TRUE(std::ranges::equal(a->element(i), b->element(i)));
  for (std::size_t i = 1; i < a->order(); ++i)
    EXPECT_TRUE(std::ranges::lexicographical_compare(a->element(i - 1), a->element(i)));
}

TEST(PowerClasses, S5) {
  auto S = power_classes(symmetric(5));
  ASSERT_EQ(S->size(), 7u);
  EXPECT_EQ(S->classes()[0].order, 1);
  auto types = cycle_types(*S);
  std::sort(types.begin(), types.end());
  std::vector<std::string> expected = {"2111", "221", "311", "41", "5", "32"};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(types, expected);
}

TEST(PowerClasses, CyclicMergesGenerators) {
  auto S = power_classes(cyclic(6));
  ASSERT_EQ(S->size(), 4u);
  std::vector<long> orders;
  for (const auto& c : S->classes()) orders.push_back(c.order);
  EXPECT_EQ(orders, (std::vector<long>{1, 2, 3, 6}));
  EXPECT_EQ((*S)[3].size, 2u);
  EXPECT_EQ((*S)[3].cyclic_count, 1u);
}

TEST(PowerClasses, LabelsOrderedByOrderThenDiscovery) {
  auto S = power_classes(symmetric(6));
  EXPECT_EQ((*S)[0].label, "1A");
  for (std::size_t c = 1; c < S->size(); ++c) EXPECT_LE((*S)[c - 1].order, (*S)[c].order);
  EXPECT_EQ((*S)[1].label, "2A");
  EXPECT_EQ((*S)[2].label, "2B");
}

TEST(PowerClasses, DividesInS6AndS5) {
  auto S6 = power_classes(symmetric(6));
  auto find = [](const PowerClassSet& S, const std::string& ct) {
    for (std::size_t c = 0; c < S.size(); ++c)
      if (S[c].cycle_type.compact() == ct) return c;
    return std::size_t(-1);
  };
  EXPECT_TRUE(S6->divides(find(*S6, "33"), find(*S6, "6")));
  EXPECT_TRUE(S6->divides(find(*S6, "6"), find(*S6, "6")));
  auto S5 = power_classes(symmetric(5));
  EXPECT_FALSE(S5->divides(find(*S5, "221"), find(*S5, "5")));
}

TEST(PowerClasses, InvariantsOnSmallGroups) {
  for (int n = 1; n <= 6; ++n) {
    for (auto G : {symmetric(n), cyclic(n)}) {
      auto S = power_classes(G);
      std::size_t total = 0;
      for (std::size_t c = 0; c < S->size(); ++c) {
        const auto& pc = (*S)[c];
        total += pc.size;
        EXPECT_EQ(pc.cyclic_count * static_cast<std::size_t>(nt::euler_phi(pc.order)), pc.size);
        EXPECT_EQ(S->power_map(c, 1), c);
        EXPECT_EQ(S->power_map(c, pc.order), 0u);
        for (long a = 1; a <= 4; ++a)
          for (long b = 1; b <= 4; ++b) EXPECT_EQ(S->power_map(c, a * b), S->power_map(S->power_map(c, a), b));
        for (std::size_t t = 0; t < S->size(); ++t)
          if (S->divides(t, c)) {
            EXPECT_EQ(pc.order % (*S)[t].order, 0);
          }
      }
      EXPECT_EQ(total, G->order());
    }
  }
}

TEST(ClassMap, CommutesWithPowerMaps) {
  auto G = symmetric(5);
  auto SG = power_classes(G);
  auto H = G->subgroup({Permutation::from_cycles(5, {{0, 1, 2, 3}}), Permutation::from_cycles(5, {{0, 2}})});
  auto SH = power_classes(H);
  auto m = class_map(*SH, *SG);
  for (std::size_t c = 0; c < SH->size(); ++c)
    for (long k = 1; k <= 4; ++k) EXPECT_EQ(m[SH->power_map(c, k)], SG->power_map(m[c], k));
  auto self = class_map(*SG, *SG);
  for (std::size_t c = 0; c < SG->size(); ++c) EXPECT_EQ(self[c], c);
  EXPECT_THROW(class_map(*power_classes(symmetric(6)), *SG), Error);
}
