#include <gtest/gtest.h>

#include <set>

#include "tamewild/divposet.hpp"
#include "tamewild/families.hpp"

using namespace tamewild;

namespace {

std::size_t by_type(const PowerClassSet& S, const std::string& ct) {
  for (std::size_t c = 0; c < S.size(); ++c)
    if (S[c].cycle_type.compact() == ct) return c;
  throw std::runtime_error("no class " + ct);
}

// Independent oracle: every non-identity element lies in exactly one maximal cyclic subgroup.
bool u_group_by_cyclic_subgroups(const FiniteGroup& G) {
  std::vector<std::set<std::uint32_t>> cyclics;
  std::set<std::set<std::uint32_t>> seen;
  for (std::size_t g = 0; g < G.order(); ++g) {
    std::set<std::uint32_t> c;
    auto x = G.element_at(g);
    auto cur = x;
    c.insert(0);
    while (!cur.is_identity()) {
      c.insert(*G.index_of(cur));
      cur = cur * x;
    }
    if (seen.insert(c).second) cyclics.push_back(c);
  }
  std::vector<std::set<std::uint32_t>> maximal;
  for (const auto& a : cyclics) {
    bool top = true;
    for (const auto& b : cyclics)
      if (b.size() > a.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) top = false;
    if (top) maximal.push_back(a);
  }
  for (std::uint32_t g = 1; g < G.order(); ++g) {
    int count = 0;
    for (const auto& m : maximal) count += m.count(g);
    if (count != 1) return false;
  }
  return true;
}

}  // namespace

TEST(DivPoset, PGL2of9) {
  auto G = families::pgl2(9);
  ASSERT_EQ(G->order(), 720u);
  auto S = power_classes(G);
  ASSERT_EQ(S->size(), 8u);
  auto P = build_poset(S);
  // (order, [σ]) → u for the seven non-identity classes.
  std::map<std::pair<long, std::size_t>, long> expect = {{{8, 45}, 1},  {{4, 45}, 0},  {{2, 45}, 0}, {{3, 40}, 1},
                                                          {{10, 36}, 1}, {{2, 36}, 0}, {{5, 36}, 0}};
  for (std::size_t c = 1; c < S->size(); ++c) {
    auto key = std::pair{(*S)[c].order, (*S)[c].cyclic_count};
    ASSERT_TRUE(expect.count(key)) << (*S)[c].label;
    EXPECT_EQ(P.u[c], expect[key]) << (*S)[c].label;
  }
  EXPECT_EQ(P.u[0], -120);
  EXPECT_TRUE(is_U_group(P));
}

TEST(DivPoset, S6) {
  auto S = power_classes(families::symmetric(6));
  auto P = build_poset(S);
  std::map<std::string, long> expect = {{"321", 1},    {"411", 1}, {"42", 1},   {"6", 1},   {"21111", -3},
                                        {"3111", -2}, {"51", 1},  {"2211", -1}, {"33", -2}, {"222", -3}};
  for (auto [ct, u] : expect) EXPECT_EQ(P.u[by_type(*S, ct)], u) << ct;
  EXPECT_EQ(P.u[0], -30);
  EXPECT_FALSE(is_U_group(P));
  EXPECT_EQ(P.weight(by_type(*S, "21111"), by_type(*S, "321")), 4);
  EXPECT_EQ(P.weight(by_type(*S, "3111"), by_type(*S, "321")), 3);
  EXPECT_EQ(P.weight(by_type(*S, "33"), by_type(*S, "6")), 3);
  EXPECT_EQ(P.weight(by_type(*S, "222"), by_type(*S, "6")), 4);
  EXPECT_EQ(classify_class(P, by_type(*S, "51")), ClassKind::U);
  EXPECT_EQ(classify_class(P, by_type(*S, "21111")), ClassKind::N);
  std::set<std::string> ns;
  for (auto c : P.n_classes()) ns.insert((*S)[c].cycle_type.compact());
  EXPECT_EQ(ns, (std::set<std::string>{"21111", "3111", "2211", "33", "222"}));
}

TEST(DivPoset, WeightsArePathIndependent) {
  for (auto G : {families::symmetric(6), families::pgl2(9), families::cyclic(12), families::quaternion()}) {
    auto S = power_classes(G);
    auto P = build_poset(S);
    // Product of cover weights along σ → σ^p → σ^{pq} … equals [σ]/[τ] for every divisor chain.
    for (std::size_t s = 1; s < S->size(); ++s) {
      long m = (*S)[s].order;
      for (auto k : nt::divisors(m)) {
        Rational prod = 1;
        std::size_t cur = s;
        long rest = k;
        for (auto p : nt::prime_factors(k)) {
          while (rest % p == 0) {
            auto next = S->power_map(cur, p);
            prod *= P.weight(next, cur);
            cur = next;
            rest /= p;
          }
        }
        EXPECT_EQ(prod, P.weight(S->power_map(s, k), s));
      }
    }
    // Re-evaluate the defining recursion.
    for (std::size_t t = 0; t < S->size(); ++t) {
      Rational sum = 0;
      for (std::size_t s = 0; s < S->size(); ++s)
        if (S->divides(t, s)) sum += P.weight(t, s) * Rational(P.u[s]);
      EXPECT_EQ(sum, 1);
    }
  }
}

TEST(DivPoset, CyclicPrimeAndQ8) {
  auto S = power_classes(families::cyclic(7));
  auto P = build_poset(S);
  ASSERT_EQ(S->size(), 2u);
  EXPECT_EQ(P.u[1], 1);
  auto Q = power_classes(families::quaternion());
  auto PQ = build_poset(Q);
  for (std::size_t c = 1; c < Q->size(); ++c)
    EXPECT_EQ(classify_class(PQ, c), (*Q)[c].order == 2 ? ClassKind::N : ClassKind::U);
}

TEST(DivPoset, MaximalNClassesHaveNegativeU) {
  std::vector<GroupPtr> corpus = {families::symmetric(4), families::symmetric(5), families::symmetric(6),
                                  families::quaternion(), families::fpq_times_cr(3, 2, 5), families::cp_semi_cq2(5, 2),
                                  families::cp2_times_cq(3, 2), families::fpq_times_cp(7, 3), families::cp2cyc_times_cp(3),
                                  families::extraspecial(3, false), families::abelian_p_group(2, {2, 1})};
  for (const auto& G : corpus) {
    auto P = build_poset(power_classes(G));
    for (auto t : maximal_n_classes(P)) EXPECT_LT(P.u[t], 0) << G->name();
  }
}

TEST(UGroups, CensusOfSmallFamilies) {
  for (int n = 3; n <= 9; ++n) {
    EXPECT_TRUE(is_U_group(power_classes(families::cyclic(n)))) << n;
    EXPECT_TRUE(is_U_group(power_classes(families::dihedral(n)))) << n;
  }
  for (int p : {3, 5, 7}) EXPECT_TRUE(is_U_group(power_classes(families::frobenius(p, p - 1))));
  for (int p : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      EXPECT_TRUE(is_U_group(power_classes(families::elementary_abelian(p, n))));
      EXPECT_TRUE(is_U_group(power_classes(families::abelian_p_group(p, {n}))));
    }
    EXPECT_FALSE(is_U_group(power_classes(families::abelian_p_group(p, {2, 1}))));
  }
  EXPECT_TRUE(is_U_group(power_classes(families::pgl2(9))));
  EXPECT_FALSE(is_U_group(power_classes(families::symmetric(6))));
}

TEST(UGroups, AgreesWithMaximalCyclicOracle) {
  std::vector<GroupPtr> corpus = {families::symmetric(4), families::symmetric(5), families::alternating(5), families::pgl2(5),
                                  families::psl2(7), families::quaternion(), families::dihedral(6), families::frobenius(7, 3),
                                  families::fpq_times_cr(3, 2, 5), families::cp2cyc_times_cp(2), families::extraspecial(3, true),
                                  families::extraspecial(3, false), families::abelian_p_group(3, {2, 1})};
  for (const auto& G : corpus) EXPECT_EQ(is_U_group(power_classes(G)), u_group_by_cyclic_subgroups(*G)) << G->name();
}

TEST(Expansion, CyclicAndProductAction) {
  auto G = families::symmetric(5);
  auto S = power_classes(G);
  for (std::size_t t = 1; t < S->size(); ++t) {
    auto coeff = expand_formal_artin(S, power_classes(cyclic_subgroup(*S, t)));
    for (std::size_t c = 1; c < S->size(); ++c) EXPECT_EQ(coeff[c], c == t ? 1 : 0);
  }
  // F_{3,2} × C_3 in its product action on 9 points, inside S_9.
  auto I = families::fpq_times_cp_product(3, 2);
  auto S9 = families::symmetric(9, 400000);
  auto SG = power_classes(S9);
  auto SI = power_classes(I);
  auto m = class_map(*SI, *SG);
  std::set<std::uint32_t> images;
  for (std::size_t c = 1; c < SI->size(); ++c)
    if ((*SI)[c].order == 3) images.insert(m[c]);
  ASSERT_EQ(images.size(), 1u);
  auto target = *images.begin();
  EXPECT_EQ((*SG)[target].cycle_type.compact(), "333");
  // p lines at 1/pq each plus p_inf at (1-p)/pq: total 1/pq, still positive.
  auto coeff = expand_formal_artin(SG, SI);
  EXPECT_EQ(coeff[target], Rational(1, 6));
  EXPECT_EQ(combine_tame(SG, coeff), formal_artin(SG, *I));
}

TEST(Render, DotAndText) {
  auto S = power_classes(families::symmetric(6));
  auto P = build_poset(S);
  auto dot = render_dot(P, {false, "S6"});
  auto c32 = by_type(*S, "321"), c2 = by_type(*S, "21111");
  EXPECT_NE(dot.find("c" + std::to_string(c32) + " -> c" + std::to_string(c2) + " [label=\"4\"]"), std::string::npos);
  EXPECT_EQ(dot, render_dot(P, {false, "S6"}));
  EXPECT_EQ(dot.find("c0 "), std::string::npos);

  auto C4 = build_poset(power_classes(families::cyclic(4)));
  auto d4 = render_dot(C4, {false, "C4"});
  EXPECT_NE(d4.find("c2 -> c1;"), std::string::npos);
  EXPECT_EQ(d4.find("label=\"2\""), std::string::npos);

  auto PG = build_poset(power_classes(families::pgl2(9)));
  const auto& SP = *PG.classes;
  std::size_t c3 = 0;
  for (std::size_t c = 1; c < SP.size(); ++c)
    if (SP[c].order == 3) c3 = c;
  auto full = render_dot(PG, {true, "PGL2(9)"});
  EXPECT_NE(full.find("c" + std::to_string(c3) + " -> c0 [label=\"40\"]"), std::string::npos);
  auto text = render_text(P);
  EXPECT_NE(text.find("321"), std::string::npos);
}
