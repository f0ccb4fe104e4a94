#include <gtest/gtest.h>

#include <functional>

#include "tamewild/actions.hpp"
#include "tamewild/classfun.hpp"
#include "tamewild/families.hpp"

using namespace tamewild;

namespace {

std::size_t by_type(const PowerClassSet& S, const std::string& ct) {
  for (std::size_t c = 0; c < S.size(); ++c)
    if (S[c].cycle_type.compact() == ct) return c;
  throw std::runtime_error("no class " + ct);
}

GroupPtr f20_in_s5(const FiniteGroup& S5) {
  return S5.subgroup({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{1, 2, 4, 3}})});
}

// Number of orbits of H on the action given by images of G's generators restricted to H.
int orbits_on_images(const FiniteGroup& G, const std::vector<Permutation>& images, const FiniteGroup& H) {
  // Evaluate the action of each H element by writing it as a word: brute force over G's closure.
  std::size_t n = G.degree(), m = images[0].degree();
  std::vector<Permutation> diag;
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::vector<Point> im(n + m);
    for (std::size_t x = 0; x < n; ++x) im[x] = G.generators()[i](x);
    for (std::size_t x = 0; x < m; ++x) im[n + x] = static_cast<Point>(n + images[i](x));
    diag.emplace_back(std::move(im));
  }
  auto D = FiniteGroup::closure(n + m, diag);
  std::vector<int> parent(m);
  for (std::size_t x = 0; x < m; ++x) parent[x] = static_cast<int>(x);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t i = 0; i < D->order(); ++i) {
    auto e = D->element(i);
    if (!H.index_of(e.first(n))) continue;
    for (std::size_t x = 0; x < m; ++x) parent[find(static_cast<int>(x))] = find(e[n + x] - static_cast<int>(n));
  }
  int orbits = 0;
  for (std::size_t x = 0; x < m; ++x) orbits += find(static_cast<int>(x)) == static_cast<int>(x);
  return orbits;
}

}  // namespace

TEST(InnerProduct, TrivialAndArtinOrthogonality) {
  auto S = power_classes(families::symmetric(5));
  auto one = constant_function(S, 1);
  EXPECT_EQ(inner_product(one, one), 1);
  for (std::size_t t = 0; t < S->size(); ++t) {
    EXPECT_EQ(inner_product(tame_char(S, t), one), 0);
    EXPECT_EQ(inner_product(prechar(S, t), one), 0);
  }
  auto phi5 = natural_char(S);
  EXPECT_EQ(inner_product(tame_char(S, by_type(*S, "2111")), phi5.chi), 1);
  auto other = power_classes(families::symmetric(5));
  EXPECT_THROW(inner_product(one, constant_function(other, 1)), Error);
}

TEST(PermChar, NaturalS5Values) {
  auto S = power_classes(families::symmetric(5));
  auto phi5 = natural_char(S);
  std::vector<std::pair<std::string, int>> expect = {{"11111", 5}, {"2111", 3}, {"221", 1}, {"311", 2},
                                                     {"41", 1},    {"5", 0},    {"32", 0}};
  for (auto [ct, v] : expect) EXPECT_EQ(phi5.chi[by_type(*S, ct)], v) << ct;
  EXPECT_EQ(phi5.degree(), 5);
}

TEST(PermChar, CosetFormula) {
  auto G = families::symmetric(5);
  auto S = power_classes(G);
  auto whole = perm_char_coset(S, *G);
  for (std::size_t c = 0; c < S->size(); ++c) EXPECT_EQ(whole.chi[c], 1);
  auto triv = FiniteGroup::closure(5, {});
  auto reg = perm_char_coset(S, *triv);
  EXPECT_EQ(reg.chi, regular_char(S).chi);
  auto S4 = G->subgroup({Permutation::from_cycles(5, {{0, 1}}), Permutation::from_cycles(5, {{0, 1, 2, 3}})});
  EXPECT_EQ(perm_char_coset(S, *S4).chi, natural_char(S).chi);
  EXPECT_THROW(perm_char_coset(S, *families::symmetric(6)), Error);
}

TEST(PermChar, CosetFormulaMatchesExplicitCosets) {
  for (auto G : {families::symmetric(4), families::symmetric(5), families::pgl2(5), families::alternating(5)}) {
    auto S = power_classes(G);
    for (std::size_t c = 1; c < S->size(); ++c) {
      auto H = cyclic_subgroup(*S, c);
      auto images = coset_action(*G, *H);
      EXPECT_EQ(perm_char_from_images(S, images).chi, perm_char_coset(S, *H).chi);
    }
  }
}

TEST(PermChar, ImagesMustDefineAnAction) {
  auto G = families::symmetric(4);
  auto S = power_classes(G);
  // A transposition mapped trivially while the 4-cycle maps to a transposition: not a homomorphism.
  std::vector<Permutation> bad = {Permutation::identity(2), Permutation::from_cycles(2, {{0, 1}})};
  EXPECT_THROW(perm_char_from_images(S, bad), Error);
  EXPECT_THROW(perm_char_from_action(S, {0, 1}), Error);
}

TEST(FormalArtin, BasicCases) {
  auto G = families::symmetric(5);
  auto S = power_classes(G);
  EXPECT_TRUE(formal_artin(S, *FiniteGroup::closure(5, {})).is_zero());
  for (std::size_t t = 1; t < S->size(); ++t) EXPECT_EQ(formal_artin(S, *cyclic_subgroup(*S, t)), tame_char(S, t));
  auto one = constant_function(S, 1);
  EXPECT_EQ(inner_product(formal_artin(S, *f20_in_s5(*G)), one), 0);
}

TEST(TameAndPre, IdentityPrimeOrderAndS5Conductors) {
  auto G = families::symmetric(5);
  auto S = power_classes(G);
  EXPECT_TRUE(tame_char(S, 0).is_zero());
  EXPECT_TRUE(prechar(S, 0).is_zero());
  for (std::size_t t = 1; t < S->size(); ++t) {
    long m = (*S)[t].order;
    if (!nt::is_prime(m)) continue;
    EXPECT_EQ(tame_char(S, t), Rational(m - 1, m) * prechar(S, t));
  }
  auto phi5 = natural_char(S);
  auto t32 = by_type(*S, "32");
  EXPECT_EQ(conductor(tame_char(S, t32), phi5), 3);
  EXPECT_EQ(conductor(prechar(S, t32), phi5), 5);
  auto phi6 = perm_char_coset(S, *f20_in_s5(*G), "phi6");
  EXPECT_EQ(conductor(tame_char(S, by_type(*S, "41")), phi6), 3);
  PermChar trivial{"1", "coset", constant_function(S, 1), {}};
  EXPECT_EQ(conductor(tame_char(S, t32), trivial), 0);
}

TEST(Convert, RoundTripsAndBasis) {
  for (auto G : {families::symmetric(5), families::symmetric(6), families::pgl2(9), families::cyclic(12)}) {
    auto S = power_classes(G);
    for (std::size_t t = 1; t < S->size(); ++t) {
      EXPECT_EQ(convert(S, t, ConvertDirection::TameToPre), tame_char(S, t));
      EXPECT_EQ(convert(S, t, ConvertDirection::PreToTame), prechar(S, t));
    }
  }
  // The tame characters of S5 span Q(G♯)⁰: rank |G♯| − 1.
  auto S = power_classes(families::symmetric(5));
  std::vector<RationalVector> rows;
  for (std::size_t t = 1; t < S->size(); ++t) rows.push_back(tame_char(S, t).values());
  std::size_t rank = 0, cols = S->size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  EXPECT_EQ(rank, S->size() - 1);
}

TEST(Conductor, OrbitCountingProperty) {
  for (auto G : {families::symmetric(4), families::symmetric(5), families::pgl2(5), families::dihedral(6)}) {
    auto S = power_classes(G);
    auto phi = natural_char(S);
    for (std::size_t t = 1; t < S->size(); ++t) {
      auto g = G->element((*S)[t].representative);
      EXPECT_EQ(conductor(tame_char(S, t), phi), phi.degree() - cycle_type(g).count());
      EXPECT_EQ(conductor(prechar(S, t), phi), phi.degree() - cycle_type(g).ones());
      EXPECT_EQ(cycle_type_from_char(phi.chi, t), cycle_type(g));
    }
    // Formal Artin characters of cyclic and non-cyclic subgroups on a coset action.
    auto H = cyclic_subgroup(*S, S->size() - 1);
    auto images = coset_action(*G, *H);
    auto psi = perm_char_from_images(S, images);
    for (std::size_t t = 1; t < S->size(); ++t) {
      auto K = cyclic_subgroup(*S, t);
      EXPECT_EQ(conductor(formal_artin(S, *K), psi), psi.degree() - orbits_on_images(*G, images, *K));
    }
    EXPECT_EQ(conductor(formal_artin(S, *G), psi), psi.degree() - orbits_on_images(*G, images, *G));
  }
}

TEST(Conductor, MeanConductor) {
  auto S = power_classes(families::symmetric(5));
  auto phi5 = natural_char(S);
  EXPECT_EQ(mean_conductor(tame_char(S, by_type(*S, "5")), phi5), Rational(4, 5));
}

TEST(Induction, FrobeniusReciprocity) {
  auto G = families::symmetric(5);
  auto SG = power_classes(G);
  auto H = f20_in_s5(*G);
  auto SH = power_classes(H);
  auto chi = natural_char(SG);
  for (std::size_t t = 1; t < SH->size(); ++t) {
    auto f = tame_char(SH, t);
    EXPECT_EQ(inner_product(induce(f, SG), chi.chi), inner_product(f, restrict_to(chi.chi, SH)));
  }
  // Inducing a tame character of a subgroup gives the tame character of the image class.
  auto m = class_map(*SH, *SG);
  for (std::size_t t = 1; t < SH->size(); ++t) EXPECT_EQ(induce(tame_char(SH, t), SG), tame_char(SG, m[t]));
}
