#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "tamewild/actions.hpp"
#include "tamewild/conegeom.hpp"
#include "tamewild/families.hpp"

using namespace tamewild;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<int>> c) { return Permutation::from_cycles(n, c); }

struct S5Type {
  ClassSetPtr S;
  std::vector<PermChar> chars;
};

S5Type s5_type() {
  auto G = families::symmetric(5);
  auto S = power_classes(G);
  auto F20 = G->subgroup({cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 2, 4, 3}})});
  return {S, {natural_char(S, "phi5"), perm_char_from_images(S, coset_action(*G, *F20), "phi6")}};
}

struct S6Type {
  GroupPtr G;
  ClassSetPtr S;
  std::vector<PermChar> chars;
};

S6Type s6_type() {
  auto G = families::symmetric(6);
  auto S = power_classes(G);
  auto pgl = G->subgroup(families::pgl2(5)->generators());
  auto stab = G->subgroup({cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4}}), cyc(6, {{3, 4, 5}}),
                           cyc(6, {{0, 3}, {1, 4}, {2, 5}})});
  return {G, S,
          {natural_char(S, "phi6a"), perm_char_from_images(S, coset_action(*G, *pgl), "phi6b"),
           perm_char_from_images(S, coset_action(*G, *stab), "phi10")}};
}

std::string key(const ConductorMatrix& M, std::size_t j) {
  std::string k;
  for (std::size_t i = 0; i < M.rows(); ++i) k += (i ? "," : "") + M.partitions[i][j].compact();
  return k;
}

std::vector<std::vector<RationalVector>> corpus_tame_columns() {
  std::vector<std::vector<RationalVector>> out;
  auto a = s5_type();
  out.push_back(tame_matrix(a.S, a.chars).columns());
  auto b = s6_type();
  out.push_back(tame_matrix(b.S, b.chars).columns());
  auto G = families::pgl2(9);
  auto S = power_classes(G);
  out.push_back(tame_matrix(S, {natural_char(S), regular_char(S)}).columns());
  return out;
}

}  // namespace

TEST(Matrices, S5Golden) {
  auto [S, chars] = s5_type();
  auto P = partition_matrix(S, chars);
  auto T = tame_matrix(S, chars);
  auto B = broad_matrix(S, chars);
  // partition column -> (tame, broad, projective tame, projective broad)
  std::map<std::string, std::vector<Rational>> expect = {
      {"2111,222", {1, 3, 2, 6, make_rational(1, 3), make_rational(1, 3)}},
      {"221,2211", {2, 2, 4, 4, 1, 1}},
      {"311,33", {2, 4, 3, 6, make_rational(1, 2), make_rational(1, 2)}},
      {"41,411", {3, 3, 4, 4, 1, 1}},
      {"5,51", {4, 4, 5, 5, 1, 1}},
      {"32,6", {3, 5, 5, 6, make_rational(3, 5), make_rational(5, 6)}}};
  ASSERT_EQ(P.cols(), 6u);
  auto PT = projectivize(T), PB = projectivize(B);
  std::set<std::string> seen;
  for (std::size_t j = 0; j < P.cols(); ++j) {
    auto k = key(P, j);
    ASSERT_TRUE(expect.count(k)) << k;
    seen.insert(k);
    const auto& e = expect[k];
    EXPECT_EQ(T.entries[0][j], e[0]) << k;
    EXPECT_EQ(T.entries[1][j], e[1]) << k;
    EXPECT_EQ(B.entries[0][j], e[2]) << k;
    EXPECT_EQ(B.entries[1][j], e[3]) << k;
    EXPECT_EQ(PT.points[j][0], e[4]) << k;
    EXPECT_EQ(PB.points[j][0], e[5]) << k;
  }
  EXPECT_EQ(seen.size(), 6u);
  ASSERT_TRUE(PT.interval);
  EXPECT_EQ(PT.interval->lo, make_rational(1, 3));
  EXPECT_EQ(PT.interval->hi, 1);
  EXPECT_EQ(PB.interval->lo, make_rational(1, 3));
  EXPECT_EQ(PB.interval->hi, 1);
  EXPECT_EQ(broad_method(S, chars).verdict, MethodVerdict::Proved);
}

TEST(Matrices, BroadDominatesTame) {
  for (auto [G, S, chars] : {s6_type()}) {
    auto T = tame_matrix(S, chars);
    auto B = broad_matrix(S, chars);
    for (std::size_t i = 0; i < T.rows(); ++i)
      for (std::size_t j = 0; j < T.cols(); ++j) {
        EXPECT_GE(B.entries[i][j], T.entries[i][j]);
        bool trivial = T.partitions[i][j].ones() == T.partitions[i][j].total();
        EXPECT_EQ(B.entries[i][j] == T.entries[i][j], trivial);
        long m = (*S)[T.classes[j]].order;
        if (nt::is_prime(m)) {
          EXPECT_EQ(B.entries[i][j] * (m - 1), T.entries[i][j] * m);
        }
      }
  }
}

TEST(Matrices, EmptyForTrivialGroup) {
  auto S = power_classes(families::cyclic(1));
  auto M = tame_matrix(S, {natural_char(S)});
  EXPECT_EQ(M.cols(), 0u);
}

TEST(Matrices, ClassSetMismatch) {
  auto a = s5_type();
  auto other = power_classes(families::symmetric(5));
  EXPECT_THROW(tame_matrix(other, a.chars), Error);
}

TEST(ConeMembership, S5BroadColumnAndUnitColumns) {
  auto [S, chars] = s5_type();
  auto T = tame_matrix(S, chars);
  auto cols = T.columns();
  auto cert = cone_membership({5, 6}, cols);
  EXPECT_TRUE(cert.inside());
  EXPECT_TRUE(verify_certificate(cert, {5, 6}, cols));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto c = cone_membership(cols[j], cols);
    ASSERT_TRUE(c.inside());
    for (std::size_t k = 0; k < cols.size(); ++k) EXPECT_EQ(c.combination[k], k == j ? 1 : 0);
  }
  auto zero = cone_membership({0, 0}, cols);
  EXPECT_TRUE(zero.inside());
  auto out = cone_membership({1, 4}, cols);
  ASSERT_FALSE(out.inside());
  EXPECT_LT(dot(out.separator, {1, 4}), 0);
}

TEST(ConeMembership, M12StyleRatioOutsideInterval) {
  // Tame hull [3/4, 4/3]: (16, 22) has ratio 8/11 < 3/4.
  std::vector<RationalVector> cols = {{3, 4}, {4, 3}, {1, 1}};
  auto cert = cone_membership({16, 22}, cols);
  ASSERT_FALSE(cert.inside());
  for (const auto& c : cols) EXPECT_GE(dot(cert.separator, c), 0);
  EXPECT_LT(dot(cert.separator, {16, 22}), 0);
}

TEST(ConeMembership, IntervalTestAgreesForTwoRows) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> d(0, 30);
  auto a = s5_type();
  auto A5 = families::alternating(5);
  auto SA = power_classes(A5);
  auto C3 = A5->subgroup({cyc(5, {{0, 1, 2}})});
  auto C2 = A5->subgroup({cyc(5, {{0, 1}, {2, 3}})});
  std::vector<std::pair<ClassSetPtr, std::vector<PermChar>>> types = {
      {a.S, a.chars}, {SA, {perm_char_coset(SA, *C3), perm_char_coset(SA, *C2)}}};
  for (auto& [S, chars] : types) {
    auto T = tame_matrix(S, chars);
    auto H = projectivize(T);
    auto cols = T.columns();
    for (int trial = 0; trial < 300; ++trial) {
      RationalVector v = {d(rng), d(rng) + 1};
      EXPECT_EQ(cone_membership(v, cols).inside(), interval_contains(H, v)) << v[0] << "," << v[1];
    }
    for (const auto& c : broad_matrix(S, chars).columns())
      EXPECT_EQ(cone_membership(c, cols).inside(), interval_contains(H, c));
  }
}

TEST(ConeMembership, RandomCertificatesVerify) {
  std::mt19937 rng(7);
  auto corpus = corpus_tame_columns();
  std::uniform_int_distribution<int> d(-5, 40);
  int outside = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto& cols = corpus[trial % corpus.size()];
    RationalVector v(cols[0].size());
    for (auto& x : v) x = make_rational(d(rng), 1 + trial % 3);
    auto cert = cone_membership(v, cols);
    EXPECT_TRUE(verify_certificate(cert, v, cols));
    outside += !cert.inside();
  }
  EXPECT_GT(outside, 0);
}

TEST(Projectivize, MeanRootA5) {
  auto A5 = families::alternating(5);
  auto S = power_classes(A5);
  auto phi20 = perm_char_coset(S, *A5->subgroup({cyc(5, {{0, 1, 2}})}), "phi20");
  auto phi30 = perm_char_coset(S, *A5->subgroup({cyc(5, {{0, 1}, {2, 3}})}), "phi30");
  auto P = partition_matrix(S, {phi20, phi30});
  std::set<std::string> cols;
  for (std::size_t j = 0; j < P.cols(); ++j) cols.insert(P.partitions[0][j].exponential() + "|" + P.partitions[1][j].exponential());
  EXPECT_EQ(cols, (std::set<std::string>{"2^10|2^14 1^2", "3^6 1^2|3^10", "5^4|5^6"}));
  auto H = projectivize(tame_matrix(S, {phi20, phi30}));
  ASSERT_TRUE(H.mean_root);
  EXPECT_EQ(H.mean_root->lo, make_rational(9, 10));
  EXPECT_EQ(H.mean_root->hi, make_rational(15, 14));
}

TEST(Projectivize, NonPositiveNormalizer) {
  auto [S, chars] = s5_type();
  PermChar trivial{"1", "coset", constant_function(S, 1), {}};
  auto T = tame_matrix(S, {chars[0], trivial});
  EXPECT_THROW(projectivize(T), Error);
  EXPECT_NO_THROW(projectivize(T, 0));
}

TEST(Projectivize, PolygonContainsTamePoints) {
  auto [G, S, chars] = s6_type();
  auto H = projectivize(tame_matrix(S, chars));
  ASSERT_GE(H.polygon.size(), 3u);
  for (const auto& p : H.points) EXPECT_TRUE(polygon_contains(H.polygon, p));
  EXPECT_FALSE(polygon_contains(H.polygon, {0, 0}));
}

TEST(Methods, S6BroadInconclusiveInertialProved) {
  auto [G, S, chars] = s6_type();
  auto B = broad_matrix(S, chars);
  bool found = false;
  for (std::size_t j = 0; j < B.cols(); ++j)
    if (B.partitions[0][j].compact() == "33") {
      EXPECT_EQ(B.column(j), (RationalVector{6, 3, 9}));
      found = true;
    }
  EXPECT_TRUE(found);
  auto broad = broad_method(S, chars);
  EXPECT_EQ(broad.verdict, MethodVerdict::Inconclusive);
  EXPECT_FALSE(broad.outside_labels().empty());

  auto subs = enumerated_inertial_subgroups(*G);
  auto inertial = inertial_method(S, chars, subs, true);
  EXPECT_EQ(inertial.verdict, MethodVerdict::Proved);
  std::set<RationalVector> vectors;
  for (const auto& c : inertial.columns) vectors.insert(c.column);
  for (RationalVector v : {RationalVector{4, 4, 7}, RationalVector{4, 5, 8}, RationalVector{5, 4, 8}})
    EXPECT_TRUE(vectors.count(v)) << v[0] << v[1] << v[2];
  EXPECT_EQ(inertial_method(S, chars, subs, false).verdict, MethodVerdict::Inconclusive);
}

TEST(Methods, InertialColumnsCheckedAgainstOrbits) {
  auto [G, S, chars] = s6_type();
  auto D4xC2 = G->subgroup({cyc(6, {{0, 1, 2, 3}}), cyc(6, {{0, 2}}), cyc(6, {{4, 5}})});
  auto M = inertial_matrix(S, {chars[0]}, {{"D4xC2", D4xC2}});
  EXPECT_EQ(M.partitions[0][0].compact(), "42");
  EXPECT_EQ(M.entries[0][0], 4);
  EXPECT_THROW(inertial_matrix(S, chars, {{"S4", G->subgroup({cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2, 3}})})}}), Error);
  EXPECT_NO_THROW(inertial_matrix(S, chars, {{"S4", G->subgroup({cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2, 3}})})}}, false));
  // Cyclic subgroups reproduce tame columns.
  auto T = tame_matrix(S, chars);
  for (std::size_t j = 0; j < T.cols(); ++j) {
    auto C = cyclic_subgroup(*S, T.classes[j]);
    EXPECT_EQ(inertial_matrix(S, chars, {{"C", C}}).column(0), T.column(j));
  }
}

TEST(Methods, BroadProvedImpliesInertialInside) {
  auto [S, chars] = s5_type();
  ASSERT_EQ(broad_method(S, chars).verdict, MethodVerdict::Proved);
  auto subs = enumerated_inertial_subgroups(S->group());
  EXPECT_EQ(inertial_method(S, chars, subs, true).verdict, MethodVerdict::Proved);
}

TEST(Methods, UniversalHypothesisImpliesInertialProved) {
  std::vector<GroupPtr> corpus = {families::alternating(5), families::pgl2(7), families::dihedral(10),
                                  families::frobenius(11, 5), families::pgl2(9)};
  for (const auto& G : corpus) {
    ASSERT_TRUE(universal_hypothesis(*G)) << G->name();
    auto S = power_classes(G);
    std::vector<PermChar> chars = {natural_char(S)};
    auto subs = enumerated_inertial_subgroups(*G);
    // Add a coset character for a second coordinate.
    chars.push_back(perm_char_coset(S, *subs.back().group, "coset"));
    EXPECT_EQ(inertial_method(S, chars, subs, true).verdict, MethodVerdict::Proved) << G->name();
  }
}

TEST(SplittingField, S5Natural) {
  auto S = power_classes(families::symmetric(5));
  auto B = splitting_field_bounds(S, natural_char(S));
  EXPECT_EQ(B.alpha_bar, make_rational(2, 5));
  EXPECT_EQ(B.max_fixed, 3);
  EXPECT_EQ(B.omega_bar, 1);
  EXPECT_FALSE(B.elusive);
  PermChar trivial{"1", "coset", constant_function(S, 1), {}};
  EXPECT_THROW(splitting_field_bounds(S, trivial), Error);
}

TEST(SplittingField, AlphaFromTameMatrixMinimum) {
  for (auto G : {families::symmetric(4), families::symmetric(5), families::pgl2(7), families::dihedral(9),
                 families::frobenius(7, 3), families::alternating(6)}) {
    auto S = power_classes(G);
    auto phi = natural_char(S);
    auto H = projectivize(tame_matrix(S, {phi, regular_char(S)}));
    auto B = splitting_field_bounds(S, phi);
    long n = phi.degree();
    EXPECT_EQ(H.interval->lo, make_rational(n - B.max_fixed, static_cast<long>(G->order()))) << G->name();
    EXPECT_EQ(H.interval->lo, B.alpha);
    EXPECT_EQ(H.interval->hi, B.omega);
    EXPECT_EQ(H.mean_root->hi, B.omega_bar);
    EXPECT_EQ(B.omega_bar == 1, !B.elusive);
  }
}

TEST(Pullback, RestrictsCharacters) {
  auto [S, chars] = s5_type();
  auto F20 = S->group().subgroup({cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 2, 4, 3}})});
  auto SI = power_classes(F20);
  auto pulled = pullback(chars, SI);
  ASSERT_EQ(pulled.size(), 2u);
  EXPECT_EQ(pulled[0].degree(), 5);
  auto T = tame_matrix(SI, pulled);
  EXPECT_EQ(T.cols(), SI->size() - 1);
}
