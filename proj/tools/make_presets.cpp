// Builds every shipped preset from explicit constructions and writes the data files.
// Usage: make_presets <data-dir>

#include <array>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>

#include "tamewild/actions.hpp"
#include "tamewild/classes.hpp"
#include "tamewild/families.hpp"
#include "tamewild/json_io.hpp"

using namespace tamewild;
namespace fs = std::filesystem;

namespace {

struct NamedAction {
  std::string name;
  std::vector<Permutation> images;
};

struct NamedSubgroup {
  std::string name;
  std::vector<Permutation> generators;
};

struct PresetData {
  std::string name;
  std::string provenance;
  GroupPtr group;
  std::vector<NamedAction> actions;
  std::vector<NamedSubgroup> subgroups;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::IntegrityFailure, "construction check failed: " + what);
}

bool transitive(const FiniteGroup& G) { return G.orbit_partition().count() == 1; }

GroupPtr image_group(const std::vector<Permutation>& images, std::size_t bound = FiniteGroup::kDefaultBound) {
  return FiniteGroup::closure(images.at(0).degree(), images, bound);
}

/// Subgroup of the elements satisfying pred; pred must cut out a subgroup.
GroupPtr filter_subgroup(const FiniteGroup& G, const std::function<bool(const Permutation&)>& pred, std::string name = {}) {
  std::vector<Permutation> gens;
  GroupPtr H = FiniteGroup::closure(G.degree(), {}, 1, name);
  for (std::size_t i = 0; i < G.order(); ++i) {
    auto g = G.element_at(i);
    if (!pred(g) || H->contains(g)) continue;
    gens.push_back(g);
    H = FiniteGroup::closure(G.degree(), gens, G.order(), name);
  }
  return H;
}

bool normalizes(const FiniteGroup& H, const Permutation& g) {
  auto gi = g.inverse();
  for (const auto& h : H.generators())
    if (!H.contains(g * h * gi)) return false;
  return true;
}

GroupPtr normalizer(const FiniteGroup& G, const FiniteGroup& H, std::string name = {}) {
  return filter_subgroup(G, [&](const Permutation& g) { return normalizes(H, g); }, std::move(name));
}

std::map<long, std::size_t> order_histogram(const FiniteGroup& G) {
  std::map<long, std::size_t> h;
  for (std::size_t i = 0; i < G.order(); ++i) ++h[G.element_at(i).order()];
  return h;
}

Json write_preset(const fs::path& root, const PresetData& P) {
  const auto& G = *P.group;
  auto S = power_classes(P.group);
  fs::path dir = root / P.name;
  fs::create_directories(dir);

  Json group;
  group["schema"] = "tamewild.group/1";
  group["name"] = P.name;
  group["provenance"] = P.provenance;
  group["degree"] = G.degree();
  group["generators"] = to_json(G.generators());
  Json subs = Json::object();
  for (const auto& s : P.subgroups) subs[s.name] = to_json(s.generators);
  group["subgroups"] = subs;
  write_json_file((dir / "group.json").string(), group);

  Json actions;
  actions["schema"] = "tamewild.actions/1";
  actions["actions"] = Json::array();
  Json expect;
  expect["schema"] = "tamewild.expect/1";
  expect["order"] = G.order();
  expect["classes"] = S->size() - 1;
  Json fp = Json::array();
  for (std::size_t c = 1; c < S->size(); ++c)
    fp.push_back(std::to_string((*S)[c].order) + ":" + std::to_string((*S)[c].size));
  expect["class_fingerprint"] = fp;
  Json ex_actions = Json::object();
  for (const auto& a : P.actions) {
    require(a.images.size() == G.generators().size(), P.name + "/" + a.name + " arity");
    auto img = image_group(a.images, G.order());
    Json aj;
    aj["name"] = a.name;
    aj["degree"] = a.images[0].degree();
    aj["images"] = to_json(a.images);
    actions["actions"].push_back(aj);
    Json e;
    e["degree"] = a.images[0].degree();
    e["transitive"] = transitive(*img);
    e["faithful"] = img->order() == G.order();
    ex_actions[a.name] = e;
  }
  expect["actions"] = ex_actions;
  Json ex_subs = Json::object();
  for (const auto& s : P.subgroups) ex_subs[s.name] = G.subgroup(s.generators)->order();
  expect["subgroup_orders"] = ex_subs;
  write_json_file((dir / "actions.json").string(), actions);
  write_json_file((dir / "expect.json").string(), expect);
  std::cout << P.name << ": order " << G.order() << ", " << S->size() - 1 << " classes\n";
  return group;
}

Permutation cycles1(std::size_t n, std::vector<std::vector<int>> cycles) {
  for (auto& c : cycles)
    for (auto& x : c) --x;
  return Permutation::from_cycles(n, cycles);
}

// ---------------------------------------------------------------- small groups

PresetData make_s5() {
  auto G = FiniteGroup::closure(5, {cycles1(5, {{1, 2}}), cycles1(5, {{1, 2, 3, 4, 5}})}, 200, "S5");
  auto F20 = G->subgroup({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{1, 2, 4, 3}})});
  require(F20->order() == 20, "F20");
  return {"S5", "symmetric group on 5 points; phi6 on the cosets of F20", G,
          {{"phi5", G->generators()}, {"phi6", coset_action(*G, *F20)}},
          {{"F20", F20->generators()}}};
}

PresetData make_a5() {
  auto G = FiniteGroup::closure(5, {Permutation::from_cycles(5, {{0, 1, 2}}), Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})}, 60, "A5");
  auto D10 = G->subgroup({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{1, 4}, {2, 3}})});
  auto C3 = G->subgroup({Permutation::from_cycles(5, {{0, 1, 2}})});
  auto C2 = G->subgroup({Permutation::from_cycles(5, {{0, 1}, {2, 3}})});
  require(D10->order() == 10, "D10");
  return {"A5", "alternating group on 5 points; phi6, phi20, phi30 on the cosets of D10, C3, C2", G,
          {{"phi5", G->generators()}, {"phi6", coset_action(*G, *D10)}, {"phi20", coset_action(*G, *C3)}, {"phi30", coset_action(*G, *C2)}},
          {}};
}

PresetData make_s6() {
  auto G = FiniteGroup::closure(6, {Permutation::from_cycles(6, {{0, 1}}), Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})}, 720, "S6");
  auto pg = families::pgl2(5);
  auto T = G->subgroup(pg->generators());
  require(T->order() == 120 && transitive(*T), "transitive PGL2(5) in S6");
  auto W = G->subgroup({Permutation::from_cycles(6, {{0, 1}}), Permutation::from_cycles(6, {{0, 1, 2}}),
                        Permutation::from_cycles(6, {{3, 4}}), Permutation::from_cycles(6, {{3, 4, 5}}),
                        Permutation::from_cycles(6, {{0, 3}, {1, 4}, {2, 5}})});
  require(W->order() == 72, "S3 wr S2");
  return {"S6", "symmetric group on 6 points; phi6b on the cosets of a transitive PGL2(5); phi10 on the cosets of S3 wr S2", G,
          {{"phi6a", G->generators()}, {"phi6b", coset_action(*G, *T)}, {"phi10", coset_action(*G, *W)}},
          {{"PGL2(5)", T->generators()}, {"S3wrS2", W->generators()}}};
}

PresetData make_q8() {
  auto G = families::quaternion();
  return {"Q8", "quaternion group in its regular representation", G, {{"phi8", G->generators()}}, {}};
}

PresetData make_q8hat() {
  // Semidihedral group of order 16 acting on Z/8 by x -> x + 1 and x -> 3x.
  std::vector<Point> a(8), b(8);
  for (int x = 0; x < 8; ++x) {
    a[x] = static_cast<Point>((x + 1) % 8);
    b[x] = static_cast<Point>((3 * x) % 8);
  }
  Permutation A(a), B(b);
  auto G = FiniteGroup::closure(8, {A, B}, 16, "Q8hat");
  require(G->order() == 16 && transitive(*G), "SD16");
  auto Q = G->subgroup({A.pow(2), A * B});
  auto Z = G->subgroup({A.pow(4)});
  auto K4 = G->subgroup({B, A.pow(4)});
  require(Q->order() == 8 && order_histogram(*Q)[4] == 6, "Q8 in SD16");
  return {"Q8hat", "semidihedral group of order 16 on Z/8 generated by x->x+1 and x->3x", G,
          {{"phi8", G->generators()}, {"phi4", coset_action(*G, *K4)}, {"phi2", coset_action(*G, *Q)}},
          {{"Q8", Q->generators()}, {"Z", Z->generators()}, {"K4", K4->generators()}}};
}

// ---------------------------------------------------------------- Aff3(F2)

PresetData make_aff3() {
  auto linear = [](std::array<int, 3> cols, int shift) {
    std::vector<Point> im(8);
    for (int v = 0; v < 8; ++v) {
      int w = shift;
      for (int i = 0; i < 3; ++i)
        if (v >> i & 1) w ^= cols[i];
      im[v] = static_cast<Point>(w);
    }
    return Permutation(std::move(im));
  };
  auto t = linear({1, 2, 4}, 1);
  auto m1 = linear({2, 4, 1}, 0);
  auto m2 = linear({1, 3, 4}, 0);
  auto G = FiniteGroup::closure(8, {t, m1, m2}, 2000, "Aff3F2");
  require(G->order() == 1344, "AGL(3,2) order");
  auto GL = G->subgroup({m1, m2});
  require(GL->order() == 168, "GL(3,2)");

  // Linear part acting on the seven nonzero vectors.
  std::vector<Permutation> phi7;
  for (const auto& g : G->generators()) {
    std::vector<Point> im(7);
    for (int v = 1; v < 8; ++v) im[v - 1] = static_cast<Point>((g(v) ^ g(0)) - 1);
    phi7.push_back(Permutation(std::move(im)));
  }

  // V:(7:3), the stabilizer of a Singer cycle orbit structure.
  Permutation c7 = Permutation::identity(8);
  for (std::size_t i = 0; i < GL->order(); ++i)
    if (GL->element_at(i).order() == 7) {
      c7 = GL->element_at(i);
      break;
    }
  auto N21 = normalizer(*GL, *GL->subgroup({c7}));
  require(N21->order() == 21, "7:3");
  auto gens168 = N21->generators();
  for (int b : {1, 2, 4}) gens168.push_back(linear({1, 2, 4}, b));
  auto V73 = G->subgroup(gens168);
  require(V73->order() == 168, "V:(7:3)");

  // A transitive complement to the translations.
  GroupPtr K;
  for (int b1 = 0; b1 < 8 && !K; ++b1)
    for (int b2 = 0; b2 < 8 && !K; ++b2) {
      auto x1 = linear({1, 2, 4}, b1) * m1;
      auto x2 = linear({1, 2, 4}, b2) * m2;
      try {
        auto H = FiniteGroup::closure(8, {x1, x2}, 168);
        if (H->order() == 168 && transitive(*H)) K = G->subgroup({x1, x2});
      } catch (const Error&) {
      }
    }
  require(K != nullptr, "transitive complement");
  return {"Aff3F2",
          "affine group of F2^3 on its 8 vectors; phi7 linear part on nonzero vectors; phi8 on the cosets of V:(7:3); "
          "phi8b on the cosets of a transitive complement",
          G,
          {{"phi7", phi7}, {"phi8", coset_action(*G, *V73)}, {"phi8a", G->generators()}, {"phi8b", coset_action(*G, *K)}},
          {{"GL3F2", GL->generators()}, {"V:7:3", V73->generators()}, {"complement", K->generators()}}};
}

// ---------------------------------------------------------------- W(E6)

PresetData make_we6() {
  using Vec = std::array<int, 6>;
  // Bourbaki labels: chain 1-3-4-5-6 with 2 attached to 4.
  int A[6][6] = {};
  for (int i = 0; i < 6; ++i) A[i][i] = 2;
  for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}}) A[i][j] = A[j][i] = -1;
  auto form = [&](const Vec& u, const Vec& v) {
    int s = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) s += u[i] * A[i][j] * v[j];
    return s;
  };
  auto reflect = [&](const Vec& v, const Vec& r) {
    int c = form(v, r);
    Vec w = v;
    for (int i = 0; i < 6; ++i) w[i] -= c * r[i];
    return w;
  };
  std::vector<Vec> simple(6);
  for (int i = 0; i < 6; ++i) simple[i][i] = 1;
  std::set<Vec> found(simple.begin(), simple.end());
  std::vector<Vec> queue(simple.begin(), simple.end());
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& s : simple) {
      auto w = reflect(queue[h], s);
      if (found.insert(w).second) queue.push_back(w);
    }
  std::vector<Vec> roots(found.begin(), found.end());
  require(roots.size() == 72, "E6 root count");
  auto root_index = [&](const Vec& v) {
    return static_cast<std::size_t>(std::lower_bound(roots.begin(), roots.end(), v) - roots.begin());
  };
  auto on_roots = [&](const Vec& r) {
    std::vector<Point> im(72);
    for (std::size_t k = 0; k < 72; ++k) im[k] = static_cast<Point>(root_index(reflect(roots[k], r)));
    return Permutation(std::move(im));
  };
  std::vector<Permutation> s72;
  for (const auto& s : simple) s72.push_back(on_roots(s));
  auto W = FiniteGroup::closure(72, s72, 60000, "WE6-roots");
  require(W->order() == 51840, "W(E6) order");

  Vec highest = *std::max_element(roots.begin(), roots.end(), [](const Vec& a, const Vec& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });

  // 27 weights in the orbit of the first fundamental weight.
  auto weight_reflect = [&](Vec l, int i) {
    int c = l[i];
    for (int j = 0; j < 6; ++j) l[j] -= c * A[i][j];
    return l;
  };
  std::set<Vec> wset{Vec{1, 0, 0, 0, 0, 0}};
  std::vector<Vec> wq{Vec{1, 0, 0, 0, 0, 0}};
  for (std::size_t h = 0; h < wq.size(); ++h)
    for (int i = 0; i < 6; ++i) {
      auto w = weight_reflect(wq[h], i);
      if (wset.insert(w).second) wq.push_back(w);
    }
  std::vector<Vec> weights(wset.begin(), wset.end());
  require(weights.size() == 27, "27 weights");
  std::vector<Permutation> phi27, phi36;
  std::vector<Vec> positive;
  for (const auto& r : roots)
    if (*std::max_element(r.begin(), r.end()) > 0) positive.push_back(r);
  require(positive.size() == 36, "36 positive roots");
  for (int i = 0; i < 6; ++i) {
    std::vector<Point> im(27), im36(36);
    for (std::size_t k = 0; k < 27; ++k)
      im[k] = static_cast<Point>(std::lower_bound(weights.begin(), weights.end(), weight_reflect(weights[k], i)) - weights.begin());
    for (std::size_t k = 0; k < 36; ++k) {
      auto w = reflect(positive[k], simple[i]);
      if (*std::max_element(w.begin(), w.end()) <= 0)
        for (auto& x : w) x = -x;
      im36[k] = static_cast<Point>(std::lower_bound(positive.begin(), positive.end(), w) - positive.begin());
    }
    phi27.push_back(Permutation(std::move(im)));
    phi36.push_back(Permutation(std::move(im36)));
  }

  auto set_stabilizer = [&](const std::vector<std::size_t>& set) {
    std::vector<bool> in(72, false);
    for (auto k : set) in[k] = true;
    return filter_subgroup(*W, [&](const Permutation& g) {
      for (auto k : set)
        if (!in[g(k)]) return false;
      return true;
    });
  };
  std::vector<std::size_t> d4;
  for (std::size_t k = 0; k < 72; ++k)
    if (roots[k][0] == 0 && roots[k][5] == 0) d4.push_back(k);
  require(d4.size() == 24, "D4 subsystem");
  auto H45 = set_stabilizer(d4);
  require(H45->order() == 1152, "D4 stabilizer");

  Vec neg_high = highest;
  for (auto& x : neg_high) x = -x;
  std::set<Vec> sub3{simple[0], simple[2], simple[4], simple[5], simple[1], neg_high};
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Vec> cur(sub3.begin(), sub3.end());
    for (const auto& r : cur)
      for (const auto& v : cur) grew |= sub3.insert(reflect(v, r)).second;
  }
  require(sub3.size() == 18, "3A2 subsystem");
  std::vector<std::size_t> a2;
  for (const auto& v : sub3) a2.push_back(root_index(v));
  auto H40b = set_stabilizer(a2);
  require(H40b->order() == 1296, "3A2 stabilizer");

  auto g3 = s72[0] * s72[2] * s72[4] * s72[5] * s72[1] * on_roots(highest);
  require(g3.order() == 3, "3A2 element order");
  auto g3sq = g3 * g3;
  auto H40a = filter_subgroup(*W, [&](const Permutation& x) {
    auto c = x * g3 * x.inverse();
    return c == g3 || c == g3sq;
  });
  require(H40a->order() == 1296, "normalizer of 3A2 element");

  auto G = FiniteGroup::closure(27, phi27, 60000, "WE6");
  require(G->order() == 51840, "faithful on 27 weights");
  return {"WE6",
          "Weyl group of E6 generated by its simple reflections; phi27 on the weights of the minuscule orbit; phi36 on "
          "root pairs; phi45 on the cosets of the D4 subsystem stabilizer; phi40b on the cosets of the 3A2 subsystem "
          "stabilizer 3^3:(S4x2); phi40a on the cosets of the normalizer 3^(1+2):2S4 of a 3A2 element",
          G,
          {{"phi27", phi27},
           {"phi36", phi36},
           {"phi40a", CosetSpace(*W, *H40a).images(s72)},
           {"phi40b", CosetSpace(*W, *H40b).images(s72)},
           {"phi45", CosetSpace(*W, *H45).images(s72)}},
          {}};
}

// ---------------------------------------------------------------- M12 family

struct MathieuData {
  std::vector<PresetData> presets;
  Json q8_inertial;
  Json q8_chain;
};

MathieuData make_mathieu() {
  auto a = cycles1(12, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}});
  auto b = cycles1(12, {{3, 7, 11, 8}, {4, 10, 5, 6}});
  auto c = cycles1(12, {{1, 12}, {2, 11}, {3, 6}, {4, 8}, {5, 9}, {7, 10}});
  auto M12 = FiniteGroup::closure(12, {a, b, c}, 100000, "M12");
  require(M12->order() == 95040, "M12 order");

  // A transitive M11, found from the 11-cycle and one more element.
  GroupPtr Mt;
  for (std::size_t i = 1; i < M12->order() && !Mt; ++i) {
    auto g = M12->element_at(i);
    try {
      auto H = FiniteGroup::closure(12, {a, g}, 7920);
      if (H->order() == 7920 && transitive(*H)) Mt = M12->subgroup({a, g}, "M11t");
    } catch (const Error&) {
    }
  }
  require(Mt != nullptr, "transitive M11");
  CosetSpace twin(*M12, *Mt);
  require(twin.size() == 12, "twin degree");
  auto twin_images = [&](const FiniteGroup& H) { return twin.images(H.generators()); };

  auto fixes = [](const Permutation& g, std::initializer_list<int> pts) {
    for (int x : pts)
      if (g(x) != x) return false;
    return true;
  };
  auto Q8 = filter_subgroup(*M12, [&](const Permutation& g) { return fixes(g, {0, 1, 2, 3}); }, "Q8");
  require(Q8->order() == 8 && order_histogram(*Q8)[4] == 6, "Q8 four-point stabilizer");
  auto Z = filter_subgroup(*Q8, [](const Permutation& g) { return g.order() <= 2; }, "Z");
  require(Z->order() == 2, "center of Q8");

  GroupPtr Q8hat;
  for (std::size_t i = 0; i < M12->order() && !Q8hat; ++i) {
    auto g = M12->element_at(i);
    if (g(0) == 0 && g(1) == 1 && g(2) == 3 && normalizes(*Q8, g)) {
      auto gens = Q8->generators();
      gens.push_back(g);
      auto H = M12->subgroup(gens, "Q8hat");
      auto h = order_histogram(*H);
      if (H->order() == 16 && h[8] == 4 && h[2] == 5) Q8hat = H;
    }
  }
  require(Q8hat != nullptr && Q8hat->orbit_partition().compact() == "8211", "Q8hat with orbits 8211");

  auto M11 = filter_subgroup(*M12, [&](const Permutation& g) { return fixes(g, {0}); }, "M11");
  auto M10 = filter_subgroup(*M12, [&](const Permutation& g) { return fixes(g, {0, 1}); }, "M10");
  auto M10_2 = filter_subgroup(*M12, [&](const Permutation& g) { return (g(0) == 0 && g(1) == 1) || (g(0) == 1 && g(1) == 0); }, "M10.2");
  auto M9 = filter_subgroup(*M12, [&](const Permutation& g) { return fixes(g, {0, 1, 2}); }, "M9");
  auto M9_2 = filter_subgroup(*M12, [&](const Permutation& g) { return g(0) == 0 && (g(1) == 1 || g(1) == 2) && (g(2) == 1 || g(2) == 2); }, "M9.2");
  require(M11->order() == 7920 && M10->order() == 720 && M10_2->order() == 1440 && M9->order() == 72 && M9_2->order() == 144,
          "Mathieu point stabilizers");

  // 3^2:C8 inside M9.2: the normal Sylow 3-subgroup with an element of order 8.
  auto O3 = filter_subgroup(*M9_2, [](const Permutation& g) { return g.order() == 1 || g.order() == 3; });
  require(O3->order() == 9, "O3(M9.2)");
  GroupPtr C8ext;
  for (std::size_t i = 0; i < M9_2->order() && !C8ext; ++i) {
    auto g = M9_2->element_at(i);
    if (g.order() != 8) continue;
    auto gens = O3->generators();
    gens.push_back(g);
    C8ext = M9_2->subgroup(gens, "3^2:C8");
  }
  require(C8ext && C8ext->order() == 72 && !C8ext->contains_group(*Q8), "3^2:C8");

  // Sylow 2-subgroup grown from Q8, then an overgroup of order 192 transitive in both actions.
  GroupPtr P = Q8;
  while (P->order() < 64) {
    GroupPtr next;
    for (std::size_t i = 0; i < M12->order() && !next; ++i) {
      auto g = M12->element_at(i);
      if (P->contains(g) || !P->contains(g * g) || !normalizes(*P, g)) continue;
      auto gens = P->generators();
      gens.push_back(g);
      next = M12->subgroup(gens);
    }
    require(next && next->order() == 2 * P->order(), "Sylow growth");
    P = next;
  }
  GroupPtr T;
  for (std::size_t i = 0; i < M12->order() && !T; ++i) {
    auto g = M12->element_at(i);
    if (g.order() != 3) continue;
    auto gens = P->generators();
    gens.push_back(g);
    try {
      auto H = FiniteGroup::closure(12, gens, 192, "12T112");
      if (H->order() == 192 && transitive(*H) && transitive(*image_group(twin_images(*H), 192))) T = M12->subgroup(gens, "12T112");
    } catch (const Error&) {
    }
  }
  require(T != nullptr, "order-192 overgroup of a Sylow 2-subgroup");

  auto restricted = [](const FiniteGroup& G, int from) {
    std::vector<Point> pts;
    for (int x = from; x < 12; ++x) pts.push_back(static_cast<Point>(x));
    return restricted_action(G, pts);
  };
  auto rebase = [](const FiniteGroup& G, std::string name) { return FiniteGroup::closure(G.degree(), G.generators(), G.order(), std::move(name)); };
  auto sub_in = [](const FiniteGroup& G, const FiniteGroup& H, std::string name) -> std::vector<NamedSubgroup> {
    if (!G.contains_group(H)) return {};
    return {{std::move(name), H.generators()}};
  };
  auto merge = [](std::vector<NamedSubgroup> a, const std::vector<NamedSubgroup>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  const std::string src = "Mathieu group M12 on 12 points generated by (1..11), (3,7,11,8)(4,10,5,6), "
                          "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10); the second action is on the cosets of a transitive M11";

  MathieuData out;
  auto m12 = rebase(*M12, "M12");
  out.presets.push_back({"M12", src, m12, {{"phi12a", m12->generators()}, {"phi12b", twin_images(*m12)}},
                         {{"Q8", Q8->generators()}, {"Z", Z->generators()}, {"Q8hat", Q8hat->generators()},
                          {"M11", M11->generators()}, {"M11t", Mt->generators()}, {"M10", M10->generators()},
                          {"P", P->generators()}, {"T", T->generators()}}});
  auto with_twin = [&](const GroupPtr& H, const std::string& name, const std::string& small, int from, const std::string& what) {
    auto G = rebase(*H, name);
    out.presets.push_back({name, what + " inside " + src, G, {{small, restricted(*G, from)}, {"phi12", twin_images(*G)}},
                           merge(merge(sub_in(*G, *Q8, "Q8"), sub_in(*G, *Z, "Z")), sub_in(*G, *Q8hat, "Q8hat"))});
  };
  with_twin(M11, "M11", "phi11", 1, "stabilizer of point 0");
  with_twin(M10, "M10", "phi10", 2, "pointwise stabilizer of points 0, 1");
  with_twin(M10_2, "M10.2", "phi10", 2, "setwise stabilizer of {0, 1}");
  with_twin(M9, "M9", "phi9", 3, "pointwise stabilizer of points 0, 1, 2");
  with_twin(M9_2, "M9.2", "phi9", 3, "stabilizer of point 0 and the set {1, 2}");
  auto t = rebase(*T, "12T112");
  out.presets.push_back({"12T112", "overgroup of order 192 of a Sylow 2-subgroup, inside " + src, t,
                         {{"phi12a", t->generators()}, {"phi12b", twin_images(*t)}},
                         {{"Q8", Q8->generators()}, {"Z", Z->generators()}}});

  // Transitive twelve-point images of point stabilizers.
  auto dodecic = [&](const GroupPtr& H, const std::string& name, const std::string& what) {
    auto img = twin_images(*H);
    auto G = FiniteGroup::closure(12, img, H->order(), name);
    require(G->order() == H->order() && transitive(*G), name + " transitive image");
    std::vector<NamedSubgroup> subs;
    if (H->contains_group(*Q8)) subs.push_back({"Q8", twin.images(Q8->generators())});
    out.presets.push_back({name, what + " acting on the cosets of a transitive M11 in " + src, G, {{"phi12", img}}, subs});
  };
  dodecic(C8ext, "12T46", "3^2:C8");
  dodecic(M9, "12T47", "M9 = 3^2:Q8");
  dodecic(M9_2, "12T84", "M9.2 = 3^2:SD16");
  dodecic(M10, "12T181", "M10");
  dodecic(M11, "12T272", "M11");

  Json q8file;
  q8file["schema"] = "tamewild.subgroups/1";
  q8file["group"] = {{"preset", "M12"}};
  q8file["complete"] = false;
  q8file["subgroups"] = Json::array({Json{{"name", "Q8"}, {"generators", to_json(Q8->generators())}}});
  out.q8_inertial = q8file;

  Json chain;
  chain["schema"] = "tamewild.chain/1";
  chain["group"] = {{"preset", "M12"}};
  chain["inertia"] = to_json(Q8->generators());
  chain["decomposition"] = to_json(Q8hat->generators());
  chain["slopes"] = Json::array({"2", "2", "5/2"});
  chain["levels"] = Json::array({Json{{"generators", to_json(Q8->generators())}, {"slope", "2"}},
                                 Json{{"generators", to_json(Z->generators())}, {"slope", "5/2"}}});
  chain["validation"] = "strict";
  out.q8_chain = chain;
  return out;
}

Json q8hat_chain(const PresetData& q8hat) {
  Json chain;
  chain["schema"] = "tamewild.chain/1";
  chain["group"] = {{"preset", "Q8hat"}};
  const auto& subs = q8hat.subgroups;
  auto find = [&](const std::string& n) {
    for (const auto& s : subs)
      if (s.name == n) return s.generators;
    throw Error(ErrorCode::IntegrityFailure, "missing subgroup " + n);
  };
  chain["inertia"] = to_json(find("Q8"));
  chain["decomposition"] = to_json(q8hat.group->generators());
  chain["slopes"] = Json::array({"2", "2", "5/2"});
  chain["levels"] = Json::array({Json{{"generators", to_json(find("Q8"))}, {"slope", "2"}},
                                 Json{{"generators", to_json(find("Z"))}, {"slope", "5/2"}}});
  chain["validation"] = "strict";
  chain["characters"] = Json::array({"phi8+phi2", "phi8+phi4"});
  return chain;
}

}  // namespace

/// Tame chain at a class of type 32 in S5, and the empty chain.
std::pair<Json, Json> s5_chains() {
  auto sigma = cycles1(5, {{1, 2}, {3, 4, 5}});
  Json tame;
  tame["schema"] = "tamewild.chain/1";
  tame["group"] = {{"preset", "S5"}};
  tame["inertia"] = to_json(std::vector<Permutation>{sigma});
  tame["slopes"] = Json::array({"1"});
  tame["levels"] = Json::array({Json{{"generators", to_json(std::vector<Permutation>{sigma})}, {"slope", "1"}}});
  tame["validation"] = "strict";
  tame["characters"] = Json::array({"phi5", "phi6"});
  Json empty = tame;
  empty["slopes"] = Json::array();
  empty["levels"] = Json::array();
  return {tame, empty};
}

int main(int argc, char** argv) {
  CLI::App app{"Write preset and fixture data files"};
  std::string data_dir = TAMEWILD_DATA_DIR;
  std::vector<std::string> only;
  app.add_option("data_dir", data_dir, "data directory (presets/ and fixtures/ are written below it)");
  app.add_option("--only", only, "restrict to these preset names");
  CLI11_PARSE(app, argc, argv);
  auto wanted = [&](const std::string& n) { return only.empty() || std::find(only.begin(), only.end(), n) != only.end(); };
  try {
    fs::path presets = fs::path(data_dir) / "presets", fixtures = fs::path(data_dir) / "fixtures";
    fs::create_directories(presets);
    fs::create_directories(fixtures);
    std::vector<std::function<PresetData()>> small = {make_s5, make_a5, make_s6, make_q8, make_q8hat, make_aff3};
    for (auto& f : small) {
      auto p = f();
      if (!wanted(p.name)) continue;
      write_preset(presets, p);
      if (p.name == "Q8hat") write_json_file((fixtures / "q8hat_chain.json").string(), q8hat_chain(p));
      if (p.name == "S5") {
        auto [tame, empty] = s5_chains();
        write_json_file((fixtures / "s5_tame_chain.json").string(), tame);
        write_json_file((fixtures / "s5_empty_chain.json").string(), empty);
      }
    }
    if (wanted("WE6")) write_preset(presets, make_we6());
    bool any_m = only.empty();
    for (const auto& n : only) any_m |= n.starts_with("M") || n.starts_with("12T");
    if (any_m) {
      auto m = make_mathieu();
      for (const auto& p : m.presets)
        if (wanted(p.name)) write_preset(presets, p);
      write_json_file((fixtures / "m12_q8_inertial.json").string(), m.q8_inertial);
      write_json_file((fixtures / "m12_q8_chain.json").string(), m.q8_chain);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
