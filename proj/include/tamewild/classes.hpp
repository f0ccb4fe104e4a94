#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "tamewild/error.hpp"
#include "tamewild/group.hpp"
#include "tamewild/numtheory.hpp"
#include "tamewild/permutation.hpp"

namespace tamewild {

struct PowerClass {
  std::uint32_t representative = 0;  // element index in the group
  long order = 1;
  std::size_t size = 1;          // |C_σ|, number of elements in the class
  std::size_t cyclic_count = 1;  // [σ] = |C_σ| / φ(σ̄)
  std::size_t centralizer = 1;   // |C_G(g)| for a representative g
  int conjugacy_classes = 1;     // ordinary classes merged into this one
  std::string label;
  Partition cycle_type;
};

class PowerClassSet;
using ClassSetPtr = std::shared_ptr<const PowerClassSet>;

/// The power-conjugacy classes G♯ of a group. Identity is class 0; other classes are
/// sorted by element order, then by their lexicographically first element.
class PowerClassSet {
 public:
  static ClassSetPtr compute(GroupPtr group) {
    auto set = std::shared_ptr<PowerClassSet>(new PowerClassSet());
    set->group_ = std::move(group);
    set->build();
    return set;
  }

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t size() const { return classes_.size(); }
  const PowerClass& operator[](std::size_t c) const { return classes_[c]; }
  const std::vector<PowerClass>& classes() const { return classes_; }

  std::uint32_t class_of(std::size_t element) const { return class_of_[element]; }
  std::uint32_t class_of(const Permutation& g) const {
    auto idx = group_->index_of(g);
    if (!idx) throw Error(ErrorCode::NotASubgroup, "permutation is not a group element");
    return class_of_[*idx];
  }

  /// Class of σ^k for a representative σ of class c; k may be any integer.
  std::uint32_t power_map(std::size_t c, long k) const {
    long m = classes_[c].order;
    long r = ((k % m) + m) % m;
    return powers_[c][static_cast<std::size_t>(r)];
  }

  /// τ divides σ: τ is the class of some power of σ.
  bool divides(std::size_t tau, std::size_t sigma) const {
    for (auto c : powers_[sigma])
      if (c == tau) return true;
    return false;
  }

  int find_label(const std::string& label) const {
    for (std::size_t c = 0; c < classes_.size(); ++c)
      if (classes_[c].label == label) return static_cast<int>(c);
    return -1;
  }

 private:
  PowerClassSet() = default;

  void build() {
    const auto& G = *group_;
    std::size_t n = G.order(), d = G.degree();
    std::vector<Permutation> gens = G.generators();
    std::vector<Permutation> invs;
    for (const auto& g : gens) invs.push_back(g.inverse());

    // Ordinary conjugacy classes by orbit search under the generators.
    constexpr std::uint32_t kNone = 0xffffffffu;
    std::vector<std::uint32_t> conj(n, kNone);
    std::vector<std::uint32_t> conj_rep, conj_size;
    std::vector<Point> buf(d);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t start = 0; start < n; ++start) {
      if (conj[start] != kNone) continue;
      auto id = static_cast<std::uint32_t>(conj_rep.size());
      conj_rep.push_back(start);
      conj[start] = id;
      queue.assign(1, start);
      for (std::size_t h = 0; h < queue.size(); ++h) {
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          auto y = G.element(queue[h]);
          for (std::size_t x = 0; x < d; ++x) buf[x] = gens[gi](y[invs[gi](x)]);
          auto j = *G.index_of(std::span<const Point>(buf));
          if (conj[j] == kNone) {
            conj[j] = id;
            queue.push_back(j);
          }
        }
      }
      conj_size.push_back(static_cast<std::uint32_t>(queue.size()));
    }

    // Merge classes related by generator-preserving powers.
    std::size_t nc = conj_rep.size();
    std::vector<std::uint32_t> parent(nc);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<long> conj_order(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      auto r = G.element_at(conj_rep[c]);
      long m = r.order();
      conj_order[c] = m;
      auto cur = r;
      for (long k = 2; k < m; ++k) {
        cur = cur * r;
        if (std::gcd(k, m) != 1) continue;
        auto other = conj[*G.index_of(cur)];
        parent[find(other)] = find(static_cast<std::uint32_t>(c));
      }
    }

    // Discovery order: first element index of each merged class.
    std::vector<std::uint32_t> first(nc, kNone);
    std::vector<std::uint32_t> roots;
    for (std::uint32_t e = 0; e < n; ++e) {
      auto r = find(conj[e]);
      if (first[r] == kNone) {
        first[r] = e;
        roots.push_back(r);
      }
    }
    std::stable_sort(roots.begin(), roots.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return conj_order[a] < conj_order[b]; });
    std::vector<std::uint32_t> slot(nc, kNone);
    for (std::size_t i = 0; i < roots.size(); ++i) slot[roots[i]] = static_cast<std::uint32_t>(i);

    classes_.resize(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      auto& pc = classes_[i];
      pc.representative = first[roots[i]];
      pc.order = conj_order[roots[i]];
      pc.size = 0;
      pc.conjugacy_classes = 0;
      pc.centralizer = n / conj_size[roots[i]];
      pc.cycle_type = cycle_type(G.element(pc.representative));
    }
    for (std::size_t c = 0; c < nc; ++c) {
      auto& pc = classes_[slot[find(static_cast<std::uint32_t>(c))]];
      pc.size += conj_size[c];
      pc.conjugacy_classes += 1;
    }
    class_of_.resize(n);
    for (std::size_t e = 0; e < n; ++e) class_of_[e] = slot[find(conj[e])];

    int letter = 0;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      auto& pc = classes_[i];
      auto phi = nt::euler_phi(pc.order);
      if (pc.size % static_cast<std::size_t>(phi) != 0)
        throw Error(ErrorCode::IntegrityFailure, "class size not divisible by euler phi of the order");
      pc.cyclic_count = pc.size / static_cast<std::size_t>(phi);
      letter = (i > 0 && classes_[i - 1].order == pc.order) ? letter + 1 : 0;
      std::string suffix;
      for (int l = letter;; l = l / 26 - 1) {
        suffix.insert(suffix.begin(), static_cast<char>('A' + l % 26));
        if (l < 26) break;
      }
      pc.label = std::to_string(pc.order) + suffix;
    }

    powers_.resize(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      auto r = G.element_at(classes_[c].representative);
      auto cur = Permutation::identity(d);
      for (long k = 0; k < classes_[c].order; ++k) {
        powers_[c].push_back(class_of_[*G.index_of(cur)]);
        cur = cur * r;
      }
    }
  }

  GroupPtr group_;
  std::vector<PowerClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<std::uint32_t>> powers_;
};

inline ClassSetPtr power_classes(GroupPtr group) { return PowerClassSet::compute(std::move(group)); }

/// The natural map I♯ → G♯ for I contained in G.
inline std::vector<std::uint32_t> class_map(const PowerClassSet& sub, const PowerClassSet& ambient) {
  const auto& I = sub.group();
  const auto& G = ambient.group();
  if (!G.contains_group(I)) throw Error(ErrorCode::NotASubgroup, "class_map: not a subgroup");
  std::vector<std::uint32_t> out(sub.size());
  for (std::size_t c = 0; c < sub.size(); ++c) {
    auto idx = G.index_of(I.element(sub[c].representative));
    if (!idx) throw Error(ErrorCode::NotASubgroup, "class_map: element outside ambient group");
    out[c] = ambient.class_of(*idx);
  }
  return out;
}

/// Number of elements of H in each class of G: |C_σ ∩ H|.
inline std::vector<std::size_t> class_intersections(const PowerClassSet& S, const FiniteGroup& H) {
  const auto& G = S.group();
  if (!G.contains_group(H)) throw Error(ErrorCode::NotASubgroup, "subgroup is not contained in the group");
  std::vector<std::size_t> counts(S.size(), 0);
  for (std::size_t i = 0; i < H.order(); ++i) {
    auto idx = G.index_of(H.element(i));
    if (!idx) throw Error(ErrorCode::NotASubgroup, "element outside ambient group");
    counts[S.class_of(*idx)]++;
  }
  return counts;
}

}  // namespace tamewild
