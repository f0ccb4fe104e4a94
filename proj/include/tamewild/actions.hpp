#pragma once

#include <cstdint>
#include <vector>

#include "tamewild/error.hpp"
#include "tamewild/group.hpp"
#include "tamewild/permutation.hpp"

namespace tamewild {

/// Left cosets gH of H in G. Cosets are numbered by their lexicographically first
/// element, so coset 0 is H itself. Any element of G acts by permuting them.
class CosetSpace {
 public:
  CosetSpace(const FiniteGroup& G, const FiniteGroup& H) : G_(&G), coset_(G.order(), kNone) {
    auto hidx = G.indices_of(H);
    std::vector<Point> buf(G.degree());
    std::uint32_t count = 0;
    for (std::size_t g = 0; g < G.order(); ++g) {
      if (coset_[g] != kNone) continue;
      auto a = G.element(g);
      for (auto h : hidx) {
        auto b = G.element(h);
        for (std::size_t x = 0; x < G.degree(); ++x) buf[x] = a[b[x]];
        coset_[*G.index_of(std::span<const Point>(buf))] = count;
      }
      rep_.push_back(static_cast<std::uint32_t>(g));
      ++count;
    }
    if (count > 0xffff) throw Error(ErrorCode::BoundExceeded, "too many cosets for a permutation action");
  }

  std::size_t size() const { return rep_.size(); }

  Permutation image(const Permutation& s) const {
    std::vector<Point> buf(G_->degree()), im(size());
    for (std::size_t c = 0; c < size(); ++c) {
      auto a = G_->element(rep_[c]);
      for (std::size_t x = 0; x < G_->degree(); ++x) buf[x] = s(a[x]);
      auto idx = G_->index_of(std::span<const Point>(buf));
      if (!idx) throw Error(ErrorCode::NotASubgroup, "element outside the group");
      im[c] = static_cast<Point>(coset_[*idx]);
    }
    return Permutation(std::move(im));
  }

  std::vector<Permutation> images(const std::vector<Permutation>& elems) const {
    std::vector<Permutation> out;
    for (const auto& s : elems) out.push_back(image(s));
    return out;
  }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;
  const FiniteGroup* G_;
  std::vector<std::uint32_t> coset_;
  std::vector<std::uint32_t> rep_;
};

/// Action of G on the left cosets gH, as images of G's generators.
inline std::vector<Permutation> coset_action(const FiniteGroup& G, const FiniteGroup& H) {
  return CosetSpace(G, H).images(G.generators());
}

/// Action of G on an invariant subset of its points, relabelled 0..|pts|−1.
inline std::vector<Permutation> restricted_action(const FiniteGroup& G, const std::vector<Point>& pts) {
  std::vector<int> pos(G.degree(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) pos[pts[i]] = static_cast<int>(i);
  std::vector<Permutation> out;
  for (const auto& s : G.generators()) {
    std::vector<Point> im(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      int j = pos[s(pts[i])];
      if (j < 0) throw Error(ErrorCode::NotAnAction, "point set is not invariant");
      im[i] = static_cast<Point>(j);
    }
    out.push_back(Permutation(std::move(im)));
  }
  return out;
}

/// Concatenates per-generator images of several actions into one permutation
/// representation on the disjoint union.
inline std::vector<Permutation> disjoint_union(const std::vector<std::vector<Permutation>>& actions) {
  if (actions.empty()) return {};
  std::size_t ngens = actions[0].size();
  std::size_t total = 0;
  for (const auto& a : actions) {
    if (a.size() != ngens) throw Error(ErrorCode::NotAnAction, "actions disagree on generator count");
    total += a.empty() ? 0 : a[0].degree();
  }
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < ngens; ++i) {
    std::vector<Point> im;
    im.reserve(total);
    std::size_t offset = 0;
    for (const auto& a : actions) {
      for (std::size_t x = 0; x < a[i].degree(); ++x) im.push_back(static_cast<Point>(offset + a[i](x)));
      offset += a[i].degree();
    }
    out.push_back(Permutation(std::move(im)));
  }
  return out;
}

}  // namespace tamewild
