#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tamewild/error.hpp"
#include "tamewild/permutation.hpp"

namespace tamewild {

namespace detail {

inline std::uint64_t hash_points(std::span<const Point> p) {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h ^ (h >> 29);
}

/// Flat storage of equal-length point sequences with an open-addressing index.
class ElementStore {
 public:
  explicit ElementStore(std::size_t degree) : degree_(degree) { slots_.assign(64, kEmpty); }

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return degree_ ? data_.size() / degree_ : count_; }
  std::span<const Point> at(std::size_t i) const { return {data_.data() + i * degree_, degree_}; }
  const std::vector<Point>& data() const { return data_; }

  std::optional<std::uint32_t> find(std::span<const Point> p) const {
    if (degree_ == 0) return count_ ? std::optional<std::uint32_t>(0) : std::nullopt;
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash_points(p) & mask;; s = (s + 1) & mask) {
      auto idx = slots_[s];
      if (idx == kEmpty) return std::nullopt;
      if (std::equal(p.begin(), p.end(), data_.begin() + static_cast<std::ptrdiff_t>(idx) * degree_)) return idx;
    }
  }

  /// Returns (index, inserted).
  std::pair<std::uint32_t, bool> insert(std::span<const Point> p) {
    if (degree_ == 0) {
      if (count_) return {0, false};
      count_ = 1;
      return {0, true};
    }
    if (auto found = find(p)) return {*found, false};
    auto idx = static_cast<std::uint32_t>(size());
    data_.insert(data_.end(), p.begin(), p.end());
    if (2 * size() > slots_.size()) {
      rehash(slots_.size() * 2);
    } else {
      place(idx);
    }
    return {idx, true};
  }

  void reserve(std::size_t n) {
    data_.reserve(n * degree_);
    std::size_t cap = 64;
    while (cap < 2 * n) cap *= 2;
    if (cap > slots_.size()) rehash(cap);
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  void place(std::uint32_t idx) {
    std::size_t mask = slots_.size() - 1;
    std::size_t s = hash_points(at(idx)) & mask;
    while (slots_[s] != kEmpty) s = (s + 1) & mask;
    slots_[s] = idx;
  }

  void rehash(std::size_t cap) {
    slots_.assign(cap, kEmpty);
    for (std::uint32_t i = 0; i < size(); ++i) place(i);
  }

  std::size_t degree_;
  std::size_t count_ = 0;
  std::vector<Point> data_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace detail

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A permutation group stored as its complete, lexicographically sorted element list.
/// Index 0 is always the identity.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultBound = 200000;

  static GroupPtr closure(std::size_t degree, const std::vector<Permutation>& generators,
                          std::size_t bound = kDefaultBound, std::string name = {}) {
    if (bound < 1) throw Error(ErrorCode::InvalidParameters, "bound must be positive");
    for (const auto& g : generators)
      if (g.degree() != degree) throw Error(ErrorCode::DegreeMismatch, "generator degree differs from group degree");
    detail::ElementStore store(degree);
    store.insert(Permutation::identity(degree).span());
    std::vector<Point> buf(degree);
    for (std::size_t head = 0; head < store.size(); ++head) {
      for (const auto& g : generators) {
        auto x = store.at(head);
        for (std::size_t p = 0; p < degree; ++p) buf[p] = g(x[p]);
        if (store.insert(buf).second && store.size() > bound)
          throw Error(ErrorCode::BoundExceeded, "group order exceeds " + std::to_string(bound));
      }
    }
    return finish(std::move(store), generators, std::move(name));
  }

  /// Builds a group from a complete element list; the list must be closed.
  static GroupPtr from_elements(std::size_t degree, const std::vector<std::span<const Point>>& elements,
                                const std::vector<Permutation>& generators, std::string name = {}) {
    detail::ElementStore store(degree);
    store.reserve(elements.size());
    for (auto e : elements) store.insert(e);
    auto g = finish(std::move(store), generators, std::move(name));
    if (!g->element_at(0).is_identity()) throw Error(ErrorCode::NotASubgroup, "element list lacks identity");
    return g;
  }

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  std::span<const Point> element(std::size_t i) const { return store_.at(i); }
  Permutation element_at(std::size_t i) const {
    return degree_ ? Permutation::from_span(element(i)) : Permutation::identity(0);
  }

  std::optional<std::uint32_t> index_of(std::span<const Point> p) const {
    if (p.size() != degree_) return std::nullopt;
    return store_.find(p);
  }
  std::optional<std::uint32_t> index_of(const Permutation& p) const { return index_of(p.span()); }
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  std::uint32_t multiply(std::size_t i, std::size_t j) const {
    std::vector<Point> buf(degree_);
    auto a = element(i), b = element(j);
    for (std::size_t p = 0; p < degree_; ++p) buf[p] = a[b[p]];
    return *store_.find(buf);
  }

  std::uint32_t inverse(std::size_t i) const {
    std::vector<Point> buf(degree_);
    auto a = element(i);
    for (std::size_t p = 0; p < degree_; ++p) buf[a[p]] = static_cast<Point>(p);
    return *store_.find(buf);
  }

  /// Index of x^k.
  std::uint32_t power(std::size_t i, long k) const { return *index_of(element_at(i).pow(k)); }

  /// True if every element of h is an element of this group.
  bool contains_group(const FiniteGroup& h) const {
    if (h.degree() != degree_) return false;
    if (order_ % h.order() != 0) return false;
    if (h.generators().empty() && h.order() > 1) {
      for (std::size_t i = 0; i < h.order(); ++i)
        if (!index_of(h.element(i))) return false;
      return true;
    }
    for (const auto& g : h.generators())
      if (!contains(g)) return false;
    return true;
  }

  /// Indices (in this group) of the elements of a subgroup, ascending.
  std::vector<std::uint32_t> indices_of(const FiniteGroup& h) const {
    if (!contains_group(h)) throw Error(ErrorCode::NotASubgroup, "group is not contained in ambient group");
    std::vector<std::uint32_t> out(h.order());
    for (std::size_t i = 0; i < h.order(); ++i) out[i] = *index_of(h.element(i));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Orbits of the group on the given point set (all points if empty), each sorted.
  std::vector<std::vector<Point>> orbits(std::span<const Point> points = {}) const {
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : generators_)
      for (std::size_t x = 0; x < degree_; ++x) parent[find(static_cast<int>(x))] = find(g(x));
    std::vector<Point> pts;
    if (points.empty()) {
      pts.resize(degree_);
      std::iota(pts.begin(), pts.end(), Point{0});
    } else {
      pts.assign(points.begin(), points.end());
      std::sort(pts.begin(), pts.end());
    }
    std::vector<std::vector<Point>> out;
    std::vector<int> slot(degree_, -1);
    for (Point x : pts) {
      int r = find(x);
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[slot[r]].push_back(x);
    }
    return out;
  }

  Partition orbit_partition(std::span<const Point> points = {}) const {
    std::vector<int> sizes;
    for (const auto& o : orbits(points)) sizes.push_back(static_cast<int>(o.size()));
    return Partition::from_sizes(std::move(sizes));
  }

  /// The subgroup generated by some elements of this group.
  GroupPtr subgroup(const std::vector<Permutation>& gens, std::string name = {}) const {
    for (const auto& g : gens)
      if (!contains(g)) throw Error(ErrorCode::NotASubgroup, "generator is not in the ambient group");
    return closure(degree_, gens, order_, std::move(name));
  }

 private:
  FiniteGroup() : store_(0) {}

  static GroupPtr finish(detail::ElementStore store, const std::vector<Permutation>& generators, std::string name) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->degree_ = store.degree();
    g->order_ = store.size();
    g->name_ = std::move(name);
    std::size_t n = g->order_, d = g->degree_;
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    if (d > 0) {
      const auto& data = store.data();
      std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::lexicographical_compare(data.begin() + a * d, data.begin() + (a + 1) * d, data.begin() + b * d,
                                            data.begin() + (b + 1) * d);
      });
    }
    detail::ElementStore sorted(d);
    sorted.reserve(n);
    for (auto i : perm) sorted.insert(store.at(i));
    g->store_ = std::move(sorted);
    for (const auto& gen : generators)
      if (!gen.is_identity()) g->generators_.push_back(gen);
    return g;
  }

  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::string name_;
  std::vector<Permutation> generators_;
  detail::ElementStore store_;
};

/// Multiplication table for small groups: table[i*n+j] = index of e_i * e_j.
class CayleyTable {
 public:
  explicit CayleyTable(const FiniteGroup& g, std::size_t bound = 5000) : n_(g.order()) {
    if (n_ > bound) throw Error(ErrorCode::BoundExceeded, "Cayley table requested for group of order " + std::to_string(n_));
    table_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) table_[i * n_ + j] = g.multiply(i, j);
    inv_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (table_[i * n_ + j] == 0) inv_[i] = static_cast<std::uint32_t>(j);
  }

  std::size_t order() const { return n_; }
  std::uint32_t mul(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  std::uint32_t inv(std::size_t i) const { return inv_[i]; }
  std::uint32_t conj(std::size_t g, std::size_t x) const { return mul(mul(g, x), inv_[g]); }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
};

}  // namespace tamewild
