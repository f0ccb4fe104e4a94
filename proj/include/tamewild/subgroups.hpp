#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "tamewild/classes.hpp"
#include "tamewild/divposet.hpp"
#include "tamewild/error.hpp"
#include "tamewild/group.hpp"
#include "tamewild/numtheory.hpp"

namespace tamewild {

inline constexpr std::size_t kEnumerationBound = 2000;

/// One conjugacy class of subgroups, represented by the conjugate whose
/// ascending element-index list is lexicographically least.
struct SubgroupRecord {
  std::vector<Permutation> generators;
  std::size_t order = 0;
  std::size_t class_id = 0;
  std::size_t class_size = 0;             // number of conjugates
  std::vector<std::uint32_t> elements;    // indices into the ambient group, ascending
  Partition orbit_partition;              // orbits on the ambient group's points
  std::vector<long> inertial_primes;      // primes dividing |G| for which the subgroup is p-inertial
};

namespace detail {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : b) h = (h ^ w) * 1099511628211ull;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

inline Bits to_bits(const std::vector<std::uint32_t>& elems, std::size_t n) {
  Bits b((n + 63) / 64, 0);
  for (auto e : elems) b[e / 64] |= std::uint64_t{1} << (e % 64);
  return b;
}

inline bool has_bit(const Bits& b, std::size_t e) { return (b[e / 64] >> (e % 64)) & 1; }

/// Subgroup generated by `gens`, as ascending element indices.
inline std::vector<std::uint32_t> generated(const CayleyTable& T, const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint32_t> out{0};
  std::vector<bool> seen(T.order(), false);
  seen[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (auto g : gens) {
      auto x = T.mul(out[head], g);
      if (!seen[x]) {
        seen[x] = true;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::uint32_t> conjugate(const CayleyTable& T, std::uint32_t g, const std::vector<std::uint32_t>& elems) {
  std::vector<std::uint32_t> out;
  out.reserve(elems.size());
  for (auto x : elems) out.push_back(T.conj(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

/// Greedy generating set: scan elements in index order, keep those not yet generated.
inline std::vector<std::uint32_t> greedy_generators(const CayleyTable& T, const std::vector<std::uint32_t>& elems) {
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> current{0};
  for (auto e : elems) {
    if (std::binary_search(current.begin(), current.end(), e)) continue;
    gens.push_back(e);
    current = generated(T, gens);
    if (current.size() == elems.size()) break;
  }
  return gens;
}

inline std::vector<long> element_orders(const CayleyTable& T) {
  std::vector<long> ord(T.order(), 1);
  for (std::size_t i = 1; i < T.order(); ++i) {
    std::uint32_t x = static_cast<std::uint32_t>(i);
    long k = 1;
    while (x != 0) {
      x = T.mul(x, i);
      ++k;
    }
    ord[i] = k;
  }
  return ord;
}

/// p-inertial test from element orders: the p-elements number exactly the
/// p-part of |H| (so they form the normal Sylow), and some element has
/// p'-order equal to the p'-part of |H| (so the quotient is cyclic).
inline bool p_inertial_from_orders(const std::vector<long>& orders, long p) {
  long n = static_cast<long>(orders.size());
  long pp = nt::p_part(n, p);
  long count = 0, best = 1;
  for (long o : orders) {
    long op = nt::p_part(o, p);
    if (op == o) ++count;
    best = std::max(best, o / op);
  }
  return count == pp && best == n / pp;
}

}  // namespace detail

/// True iff the Sylow p-subgroup of H is normal with cyclic quotient.
inline bool is_p_inertial(const FiniteGroup& H, long p) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::InvalidParameters, "p must be prime");
  std::vector<long> orders(H.order());
  for (std::size_t i = 0; i < H.order(); ++i) orders[i] = H.element_at(i).order();
  return detail::p_inertial_from_orders(orders, p);
}

inline bool is_inertial(const FiniteGroup& H) {
  long n = static_cast<long>(H.order());
  if (n == 1) return true;
  for (auto p : nt::prime_factors(n))
    if (is_p_inertial(H, p)) return true;
  return false;
}

/// Conjugacy classes of subgroups of G, ordered by (order, least element list).
/// Every subgroup arises from a class representative by adjoining one element,
/// so extending representatives by one generator per cyclic subgroup is complete.
inline std::vector<SubgroupRecord> enumerate_subgroups(const FiniteGroup& G, std::size_t bound = kEnumerationBound) {
  if (G.order() > bound)
    throw Error(ErrorCode::BoundExceeded, "subgroup enumeration limited to order " + std::to_string(bound));
  CayleyTable T(G, bound);
  std::size_t n = G.order();
  auto orders = detail::element_orders(T);

  // One generator per cyclic subgroup.
  std::vector<std::uint32_t> cyc_gens;
  {
    std::vector<bool> covered(n, false);
    for (std::size_t g = 1; g < n; ++g) {
      if (covered[g]) continue;
      cyc_gens.push_back(static_cast<std::uint32_t>(g));
      std::uint32_t x = static_cast<std::uint32_t>(g);
      for (long k = 1; k <= orders[g]; ++k, x = T.mul(x, g))
        if (std::gcd(k, orders[g]) == 1) covered[x] = true;
    }
  }

  std::unordered_map<detail::Bits, std::size_t, detail::BitsHash> class_of;
  std::vector<std::vector<std::uint32_t>> reps;
  std::vector<std::size_t> sizes;
  auto add_class = [&](const std::vector<std::uint32_t>& elems) {
    auto id = reps.size();
    std::vector<std::uint32_t> best = elems;
    std::size_t count = 0;
    for (std::size_t g = 0; g < n; ++g) {
      auto c = detail::conjugate(T, static_cast<std::uint32_t>(g), elems);
      if (class_of.emplace(detail::to_bits(c, n), id).second) ++count;
      if (c < best) best = std::move(c);
    }
    reps.push_back(std::move(best));
    sizes.push_back(count);
  };

  add_class({0});
  for (std::size_t r = 0; r < reps.size(); ++r) {
    auto base = reps[r];
    auto bits = detail::to_bits(base, n);
    auto gens = detail::greedy_generators(T, base);
    for (auto g : cyc_gens) {
      if (detail::has_bit(bits, g)) continue;
      auto ext = gens;
      ext.push_back(g);
      auto elems = detail::generated(T, ext);
      if (!class_of.count(detail::to_bits(elems, n))) add_class(elems);
    }
  }

  std::vector<std::size_t> idx(reps.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (reps[a].size() != reps[b].size()) return reps[a].size() < reps[b].size();
    return reps[a] < reps[b];
  });

  auto primes = nt::prime_factors(static_cast<long>(n));
  std::vector<SubgroupRecord> out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const auto& elems = reps[idx[k]];
    SubgroupRecord rec;
    rec.order = elems.size();
    rec.class_id = k;
    rec.class_size = sizes[idx[k]];
    rec.elements = elems;
    for (auto g : detail::greedy_generators(T, elems)) rec.generators.push_back(G.element_at(g));
    std::vector<long> sub_orders;
    for (auto e : elems) sub_orders.push_back(orders[e]);
    for (auto p : primes)
      if (detail::p_inertial_from_orders(sub_orders, p)) rec.inertial_primes.push_back(p);
    auto H = FiniteGroup::closure(G.degree(), rec.generators, rec.order);
    rec.orbit_partition = H->orbit_partition();
    out.push_back(std::move(rec));
  }
  return out;
}

/// The subgroup of G described by a record, as a group in its own right.
inline GroupPtr record_group(const FiniteGroup& G, const SubgroupRecord& rec) {
  return FiniteGroup::closure(G.degree(), rec.generators, rec.order,
                              G.name().empty() ? std::string{} : G.name() + "/H" + std::to_string(rec.class_id));
}

/// Every conjugate of a record's subgroup, each as its ascending element-index list.
inline std::vector<std::vector<std::uint32_t>> conjugate_subgroups(const CayleyTable& T, const SubgroupRecord& rec) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t g = 0; g < T.order(); ++g) out.push_back(detail::conjugate(T, static_cast<std::uint32_t>(g), rec.elements));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<SubgroupRecord> inertial_subgroups(const FiniteGroup& G, std::size_t bound = kEnumerationBound) {
  auto all = enumerate_subgroups(G, bound);
  std::vector<SubgroupRecord> out;
  for (auto& r : all)
    if (!r.inertial_primes.empty() || r.order == 1) out.push_back(std::move(r));
  return out;
}

/// Every inertial subgroup is a U-group.
inline bool universal_hypothesis(const FiniteGroup& G, std::size_t bound = kEnumerationBound) {
  for (const auto& r : inertial_subgroups(G, bound))
    if (!is_U_group(power_classes(record_group(G, r)))) return false;
  return true;
}

}  // namespace tamewild
