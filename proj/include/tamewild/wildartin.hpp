#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tamewild/classes.hpp"
#include "tamewild/classfun.hpp"
#include "tamewild/divposet.hpp"
#include "tamewild/error.hpp"
#include "tamewild/families.hpp"
#include "tamewild/group.hpp"
#include "tamewild/numtheory.hpp"
#include "tamewild/rational.hpp"

namespace tamewild {

enum class ChainValidation { Strict, Structural, None };

inline const char* to_string(ChainValidation v) {
  switch (v) {
    case ChainValidation::Strict: return "strict";
    case ChainValidation::Structural: return "structural";
    case ChainValidation::None: return "none";
  }
  return "strict";
}

inline ChainValidation parse_validation(const std::string& s) {
  if (s == "strict") return ChainValidation::Strict;
  if (s == "structural") return ChainValidation::Structural;
  if (s == "none") return ChainValidation::None;
  throw Error(ErrorCode::Parse, "unknown validation level '" + s + "'");
}

struct ChainLevel {
  GroupPtr group;  // I^{s}
  Rational slope;  // s
};

/// Upper-numbering filtration of an inertia group I ≤ G by slopes s₁ < s₂ < ….
struct SlopeChain {
  ClassSetPtr ambient;  // G♯
  GroupPtr inertia;     // I
  std::vector<ChainLevel> levels;
  ChainValidation validation = ChainValidation::Strict;
};

namespace detail {

inline std::vector<Permutation> generating_set(const FiniteGroup& H) {
  if (!H.generators().empty() || H.order() == 1) return H.generators();
  std::vector<Permutation> all;
  for (std::size_t i = 1; i < H.order(); ++i) all.push_back(H.element_at(i));
  return all;
}

inline bool is_normal_in(const FiniteGroup& J, const FiniteGroup& I) {
  for (const auto& h : generating_set(I)) {
    auto hi = h.inverse();
    for (const auto& j : generating_set(J))
      if (!J.contains(h * j * hi)) return false;
  }
  return true;
}

/// J/K abelian of exponent p, for K normal in J.
inline bool quotient_elementary(const FiniteGroup& J, const FiniteGroup& K, long p) {
  auto gens = generating_set(J);
  for (std::size_t a = 0; a < gens.size(); ++a) {
    if (!K.contains(gens[a].pow(p))) return false;
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!K.contains(gens[a] * gens[b] * gens[a].inverse() * gens[b].inverse())) return false;
  }
  return true;
}

/// J/K cyclic, for K normal in J.
inline bool quotient_cyclic(const FiniteGroup& J, const FiniteGroup& K) {
  std::size_t index = J.order() / K.order();
  for (std::size_t i = 0; i < J.order(); ++i) {
    auto x = J.element_at(i);
    auto y = x;
    std::size_t k = 1;
    while (!K.contains(y)) {
      y = y * x;
      ++k;
    }
    if (k == index) return true;
  }
  return false;
}

inline void chain_fail(const std::string& what) { throw Error(ErrorCode::InvalidChain, what); }

}  // namespace detail

/// Checks a chain at its validation level. Throws InvalidChain or NotASubgroup.
inline void validate_chain(const SlopeChain& chain) {
  if (!chain.ambient || !chain.inertia) detail::chain_fail("chain lacks ambient group or inertia group");
  const auto& G = chain.ambient->group();
  const auto& I = *chain.inertia;
  if (!G.contains_group(I)) throw Error(ErrorCode::NotASubgroup, "inertia group is not contained in the ambient group");
  const auto& L = chain.levels;
  if (L.empty()) return;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (!L[i].group) detail::chain_fail("level " + std::to_string(i + 1) + " has no group");
    if (L[i].slope <= 0) detail::chain_fail("slopes must be positive");
    if (!I.contains_group(*L[i].group)) detail::chain_fail("level " + std::to_string(i + 1) + " is not inside I");
    if (i > 0) {
      if (L[i].slope <= L[i - 1].slope) detail::chain_fail("slopes must increase strictly");
      if (L[i].group->order() >= L[i - 1].group->order() || !L[i - 1].group->contains_group(*L[i].group))
        detail::chain_fail("levels must be strictly nested");
    }
  }
  if (L.back().group->order() == 1) detail::chain_fail("last level must be nontrivial");
  if (chain.validation == ChainValidation::None) return;
  for (std::size_t i = 0; i < L.size(); ++i)
    if (!detail::is_normal_in(*L[i].group, I)) detail::chain_fail("level " + std::to_string(i + 1) + " is not normal in I");
  if (chain.validation == ChainValidation::Structural) return;

  if (L.front().slope < 1) detail::chain_fail("first slope must be at least 1");
  if (L.front().group->order() != I.order()) detail::chain_fail("first level must be all of I");
  bool tame_top = L.front().slope == 1;
  std::size_t first_wild = tame_top ? 1 : 0;
  long p = 0;
  if (first_wild < L.size()) {
    auto primes = nt::prime_factors(static_cast<long>(L[first_wild].group->order()));
    if (primes.size() != 1) detail::chain_fail("wild levels must be p-groups");
    p = primes.front();
  }
  auto trivial = FiniteGroup::closure(I.degree(), {}, 1);
  auto below = [&](std::size_t i) -> const FiniteGroup& { return i + 1 < L.size() ? *L[i + 1].group : *trivial; };
  if (tame_top) {
    const auto& K = below(0);
    std::size_t index = I.order() / K.order();
    if (p != 0 && index % static_cast<std::size_t>(p) == 0) detail::chain_fail("tame quotient order divisible by p");
    if (!detail::quotient_cyclic(I, K)) detail::chain_fail("tame quotient is not cyclic");
  }
  for (std::size_t i = first_wild; i < L.size(); ++i)
    if (!detail::quotient_elementary(*L[i].group, below(i), p))
      detail::chain_fail("quotient at level " + std::to_string(i + 1) + " is not abelian of exponent p");
}

/// Wild Artin character of a chain: a = Σ (s_i − s_{i−1}) a_{I^{s_i}} on G♯, together
/// with its expansion a = (1/|I|) Σ_{σ∈I♯⁰} w_σ [σ] σ̄ a_{i(σ)}.
struct WildArtinCharacter {
  ClassFunction chi;    // on G♯
  ClassFunction local;  // on I♯
  SlopeChain chain;
  ClassSetPtr inertia_classes;
  RationalVector w;                  // indexed by I♯; w[0] = 0
  RationalVector tame_coefficients;  // on G♯, coefficient of a_τ

  bool w_nonnegative() const {
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x >= 0; });
  }
  bool in_tame_cone() const {
    return std::all_of(tame_coefficients.begin(), tame_coefficients.end(), [](const Rational& x) { return x >= 0; });
  }
};

/// w_σ = Σ_i (s_i − s_{i−1}) [I:J_i] Σ_{σ'∈J_i♯, σ'↦σ} u_{J_i,σ'} [σ']_{J_i} / [σ]_I.
inline RationalVector w_coefficients(const SlopeChain& chain, const ClassSetPtr& SI) {
  RationalVector w(SI->size());
  const long nI = static_cast<long>(SI->group().order());
  Rational prev = 0;
  for (const auto& lvl : chain.levels) {
    auto SJ = power_classes(lvl.group);
    auto P = build_poset(SJ);
    auto m = class_map(*SJ, *SI);
    Rational step = (lvl.slope - prev) * make_rational(nI, static_cast<long>(lvl.group->order()));
    for (std::size_t c = 1; c < SJ->size(); ++c) {
      if (P.u[c] == 0) continue;
      w[m[c]] += step * Rational(P.u[c]) *
                 make_rational(static_cast<long>((*SJ)[c].cyclic_count), static_cast<long>((*SI)[m[c]].cyclic_count));
    }
    prev = lvl.slope;
  }
  return w;
}

inline RationalVector w_coefficients(const SlopeChain& chain) {
  validate_chain(chain);
  return w_coefficients(chain, power_classes(chain.inertia));
}

/// Σ (s_i − s_{i−1}) a_{J_i} on the class set S.
inline ClassFunction chain_sum(const SlopeChain& chain, const ClassSetPtr& S) {
  ClassFunction f(S);
  Rational prev = 0;
  for (const auto& lvl : chain.levels) {
    f += Rational(lvl.slope - prev) * formal_artin(S, *lvl.group);
    prev = lvl.slope;
  }
  return f;
}

/// Tame coefficients (1/|I|) w_σ [σ] σ̄ summed over the fibers of I♯ → S.
inline RationalVector fiber_coefficients(const RationalVector& w, const ClassSetPtr& SI, const ClassSetPtr& S) {
  auto m = class_map(*SI, *S);
  RationalVector coeff(S->size());
  const long nI = static_cast<long>(SI->group().order());
  for (std::size_t c = 1; c < SI->size(); ++c) {
    if (w[c] == 0) continue;
    const auto& pc = (*SI)[c];
    coeff[m[c]] += w[c] * make_rational(static_cast<long>(pc.cyclic_count) * pc.order, nI);
  }
  return coeff;
}

/// Both routes are computed and must agree exactly, in I and in G.
inline WildArtinCharacter artin_from_chain(const SlopeChain& chain) {
  validate_chain(chain);
  WildArtinCharacter out;
  out.chain = chain;
  out.inertia_classes = power_classes(chain.inertia);
  const auto& SI = out.inertia_classes;
  const auto& SG = chain.ambient;
  out.w = w_coefficients(chain, SI);
  out.local = chain_sum(chain, SI);
  if (combine_tame(SI, fiber_coefficients(out.w, SI, SI)) != out.local)
    throw Error(ErrorCode::IntegrityFailure, "w-expansion disagrees with slope sum in I");
  out.chi = chain_sum(chain, SG);
  out.tame_coefficients = fiber_coefficients(out.w, SI, SG);
  if (combine_tame(SG, out.tame_coefficients) != out.chi)
    throw Error(ErrorCode::IntegrityFailure, "w-expansion disagrees with slope sum in G");
  return out;
}

inline RationalVector conductor_vector(const WildArtinCharacter& a, const std::vector<PermChar>& chars) {
  RationalVector out;
  for (const auto& phi : chars) {
    if (&phi.chi.classes() != &a.chi.classes())
      throw Error(ErrorCode::ClassSetMismatch, "character '" + phi.name + "' lives on another class set");
    out.push_back(inner_product(a.chi, phi.chi));
  }
  return out;
}

/// Tame coefficients of the character in a group containing I, by fiber sums.
inline RationalVector pushforward_coefficients(const WildArtinCharacter& a, const ClassSetPtr& target) {
  if (!target->group().contains_group(*a.chain.inertia))
    throw Error(ErrorCode::NotASubgroup, "inertia group is not contained in the target group");
  return fiber_coefficients(a.w, a.inertia_classes, target);
}

/// The character on a group containing I. The fiber sum is cross-checked against
/// induction of the local character.
inline ClassFunction pushforward(const WildArtinCharacter& a, const ClassSetPtr& target) {
  auto coeff = pushforward_coefficients(a, target);
  auto f = combine_tame(target, coeff);
  if (f != induce(a.local, target)) throw Error(ErrorCode::IntegrityFailure, "pushforward disagrees with induction");
  return f;
}

/// Slope after tame base change of ramification index t.
inline Rational tame_base_change(const Rational& s, long t) {
  if (t < 1) throw Error(ErrorCode::InvalidParameters, "ramification index must be positive");
  return 1 + Rational(t) * (s - 1);
}

enum class Series { FpqCr, CpCq2, Cp2Cq, FpqCp, Q8, Cp2Cp };

inline const char* to_string(Series s) {
  switch (s) {
    case Series::FpqCr: return "Fpq_x_Cr";
    case Series::CpCq2: return "Cp:Cq2";
    case Series::Cp2Cq: return "Cp2_x_Cq";
    case Series::FpqCp: return "Fpq_x_Cp";
    case Series::Q8: return "Q8";
    case Series::Cp2Cp: return "Cp2cyc_x_Cp";
  }
  return "?";
}

inline Series parse_series(const std::string& s) {
  for (auto x : {Series::FpqCr, Series::CpCq2, Series::Cp2Cq, Series::FpqCp, Series::Q8, Series::Cp2Cp})
    if (s == to_string(x)) return x;
  throw Error(ErrorCode::Parse, "unknown series '" + s + "'");
}

/// Parameters by series: FpqCr (p,q,r), CpCq2 (p,q), Cp2Cq (p,q), FpqCp (p,q,s,c),
/// Q8 (s1,s2), Cp2Cp (p,v1,v2,c). Slope s in the first three sets the wild level (default 2).
struct SeriesParams {
  long p = 0, q = 0, r = 0;
  Rational s = 0, c = 0, s1 = 0, s2 = 0, v1 = 0, v2 = 0;
};

namespace detail {

inline void require_series(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidParameters, what);
}

inline void check_series(Series series, const SeriesParams& a) {
  auto prime = [](long x) { return x >= 2 && nt::is_prime(x); };
  switch (series) {
    case Series::FpqCr:
      require_series(prime(a.r) && a.r != a.p && a.r != a.q, "r must be a prime distinct from p and q");
      [[fallthrough]];
    case Series::CpCq2:
      require_series(prime(a.p) && prime(a.q) && (a.p - 1) % a.q == 0, "need primes with q | p-1");
      break;
    case Series::Cp2Cq:
      require_series(prime(a.p) && prime(a.q) && a.p != a.q, "need distinct primes p, q");
      break;
    case Series::FpqCp:
      require_series(prime(a.p) && prime(a.q) && (a.p - 1) % a.q == 0, "need primes with q | p-1");
      require_series(a.s > 1 && a.c > 1, "slopes s and c must exceed 1");
      break;
    case Series::Q8:
      require_series(a.s1 >= 1 && a.s2 > a.s1, "need 1 <= s1 < s2");
      break;
    case Series::Cp2Cp:
      require_series(prime(a.p), "p must be prime");
      require_series(a.v1 > 0 && a.v2 > a.v1 && a.c > 0, "need 0 < v1 < v2 and c > 0");
      break;
  }
}

}  // namespace detail

/// Closed-form w at the distinguished N-class of each series.
inline Rational series_w(Series series, const SeriesParams& a) {
  detail::check_series(series, a);
  const Rational p(a.p), q(a.q);
  switch (series) {
    case Series::FpqCr:
    case Series::CpCq2:
    case Series::Cp2Cq: return -p;
    case Series::FpqCp:
      if (a.c > a.s) return (1 - p) + q * (a.s - 1) + q * p * (a.c - a.s);
      return (1 - p) + q * (a.c - 1);
    case Series::Q8: return 4 * a.s2 - 6 * a.s1;
    case Series::Cp2Cp:
      if (a.c < a.v1) return (a.c + 1) * (1 - p) + (a.v2 - a.v1) * p * p;
      if (a.c < a.v2) return (a.v1 + 1) * (1 - p) + (a.c - a.v1) * p + (a.v2 - a.c) * p * p;
      return (a.v1 + 1) * (1 - p) + (a.v2 - a.v1) * p;
  }
  return 0;
}

/// A concrete group and chain realizing a series, with the distinguished class in I♯.
struct SeriesInstance {
  SlopeChain chain;
  std::uint32_t boxed = 0;
};

inline SeriesInstance series_chain(Series series, const SeriesParams& a) {
  detail::check_series(series, a);
  GroupPtr I;
  std::vector<ChainLevel> levels;
  Permutation boxed_elt;
  const Rational wild = a.s > 1 ? a.s : Rational(2);
  auto sub = [&](std::vector<Permutation> gens) { return I->subgroup(gens); };
  switch (series) {
    case Series::FpqCr: {
      I = families::fpq_times_cr(static_cast<int>(a.p), static_cast<int>(a.q), static_cast<int>(a.r));
      const auto& g = I->generators();
      levels = {{I, 1}, {sub({g[0]}), wild}};
      boxed_elt = g[2];
      break;
    }
    case Series::CpCq2: {
      I = families::cp_semi_cq2(static_cast<int>(a.p), static_cast<int>(a.q));
      const auto& g = I->generators();
      levels = {{I, 1}, {sub({g[0]}), wild}};
      boxed_elt = g[1].pow(a.q);
      break;
    }
    case Series::Cp2Cq: {
      I = families::cp2_times_cq(static_cast<int>(a.p), static_cast<int>(a.q));
      const auto& g = I->generators();
      levels = {{I, 1}, {sub({g[0], g[1]}), wild}};
      boxed_elt = g[2];
      break;
    }
    case Series::FpqCp: {
      I = families::fpq_times_cp(static_cast<int>(a.p), static_cast<int>(a.q));
      const auto& g = I->generators();
      levels = {{I, 1}, {sub({g[0], g[2]}), std::min(a.s, a.c)}};
      if (a.c > a.s) levels.push_back({sub({g[2]}), a.c});
      if (a.s > a.c) levels.push_back({sub({g[0]}), a.s});
      boxed_elt = g[2];
      break;
    }
    case Series::Q8: {
      I = families::quaternion();
      const auto& g = I->generators();
      levels = {{I, a.s1}, {sub({g[0].pow(2)}), a.s2}};
      boxed_elt = g[0].pow(2);
      break;
    }
    case Series::Cp2Cp: {
      I = families::cp2cyc_times_cp(static_cast<int>(a.p));
      const auto& g = I->generators();
      const Rational s1 = a.v1 + 1, s2 = a.v2 + 1, t = a.c + 1;
      std::vector<Rational> jumps = {s1, s2, t};
      std::sort(jumps.begin(), jumps.end());
      jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
      for (const auto& b : jumps) {
        std::vector<Permutation> gens;
        if (b <= s1) gens.push_back(g[0]);
        else if (b <= s2) gens.push_back(g[0].pow(a.p));
        if (b <= t) gens.push_back(g[1]);
        levels.push_back({sub(gens), b});
      }
      boxed_elt = g[0].pow(a.p);
      break;
    }
  }
  SeriesInstance out;
  out.chain = SlopeChain{power_classes(I), I, std::move(levels), ChainValidation::Strict};
  out.boxed = out.chain.ambient->class_of(boxed_elt);
  return out;
}

/// One point of the C_{p²} × C_p slope grid.
struct Cp2CpGridPoint {
  long p = 0, e = 0;
  bool geometric = false;
  Rational c, v1, v2;
};

/// Half-integer grid over 1 ≤ c ≤ pB, 1 ≤ v1 ≤ pB with B = e/(p−1). Geometric regime v1 < B
/// takes v2 = p·v1 + k/2 for 0 ≤ k ≤ 2pB; arithmetic regime v1 ≥ B takes v2 = v1 + e.
inline std::vector<Cp2CpGridPoint> cp2cp_grid(long p, long e) {
  if (!nt::is_prime(p) || e < 1) throw Error(ErrorCode::InvalidParameters, "need prime p and e >= 1");
  const Rational B = make_rational(e, p - 1), top = Rational(p) * B, half = make_rational(1, 2);
  std::vector<Cp2CpGridPoint> out;
  for (Rational v1 = 1; v1 <= top; v1 += half)
    for (Rational c = 1; c <= top; c += half) {
      if (v1 < B) {
        for (Rational k = 0; k <= top; k += half) out.push_back({p, e, true, c, v1, Rational(p) * v1 + k});
      } else {
        out.push_back({p, e, false, c, v1, v1 + Rational(e)});
      }
    }
  return out;
}

}  // namespace tamewild
