#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "tamewild/error.hpp"
#include "tamewild/gf.hpp"
#include "tamewild/group.hpp"
#include "tamewild/numtheory.hpp"
#include "tamewild/permutation.hpp"

namespace tamewild::families {

namespace detail {

inline Permutation cycle(std::size_t degree, int start, int length) {
  std::vector<int> c(length);
  std::iota(c.begin(), c.end(), start);
  return Permutation::from_cycles(degree, {c});
}

/// Affine map x ↦ a·x + b on Z/n placed at an offset.
inline Permutation affine(std::size_t degree, int offset, int n, long a, long b) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  for (int x = 0; x < n; ++x) im[offset + x] = static_cast<Point>(offset + ((a * x + b) % n + n) % n);
  return Permutation(std::move(im));
}

/// Embeds a permutation of degree d at an offset inside a larger degree.
inline Permutation shift(const Permutation& g, std::size_t degree, int offset) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  for (std::size_t x = 0; x < g.degree(); ++x) im[offset + x] = static_cast<Point>(offset + g(x));
  return Permutation(std::move(im));
}

inline long element_of_order_mod(long q, long p) {
  for (long g = 2; g < p; ++g) {
    long x = g, ord = 1;
    while (x != 1) {
      x = x * g % p;
      ++ord;
    }
    if (ord == q) return g;
  }
  throw Error(ErrorCode::InvalidParameters, "no unit of order " + std::to_string(q) + " mod " + std::to_string(p));
}

inline void require_prime(long p, const char* what) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::InvalidParameters, std::string(what) + " must be prime");
}

inline void require_frobenius(long p, long q) {
  require_prime(p, "p");
  require_prime(q, "q");
  if ((p - 1) % q != 0) throw Error(ErrorCode::InvalidParameters, "F_{p,q} needs q | p-1");
}

}  // namespace detail

inline GroupPtr cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameters, "C_n needs n >= 1");
  return FiniteGroup::closure(n, {detail::cycle(n, 0, n)}, FiniteGroup::kDefaultBound, "C" + std::to_string(n));
}

/// Dihedral group of order 2n on the n-gon.
inline GroupPtr dihedral(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidParameters, "D_n needs n >= 3");
  return FiniteGroup::closure(n, {detail::affine(n, 0, n, 1, 1), detail::affine(n, 0, n, -1, 0)},
                              FiniteGroup::kDefaultBound, "D" + std::to_string(n));
}

/// F_{p,q} = C_p : C_q acting on Z/p by x ↦ x+1 and x ↦ g x, for any q | p-1.
inline GroupPtr frobenius(int p, int q) {
  detail::require_prime(p, "p");
  if (q < 1 || (p - 1) % q != 0) throw Error(ErrorCode::InvalidParameters, "F_{p,q} needs q | p-1");
  if (q == 1) return cyclic(p);
  long g = detail::element_of_order_mod(q, p);
  return FiniteGroup::closure(p, {detail::affine(p, 0, p, 1, 1), detail::affine(p, 0, p, g, 0)},
                              FiniteGroup::kDefaultBound, "F" + std::to_string(p) + "," + std::to_string(q));
}

/// F_{p,q} × C_r on p + r points; generators (translation, multiplier, r-cycle).
inline GroupPtr fpq_times_cr(int p, int q, int r) {
  detail::require_frobenius(p, q);
  detail::require_prime(r, "r");
  if (r == p || r == q) throw Error(ErrorCode::InvalidParameters, "r must differ from p and q");
  std::size_t deg = p + r;
  long g = detail::element_of_order_mod(q, p);
  return FiniteGroup::closure(deg, {detail::affine(deg, 0, p, 1, 1), detail::affine(deg, 0, p, g, 0), detail::cycle(deg, p, r)},
                              FiniteGroup::kDefaultBound, "F" + std::to_string(p) + "," + std::to_string(q) + "xC" + std::to_string(r));
}

/// C_p : C_{q²}, the q²-cycle acting on C_p through its quotient of order q.
/// Points: Z/p then a q²-cycle. Generators (translation, twisted q²-element).
inline GroupPtr cp_semi_cq2(int p, int q) {
  detail::require_frobenius(p, q);
  std::size_t deg = p + q * q;
  long g = detail::element_of_order_mod(q, p);
  auto y = detail::affine(deg, 0, p, g, 0) * detail::cycle(deg, p, q * q);
  return FiniteGroup::closure(deg, {detail::affine(deg, 0, p, 1, 1), y}, FiniteGroup::kDefaultBound,
                              "C" + std::to_string(p) + ":C" + std::to_string(q * q));
}

/// C_p² × C_q on p + p + q points; generators (x, y, z) of orders p, p, q.
inline GroupPtr cp2_times_cq(int p, int q) {
  detail::require_prime(p, "p");
  detail::require_prime(q, "q");
  if (p == q) throw Error(ErrorCode::InvalidParameters, "p and q must differ");
  std::size_t deg = 2 * p + q;
  return FiniteGroup::closure(deg, {detail::cycle(deg, 0, p), detail::cycle(deg, p, p), detail::cycle(deg, 2 * p, q)},
                              FiniteGroup::kDefaultBound, "C" + std::to_string(p) + "^2xC" + std::to_string(q));
}

/// F_{p,q} × C_p on p + p points; generators (translation, multiplier, central p-cycle).
inline GroupPtr fpq_times_cp(int p, int q) {
  detail::require_frobenius(p, q);
  std::size_t deg = 2 * p;
  long g = detail::element_of_order_mod(q, p);
  return FiniteGroup::closure(deg, {detail::affine(deg, 0, p, 1, 1), detail::affine(deg, 0, p, g, 0), detail::cycle(deg, p, p)},
                              FiniteGroup::kDefaultBound, "F" + std::to_string(p) + "," + std::to_string(q) + "xC" + std::to_string(p));
}

/// F_{p,q} × C_p in the product action on p·p points, (x, y) ↦ (f(x), y + 1).
inline GroupPtr fpq_times_cp_product(int p, int q) {
  detail::require_frobenius(p, q);
  std::size_t deg = p * p;
  long g = detail::element_of_order_mod(q, p);
  auto make = [&](auto f) {
    std::vector<Point> im(deg);
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y) {
        auto [nx, ny] = f(x, y);
        im[x * p + y] = static_cast<Point>(nx * p + ny);
      }
    return Permutation(std::move(im));
  };
  return FiniteGroup::closure(deg,
                              {make([&](int x, int y) { return std::pair{(x + 1) % p, y}; }),
                               make([&](int x, int y) { return std::pair{static_cast<int>(g * x % p), y}; }),
                               make([&](int x, int y) { return std::pair{x, (y + 1) % p}; })},
                              FiniteGroup::kDefaultBound, "F" + std::to_string(p) + "," + std::to_string(q) + "xC" + std::to_string(p));
}

/// C_{p²} × C_p on p² + p points; generators (x of order p², y of order p).
inline GroupPtr cp2cyc_times_cp(int p) {
  detail::require_prime(p, "p");
  std::size_t deg = p * p + p;
  return FiniteGroup::closure(deg, {detail::cycle(deg, 0, p * p), detail::cycle(deg, p * p, p)}, FiniteGroup::kDefaultBound,
                              "C" + std::to_string(p * p) + "xC" + std::to_string(p));
}

/// Abelian p-group ∏ C_{p^λ_i} as a product of disjoint cycles.
inline GroupPtr abelian_p_group(int p, const std::vector<int>& exponents) {
  detail::require_prime(p, "p");
  std::size_t deg = 0;
  std::vector<int> lengths;
  for (int e : exponents) {
    int len = 1;
    for (int i = 0; i < e; ++i) len *= p;
    lengths.push_back(len);
    deg += len;
  }
  std::vector<Permutation> gens;
  int offset = 0;
  for (int len : lengths) {
    gens.push_back(detail::cycle(deg, offset, len));
    offset += len;
  }
  return FiniteGroup::closure(deg, gens, FiniteGroup::kDefaultBound, "abelian");
}

inline GroupPtr elementary_abelian(int p, int n) { return abelian_p_group(p, std::vector<int>(n, 1)); }

/// Quaternion group in its regular representation; generators (i, j).
inline GroupPtr quaternion() {
  auto i = Permutation::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  auto j = Permutation::from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}});
  return FiniteGroup::closure(8, {i, j}, FiniteGroup::kDefaultBound, "Q8");
}

/// Extraspecial group of order p³ for p ∈ {2,3}; plus = exponent p (D4 when p = 2).
inline GroupPtr extraspecial(int p, bool plus) {
  if (p == 2) return plus ? dihedral(4) : quaternion();
  if (p != 3) throw Error(ErrorCode::InvalidParameters, "extraspecial groups supported for p = 2, 3");
  if (plus) {
    // Heisenberg group on F3²: translations and the shear (a, b) ↦ (a, b + a).
    auto make = [](auto f) {
      std::vector<Point> im(9);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          auto [na, nb] = f(a, b);
          im[a * 3 + b] = static_cast<Point>(na * 3 + nb);
        }
      return Permutation(std::move(im));
    };
    return FiniteGroup::closure(9,
                                {make([](int a, int b) { return std::pair{(a + 1) % 3, b}; }),
                                 make([](int a, int b) { return std::pair{a, (b + a) % 3}; })},
                                FiniteGroup::kDefaultBound, "3+^(1+2)");
  }
  return FiniteGroup::closure(9, {detail::affine(9, 0, 9, 1, 1), detail::affine(9, 0, 9, 4, 0)}, FiniteGroup::kDefaultBound,
                              "3-^(1+2)");
}

inline GroupPtr symmetric(int n, std::size_t bound = FiniteGroup::kDefaultBound) {
  if (n < 1) throw Error(ErrorCode::InvalidParameters, "S_n needs n >= 1");
  if (n == 1) return FiniteGroup::closure(1, {}, 1, "S1");
  return FiniteGroup::closure(n, {detail::cycle(n, 0, 2), detail::cycle(n, 0, n)}, bound, "S" + std::to_string(n));
}

inline GroupPtr alternating(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameters, "A_n needs n >= 1");
  std::vector<Permutation> gens;
  for (int i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return FiniteGroup::closure(n, gens, FiniteGroup::kDefaultBound, "A" + std::to_string(n));
}

namespace detail {

/// Möbius map x ↦ (a x + b)/(c x + d) on P¹(F_q); ∞ is point q.
inline Permutation mobius_map(const SmallField& F, int a, int b, int c, int d) {
  int q = F.order();
  std::vector<Point> im(q + 1);
  for (int x = 0; x <= q; ++x) {
    int num, den;
    if (x == q) {
      num = a;
      den = c;
    } else {
      num = F.add(F.mul(a, x), b);
      den = F.add(F.mul(c, x), d);
    }
    im[x] = static_cast<Point>(den == 0 ? q : F.mul(num, F.inv(den)));
  }
  return Permutation(std::move(im));
}

}  // namespace detail

inline GroupPtr pgl2(int q) {
  SmallField F(q);
  int a = F.primitive();
  return FiniteGroup::closure(q + 1,
                              {detail::mobius_map(F, 1, 1, 0, 1), detail::mobius_map(F, a, 0, 0, 1), detail::mobius_map(F, 0, 1, 1, 0)},
                              FiniteGroup::kDefaultBound, "PGL2(" + std::to_string(q) + ")");
}

inline GroupPtr psl2(int q) {
  SmallField F(q);
  int a = F.primitive();
  return FiniteGroup::closure(q + 1,
                              {detail::mobius_map(F, 1, 1, 0, 1), detail::mobius_map(F, F.mul(a, a), 0, 0, 1),
                               detail::mobius_map(F, 0, F.neg(1), 1, 0)},
                              FiniteGroup::kDefaultBound, "PSL2(" + std::to_string(q) + ")");
}

/// Named family lookup used by the command line. Parameters by name (n, p, q, r, plus).
inline GroupPtr make_family(const std::string& family, const std::map<std::string, int>& params) {
  auto get = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) throw Error(ErrorCode::InvalidParameters, family + " needs parameter " + key);
    return it->second;
  };
  if (family == "C") return cyclic(get("n"));
  if (family == "D") return dihedral(get("n"));
  if (family == "F") return frobenius(get("p"), get("q"));
  if (family == "FpqxCr") return fpq_times_cr(get("p"), get("q"), get("r"));
  if (family == "CpCq2") return cp_semi_cq2(get("p"), get("q"));
  if (family == "Cp2xCq") return cp2_times_cq(get("p"), get("q"));
  if (family == "FpqxCp") return fpq_times_cp(get("p"), get("q"));
  if (family == "Cp2cycxCp") return cp2cyc_times_cp(get("p"));
  if (family == "Q8") return quaternion();
  if (family == "D4") return dihedral(4);
  if (family == "Extraspecial") return extraspecial(get("p"), get("plus") != 0);
  if (family == "Elementary") return elementary_abelian(get("p"), get("n"));
  if (family == "S") return symmetric(get("n"));
  if (family == "A") return alternating(get("n"));
  if (family == "PSL2") return psl2(get("q"));
  if (family == "PGL2") return pgl2(get("q"));
  throw Error(ErrorCode::InvalidParameters, "unknown family '" + family + "'");
}

inline std::vector<std::string> family_names() {
  return {"C", "D", "F", "FpqxCr", "CpCq2", "Cp2xCq", "FpqxCp", "Cp2cycxCp", "Q8", "D4", "Extraspecial", "Elementary", "S", "A", "PSL2", "PGL2"};
}

}  // namespace tamewild::families
