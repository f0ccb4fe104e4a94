#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "tamewild/error.hpp"
#include "tamewild/numtheory.hpp"
#include "tamewild/permutation.hpp"

namespace tamewild {

/// Integer polynomial, coefficients in ascending degree (constant term first).
using IntPolynomial = std::vector<std::int64_t>;

/// Parses "x^5-2x^4+4*x^3-4" style text in the variable x.
inline IntPolynomial parse_polynomial(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorCode::Parse, "empty polynomial");
  IntPolynomial out;
  std::size_t i = 0;
  auto fail = [&] { throw Error(ErrorCode::Parse, "bad polynomial '" + text + "'"); };
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::int64_t coeff = 1;
    bool has_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) coeff = coeff * 10 + (s[i++] - '0');
      has_coeff = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    std::size_t deg = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail();
        deg = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) deg = deg * 10 + (s[i++] - '0');
      }
    } else if (!has_coeff) {
      fail();
    }
    if (out.size() <= deg) out.resize(deg + 1, 0);
    out[deg] += sign * coeff;
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

namespace polyfp {

using Poly = std::vector<std::uint64_t>;  // ascending, reduced mod p, no leading zeros

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly reduce(const IntPolynomial& f, std::uint64_t p) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::int64_t r = f[i] % static_cast<std::int64_t>(p);
    out[i] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  trim(out);
  return out;
}

inline Poly make_monic(Poly f, std::uint64_t p) {
  if (f.empty()) return f;
  auto inv = invmod(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

inline Poly sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

/// Remainder and quotient of a by a nonzero b.
inline Poly divmod(Poly a, const Poly& b, std::uint64_t p, Poly* quotient = nullptr) {
  const int db = degree(b);
  const auto inv = invmod(b.back(), p);
  if (quotient) quotient->assign(std::max(0, degree(a) - db + 1), 0);
  for (int i = degree(a); i >= db; --i) {
    auto c = mulmod(a[i], inv, p);
    if (c == 0) continue;
    if (quotient) (*quotient)[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + p - mulmod(c, b[j], p)) % p;
  }
  trim(a);
  if (quotient) trim(*quotient);
  return a;
}

inline Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(r);
  return divmod(std::move(r), m, p);
}

inline Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r = {1};
  base = divmod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = mul_mod(r, base, m, p);
    base = mul_mod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    auto r = divmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

inline Poly derivative(const Poly& f, std::uint64_t p) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mulmod(f[i], i % p, p));
  trim(d);
  return d;
}

}  // namespace polyfp

/// Degrees of the irreducible factors of f mod p, by distinct-degree splitting.
inline Partition frobenius_partition(const IntPolynomial& f, std::int64_t p) {
  using namespace polyfp;
  if (p < 2 || !nt::is_prime(p)) throw Error(ErrorCode::InvalidParameters, "modulus must be prime");
  if (f.size() < 2 || f.back() == 0) throw Error(ErrorCode::InvalidParameters, "polynomial must have positive degree");
  const auto P = static_cast<std::uint64_t>(p);
  Poly g = reduce(f, P);
  if (degree(g) != static_cast<int>(f.size()) - 1)
    throw Error(ErrorCode::DegenerateLeadingCoefficient, "leading coefficient vanishes mod " + std::to_string(p));
  g = make_monic(std::move(g), P);
  if (degree(gcd(g, derivative(g, P), P)) > 0)
    throw Error(ErrorCode::NotSquarefreeModP, "reduction mod " + std::to_string(p) + " is not squarefree");
  std::vector<int> parts;
  const Poly x = {0, 1};
  Poly h = x;
  for (int d = 1; degree(g) >= 2 * d; ++d) {
    h = pow_mod(h, P, g, P);
    auto common = gcd(g, sub(h, x, P), P);
    int k = degree(common);
    for (int j = 0; j < k / d; ++j) parts.push_back(d);
    if (k > 0) {
      Poly q;
      divmod(g, common, P, &q);
      g = make_monic(std::move(q), P);
      h = divmod(h, g, P);
    }
  }
  if (degree(g) > 0) parts.push_back(degree(g));
  return Partition::from_sizes(std::move(parts));
}

}  // namespace tamewild
