#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace tamewild::nt {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Ascending list of positive divisors.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

inline int mobius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

/// Largest power of p dividing n.
inline std::int64_t p_part(std::int64_t n, std::int64_t p) {
  std::int64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline bool is_prime_power(std::int64_t n, std::int64_t* base = nullptr) {
  if (n < 2) return false;
  auto ps = prime_factors(n);
  if (ps.size() != 1) return false;
  if (base) *base = ps[0];
  return true;
}

}  // namespace tamewild::nt
