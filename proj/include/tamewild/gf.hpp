#pragma once

#include <vector>

#include "tamewild/error.hpp"
#include "tamewild/numtheory.hpp"

namespace tamewild {

/// GF(q) for small prime powers q. Elements are 0..q−1, read as base-p digit
/// vectors of polynomials modulo a fixed irreducible.
class SmallField {
 public:
  explicit SmallField(int q) : q_(q) {
    std::int64_t p = 0;
    if (q > 256 || !nt::is_prime_power(q, &p)) throw Error(ErrorCode::InvalidParameters, "field order must be a prime power <= 256");
    p_ = static_cast<int>(p);
    n_ = 0;
    for (int t = 1; t < q; t *= p_) ++n_;
    modulus_ = find_irreducible();
    mul_.assign(q * q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) mul_[a * q + b] = slow_mul(a, b);
    for (int g = 2; g < q; ++g) {
      int x = g, ord = 1;
      while (x != 1) {
        x = mul(x, g);
        ++ord;
      }
      if (ord == q - 1) {
        primitive_ = g;
        break;
      }
    }
  }

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int primitive() const { return primitive_; }

  int add(int a, int b) const {
    int r = 0;
    for (int i = 0, w = 1; i < n_; ++i, w *= p_) r += ((a / w % p_ + b / w % p_) % p_) * w;
    return r;
  }
  int neg(int a) const {
    int r = 0;
    for (int i = 0, w = 1; i < n_; ++i, w *= p_) r += ((p_ - a / w % p_) % p_) * w;
    return r;
  }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const {
    if (a == 0) throw Error(ErrorCode::InvalidParameters, "inverse of zero");
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) return b;
    return 0;
  }
  int pow(int a, int k) const {
    int r = 1;
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

 private:
  std::vector<int> digits(int a) const {
    std::vector<int> d(n_);
    for (int i = 0; i < n_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }

  int slow_mul(int a, int b) const {
    auto da = digits(a), db = digits(b);
    std::vector<int> prod(2 * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (int k = 2 * n_ - 1; k >= n_; --k) {
      int c = prod[k];
      if (!c) continue;
      prod[k] = 0;
      for (int i = 0; i < n_; ++i) prod[k - n_ + i] = ((prod[k - n_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
    int r = 0;
    for (int i = n_ - 1; i >= 0; --i) r = r * p_ + prod[i];
    return r;
  }

  /// Low coefficients of a monic irreducible of degree n (x^n + Σ m_i x^i).
  std::vector<int> find_irreducible() const {
    if (n_ == 1) return {0};
    int total = 1;
    for (int i = 0; i < n_; ++i) total *= p_;
    for (int code = 0; code < total; ++code) {
      std::vector<int> m(n_);
      for (int i = 0, c = code; i < n_; ++i, c /= p_) m[i] = c % p_;
      if (m[0] == 0) continue;
      if (has_no_factor(m)) return m;
    }
    throw Error(ErrorCode::InvalidParameters, "no irreducible polynomial found");
  }

  // Degrees here are at most 8, so trial division by every monic of degree <= n/2 suffices.
  bool has_no_factor(const std::vector<int>& m) const {
    std::vector<int> f(m);
    f.push_back(1);
    for (int d = 1; 2 * d <= n_; ++d) {
      int count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (int code = 0; code < count; ++code) {
        std::vector<int> g(d + 1);
        for (int i = 0, c = code; i < d; ++i, c /= p_) g[i] = c % p_;
        g[d] = 1;
        auto r = f;
        for (int k = static_cast<int>(r.size()) - 1; k >= d; --k) {
          int c = r[k];
          if (!c) continue;
          for (int i = 0; i <= d; ++i) r[k - d + i] = ((r[k - d + i] - c * g[i]) % p_ + p_) % p_;
        }
        bool zero = true;
        for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
        if (zero) return false;
      }
    }
    return true;
  }

  int q_, p_, n_;
  int primitive_ = 1;
  std::vector<int> modulus_;
  std::vector<int> mul_;
};

}  // namespace tamewild
