#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "tamewild/error.hpp"

namespace tamewild {

using Point = std::uint16_t;

/// Weakly decreasing list of cycle lengths (or orbit sizes).
struct Partition {
  std::vector<int> parts;

  int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int count() const { return static_cast<int>(parts.size()); }
  int ones() const { return static_cast<int>(std::count(parts.begin(), parts.end(), 1)); }
  bool operator==(const Partition&) const = default;

  /// "2211", with parts of two or more digits in parentheses: "(10)2".
  std::string compact() const {
    std::string s;
    for (int p : parts) s += p < 10 ? std::to_string(p) : "(" + std::to_string(p) + ")";
    return s;
  }

  /// "2^2 1" style, exponents only where a part repeats.
  std::string exponential() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      if (!s.empty()) s += ' ';
      s += std::to_string(parts[i]);
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
    return s;
  }

  static Partition from_sizes(std::vector<int> sizes) {
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return Partition{std::move(sizes)};
  }

  /// Inverse of compact(): "2211", "(10)2".
  static Partition parse(const std::string& text) {
    std::vector<int> sizes;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '(') {
        auto close = text.find(')', i);
        if (close == std::string::npos) throw Error(ErrorCode::Parse, "unbalanced partition '" + text + "'");
        sizes.push_back(std::stoi(text.substr(i + 1, close - i - 1)));
        i = close;
      } else if (text[i] >= '1' && text[i] <= '9') {
        sizes.push_back(text[i] - '0');
      } else {
        throw Error(ErrorCode::Parse, "bad partition '" + text + "'");
      }
    }
    return from_sizes(std::move(sizes));
  }
};

/// A bijection of {0,…,degree−1}. Composition (g*h)(x) = g(h(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) { validate(); }

  static Permutation identity(std::size_t degree) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point{0});
    return Permutation(std::move(im), Trusted{});
  }

  /// Builds from disjoint cycles on the given degree.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
    auto p = identity(degree);
    std::vector<bool> seen(degree, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        int a = c[i];
        int b = c[(i + 1) % c.size()];
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= degree || static_cast<std::size_t>(b) >= degree)
          throw Error(ErrorCode::InvalidParameters, "cycle point out of range");
        if (seen[a]) throw Error(ErrorCode::InvalidParameters, "cycles not disjoint");
        seen[a] = true;
        p.images_[a] = static_cast<Point>(b);
      }
    }
    return p;
  }

  static Permutation from_span(std::span<const Point> images) {
    return Permutation(std::vector<Point>(images.begin(), images.end()), Trusted{});
  }

  std::size_t degree() const { return images_.size(); }
  Point operator()(std::size_t x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }
  std::span<const Point> span() const { return images_; }

  Permutation operator*(const Permutation& h) const {
    if (h.degree() != degree()) throw Error(ErrorCode::DegreeMismatch, "composing permutations of different degree");
    std::vector<Point> im(degree());
    for (std::size_t x = 0; x < degree(); ++x) im[x] = images_[h.images_[x]];
    return Permutation(std::move(im), Trusted{});
  }

  Permutation inverse() const {
    std::vector<Point> im(degree());
    for (std::size_t x = 0; x < degree(); ++x) im[images_[x]] = static_cast<Point>(x);
    return Permutation(std::move(im), Trusted{});
  }

  Permutation pow(long k) const {
    auto base = k < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    auto result = identity(degree());
    while (e) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  bool is_identity() const {
    for (std::size_t x = 0; x < degree(); ++x)
      if (images_[x] != x) return false;
    return true;
  }

  long order() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation& o) const { return images_ <=> o.images_; }

  /// "(0 1 2)(3 4)"; identity prints as "()".
  std::string cycle_string() const;

 private:
  struct Trusted {};
  Permutation(std::vector<Point> images, Trusted) : images_(std::move(images)) {}

  void validate() const {
    std::vector<bool> hit(images_.size(), false);
    for (Point y : images_) {
      if (y >= images_.size() || hit[y]) throw Error(ErrorCode::InvalidParameters, "images do not form a bijection");
      hit[y] = true;
    }
  }

  std::vector<Point> images_;
};

/// Cycle lengths of g restricted to an invariant point set (all points if empty).
inline Partition cycle_type(std::span<const Point> g, std::span<const Point> points = {}) {
  std::vector<int> lengths;
  std::vector<bool> seen(g.size(), false);
  auto visit = [&](std::size_t start) {
    if (seen[start]) return;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = g[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  };
  if (points.empty()) {
    for (std::size_t x = 0; x < g.size(); ++x) visit(x);
  } else {
    for (Point x : points) visit(x);
  }
  return Partition::from_sizes(std::move(lengths));
}

inline Partition cycle_type(const Permutation& g) { return cycle_type(g.span()); }

inline int fixed_points(std::span<const Point> g, std::span<const Point> points = {}) {
  int n = 0;
  if (points.empty()) {
    for (std::size_t x = 0; x < g.size(); ++x) n += g[x] == x;
  } else {
    for (Point x : points) n += g[x] == x;
  }
  return n;
}

inline int fixed_points(const Permutation& g) { return fixed_points(g.span()); }

inline long Permutation::order() const {
  long result = 1;
  for (int len : cycle_type(*this).parts) result = std::lcm(result, static_cast<long>(len));
  return result;
}

inline std::string Permutation::cycle_string() const {
  std::string s;
  std::vector<bool> seen(degree(), false);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    s += '(';
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (y != x) s += ' ';
      s += std::to_string(y);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace tamewild
