#pragma once

#include <stdexcept>
#include <vector>

#include "tamewild/error.hpp"
#include "tamewild/rational.hpp"

namespace tamewild {

enum class ConeVerdict { Inside, Outside };

inline const char* to_string(ConeVerdict v) { return v == ConeVerdict::Inside ? "inside" : "outside"; }

/// Result of a cone membership query. Inside: target = Σ combination_j·column_j
/// with combination ≥ 0. Outside: separator·column_j ≥ 0 for all j and
/// separator·target < 0.
struct ConeCertificate {
  ConeVerdict verdict = ConeVerdict::Inside;
  RationalVector combination;
  RationalVector separator;

  bool inside() const { return verdict == ConeVerdict::Inside; }
};

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Exact re-check of a certificate against the query it answers.
inline bool verify_certificate(const ConeCertificate& cert, const RationalVector& target,
                               const std::vector<RationalVector>& columns) {
  if (cert.inside()) {
    if (cert.combination.size() != columns.size()) return false;
    RationalVector sum(target.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (cert.combination[j] < 0) return false;
      for (std::size_t i = 0; i < target.size(); ++i) sum[i] += cert.combination[j] * columns[j][i];
    }
    return sum == target;
  }
  if (cert.separator.size() != target.size()) return false;
  for (const auto& c : columns)
    if (dot(cert.separator, c) < 0) return false;
  return dot(cert.separator, target) < 0;
}

/// Decides whether target lies in the cone spanned by columns, by phase-one
/// simplex with Bland's rule in exact arithmetic. Infeasibility yields a Farkas
/// separator read off the final duals. The certificate is verified before return.
inline ConeCertificate cone_membership(const RationalVector& target, const std::vector<RationalVector>& columns) {
  const std::size_t m = target.size(), n = columns.size();
  for (const auto& c : columns)
    if (c.size() != m) throw Error(ErrorCode::DegreeMismatch, "column length differs from target length");

  ConeCertificate cert;
  for (std::size_t j = 0; j < n; ++j)
    if (columns[j] == target) {
      cert.combination.assign(n, Rational(0));
      cert.combination[j] = 1;
      return cert;
    }

  std::vector<int> sign(m, 1);
  for (std::size_t i = 0; i < m; ++i)
    if (target[i] < 0) sign[i] = -1;

  // Tableau rows: [A' | I | b'] with A' = diag(sign)·A.
  const std::size_t width = n + m, rhs = n + m;
  std::vector<RationalVector> T(m, RationalVector(width + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = sign[i] * columns[j][i];
    T[i][n + i] = 1;
    T[i][rhs] = sign[i] * target[i];
    basis[i] = n + i;
  }
  RationalVector rc(width);
  Rational obj = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) rc[j] -= T[i][j];
    obj += T[i][rhs];
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j)
      if (rc[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][rhs] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("phase-one simplex unbounded");
    Rational piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j <= width; ++j) T[i][j] -= f * T[leave][j];
    }
    Rational f = rc[enter];
    for (std::size_t j = 0; j < width; ++j) rc[j] -= f * T[leave][j];
    obj += f * T[leave][rhs];
    basis[leave] = enter;
  }

  if (obj == 0) {
    cert.verdict = ConeVerdict::Inside;
    cert.combination.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) cert.combination[basis[i]] = T[i][rhs];
  } else {
    cert.verdict = ConeVerdict::Outside;
    cert.separator.resize(m);
    // Dual of artificial k: π_k = 1 − rc_{n+k}; separator y = −diag(sign)·π.
    for (std::size_t k = 0; k < m; ++k) cert.separator[k] = -sign[k] * (1 - rc[n + k]);
  }
  if (!verify_certificate(cert, target, columns)) throw std::logic_error("cone certificate failed verification");
  return cert;
}

}  // namespace tamewild
