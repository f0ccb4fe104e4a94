#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tamewild/classfun.hpp"
#include "tamewild/error.hpp"
#include "tamewild/lp.hpp"
#include "tamewild/subgroups.hpp"

namespace tamewild {

enum class MatrixKind { Partition, Tame, Broad, Inertial };

inline const char* to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::Partition: return "partition";
    case MatrixKind::Tame: return "tame";
    case MatrixKind::Broad: return "broad";
    case MatrixKind::Inertial: return "inertial";
  }
  return "?";
}

/// Rows are characters, columns are non-identity classes or subgroups.
struct ConductorMatrix {
  MatrixKind kind = MatrixKind::Tame;
  std::vector<PermChar> characters;
  std::vector<std::string> labels;
  std::vector<std::size_t> classes;                // class index per column (class columns only)
  std::vector<RationalVector> entries;             // entries[row][col]
  std::vector<std::vector<Partition>> partitions;  // partitions[row][col], when known

  std::size_t rows() const { return characters.size(); }
  std::size_t cols() const { return labels.size(); }
  RationalVector column(std::size_t j) const {
    RationalVector c(rows());
    for (std::size_t i = 0; i < rows(); ++i) c[i] = entries[i][j];
    return c;
  }
  std::vector<RationalVector> columns() const {
    std::vector<RationalVector> out;
    for (std::size_t j = 0; j < cols(); ++j) out.push_back(column(j));
    return out;
  }
};

namespace detail {

inline void check_characters(const ClassSetPtr& S, const std::vector<PermChar>& chars) {
  for (const auto& phi : chars)
    if (phi.class_set() != S) throw Error(ErrorCode::ClassSetMismatch, "character '" + phi.name + "' belongs to another class set");
}

inline Partition partition_of(const PowerClassSet& S, const PermChar& phi, std::size_t cls) {
  auto from_char = cycle_type_from_char(phi.chi, cls);
  if (!phi.points.empty()) {
    auto direct = cycle_type(S.group().element(S[cls].representative), phi.points);
    if (direct != from_char)
      throw Error(ErrorCode::IntegrityFailure, "cycle type of " + S[cls].label + " disagrees with character " + phi.name);
    return direct;
  }
  return from_char;
}

inline ConductorMatrix class_matrix(const ClassSetPtr& S, const std::vector<PermChar>& chars, MatrixKind kind) {
  check_characters(S, chars);
  ConductorMatrix M;
  M.kind = kind;
  M.characters = chars;
  for (std::size_t c = 1; c < S->size(); ++c) {
    M.labels.push_back((*S)[c].label);
    M.classes.push_back(c);
  }
  M.entries.assign(chars.size(), RationalVector(M.cols()));
  M.partitions.assign(chars.size(), std::vector<Partition>(M.cols()));
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) M.partitions[i][j] = partition_of(*S, chars[i], M.classes[j]);
  return M;
}

}  // namespace detail

/// Cycle types of class representatives in each action (conductor entries left zero).
inline ConductorMatrix partition_matrix(const ClassSetPtr& S, const std::vector<PermChar>& chars) {
  return detail::class_matrix(S, chars, MatrixKind::Partition);
}

/// Tame conductors: degree minus number of parts, cross-checked against (a_τ, φ_i).
inline ConductorMatrix tame_matrix(const ClassSetPtr& S, const std::vector<PermChar>& chars) {
  auto M = detail::class_matrix(S, chars, MatrixKind::Tame);
  for (std::size_t j = 0; j < M.cols(); ++j) {
    auto a = tame_char(S, M.classes[j]);
    for (std::size_t i = 0; i < M.rows(); ++i) {
      const auto& lam = M.partitions[i][j];
      M.entries[i][j] = lam.total() - lam.count();
      if (M.entries[i][j] != conductor(a, chars[i]))
        throw Error(ErrorCode::IntegrityFailure, "tame entry mismatch at " + M.labels[j]);
    }
  }
  return M;
}

/// Preconductors: degree minus number of ones, cross-checked against (â_τ, φ_i).
inline ConductorMatrix broad_matrix(const ClassSetPtr& S, const std::vector<PermChar>& chars) {
  auto M = detail::class_matrix(S, chars, MatrixKind::Broad);
  for (std::size_t j = 0; j < M.cols(); ++j) {
    auto a = prechar(S, M.classes[j]);
    for (std::size_t i = 0; i < M.rows(); ++i) {
      const auto& lam = M.partitions[i][j];
      M.entries[i][j] = lam.total() - lam.ones();
      if (M.entries[i][j] != conductor(a, chars[i]))
        throw Error(ErrorCode::IntegrityFailure, "broad entry mismatch at " + M.labels[j]);
    }
  }
  return M;
}

struct LabeledSubgroup {
  std::string label;
  GroupPtr group;
};

/// Formal conductors (a_I, φ_i) = degree − #orbits of I. Orbit counts are
/// cross-checked directly for characters with an explicit point action.
inline ConductorMatrix inertial_matrix(const ClassSetPtr& S, const std::vector<PermChar>& chars,
                                       const std::vector<LabeledSubgroup>& subgroups, bool validate = true) {
  detail::check_characters(S, chars);
  ConductorMatrix M;
  M.kind = MatrixKind::Inertial;
  M.characters = chars;
  for (const auto& sg : subgroups) M.labels.push_back(sg.label);
  M.entries.assign(chars.size(), RationalVector(subgroups.size()));
  M.partitions.assign(chars.size(), std::vector<Partition>(subgroups.size()));
  for (std::size_t j = 0; j < subgroups.size(); ++j) {
    const auto& I = *subgroups[j].group;
    if (validate && !is_inertial(I)) throw Error(ErrorCode::NotInertial, "subgroup " + subgroups[j].label + " is not inertial");
    auto a = formal_artin(S, I);
    for (std::size_t i = 0; i < chars.size(); ++i) {
      M.entries[i][j] = conductor(a, chars[i]);
      if (!chars[i].points.empty()) {
        auto orbits = I.orbit_partition(chars[i].points);
        M.partitions[i][j] = orbits;
        if (M.entries[i][j] != orbits.total() - orbits.count())
          throw Error(ErrorCode::IntegrityFailure, "inertial entry mismatch at " + subgroups[j].label);
      }
    }
  }
  return M;
}

/// Inertial subgroup columns from a complete enumeration (trivial subgroup dropped).
inline std::vector<LabeledSubgroup> enumerated_inertial_subgroups(const FiniteGroup& G, std::size_t bound = kEnumerationBound) {
  std::vector<LabeledSubgroup> out;
  for (const auto& r : inertial_subgroups(G, bound)) {
    if (r.order == 1) continue;
    out.push_back({"I" + std::to_string(r.class_id) + "(" + std::to_string(r.order) + ")", record_group(G, r)});
  }
  return out;
}

enum class MethodVerdict { Proved, RefutedForMethod, Inconclusive };

inline const char* to_string(MethodVerdict v) {
  switch (v) {
    case MethodVerdict::Proved: return "proved";
    case MethodVerdict::RefutedForMethod: return "refuted-for-method";
    case MethodVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct ColumnResult {
  std::string label;
  RationalVector column;
  ConeCertificate certificate;
  bool short_circuit = false;  // prime order: â_τ is a positive multiple of a_τ
};

struct MethodResult {
  MethodVerdict verdict = MethodVerdict::Inconclusive;
  ConductorMatrix tame;
  ConductorMatrix tested;
  std::vector<ColumnResult> columns;

  std::vector<std::string> outside_labels() const {
    std::vector<std::string> out;
    for (const auto& c : columns)
      if (!c.certificate.inside()) out.push_back(c.label);
    return out;
  }
};

/// Broad method: proved iff every broad column lies in the tame cone.
inline MethodResult broad_method(const ClassSetPtr& S, const std::vector<PermChar>& chars) {
  MethodResult R;
  R.tame = tame_matrix(S, chars);
  R.tested = broad_matrix(S, chars);
  auto tcols = R.tame.columns();
  bool all_inside = true;
  for (std::size_t j = 0; j < R.tested.cols(); ++j) {
    ColumnResult col{R.tested.labels[j], R.tested.column(j), {}, false};
    long m = (*S)[R.tested.classes[j]].order;
    if (nt::is_prime(m)) {
      col.short_circuit = true;
      col.certificate.verdict = ConeVerdict::Inside;
      col.certificate.combination.assign(tcols.size(), Rational(0));
      col.certificate.combination[j] = make_rational(m, m - 1);
      if (!verify_certificate(col.certificate, col.column, tcols))
        throw Error(ErrorCode::IntegrityFailure, "prime-order broad column is not a multiple of its tame column");
    } else {
      col.certificate = cone_membership(col.column, tcols);
    }
    all_inside = all_inside && col.certificate.inside();
    R.columns.push_back(std::move(col));
  }
  R.verdict = all_inside ? MethodVerdict::Proved : MethodVerdict::Inconclusive;
  return R;
}

/// Inertial method over supplied subgroups. Proved needs a complete list.
inline MethodResult inertial_method(const ClassSetPtr& S, const std::vector<PermChar>& chars,
                                    const std::vector<LabeledSubgroup>& subgroups, bool complete, bool validate = true) {
  MethodResult R;
  R.tame = tame_matrix(S, chars);
  R.tested = inertial_matrix(S, chars, subgroups, validate);
  auto tcols = R.tame.columns();
  bool all_inside = true;
  for (std::size_t j = 0; j < R.tested.cols(); ++j) {
    ColumnResult col{R.tested.labels[j], R.tested.column(j), {}, false};
    col.certificate = cone_membership(col.column, tcols);
    all_inside = all_inside && col.certificate.inside();
    R.columns.push_back(std::move(col));
  }
  if (!all_inside)
    R.verdict = MethodVerdict::RefutedForMethod;
  else
    R.verdict = complete ? MethodVerdict::Proved : MethodVerdict::Inconclusive;
  return R;
}

struct Interval {
  Rational lo, hi;
  std::vector<std::string> lo_labels, hi_labels;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Projectivized columns c'_i = c_i / c_norm. For two rows an interval, for three
/// a convex polygon, otherwise only the point cloud.
struct ProjectiveHull {
  std::size_t normalizer = 0;
  std::vector<std::string> labels;
  std::vector<RationalVector> points;
  std::optional<Interval> interval;
  std::vector<RationalVector> polygon;  // counterclockwise, r = 3 only
  std::optional<Interval> mean_root;    // r = 2: interval rescaled by deg(norm)/deg(other)
};

namespace detail {

inline Rational cross(const RationalVector& o, const RationalVector& a, const RationalVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Andrew's monotone chain; collinear points dropped.
inline std::vector<RationalVector> convex_hull_2d(std::vector<RationalVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<RationalVector> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace detail

/// Membership in a convex polygon (boundary included).
inline bool polygon_contains(const std::vector<RationalVector>& poly, const RationalVector& p) {
  if (poly.empty()) return false;
  if (poly.size() == 1) return poly[0] == p;
  if (poly.size() == 2) {
    if (detail::cross(poly[0], poly[1], p) != 0) return false;
    return std::min(poly[0], poly[1]) <= p && p <= std::max(poly[0], poly[1]);
  }
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (detail::cross(poly[i], poly[(i + 1) % poly.size()], p) < 0) return false;
  return true;
}

inline RationalVector projectivize_column(const RationalVector& c, std::size_t normalizer) {
  if (c[normalizer] <= 0) throw Error(ErrorCode::NonPositiveNormalizer, "normalizer entry must be positive");
  RationalVector out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (i != normalizer) out.push_back(c[i] / c[normalizer]);
  return out;
}

inline ProjectiveHull projectivize(const ConductorMatrix& M, std::optional<std::size_t> normalizer_row = std::nullopt) {
  ProjectiveHull H;
  if (M.rows() == 0) throw Error(ErrorCode::InvalidParameters, "matrix has no rows");
  H.normalizer = normalizer_row.value_or(M.rows() - 1);
  if (H.normalizer >= M.rows()) throw Error(ErrorCode::InvalidParameters, "normalizer row out of range");
  H.labels = M.labels;
  for (std::size_t j = 0; j < M.cols(); ++j) {
    if (M.entries[H.normalizer][j] <= 0)
      throw Error(ErrorCode::NonPositiveNormalizer, "normalizer row vanishes at column " + M.labels[j]);
    H.points.push_back(projectivize_column(M.column(j), H.normalizer));
  }
  if (M.rows() == 2 && !H.points.empty()) {
    Interval I{H.points[0][0], H.points[0][0], {}, {}};
    for (const auto& p : H.points) {
      I.lo = std::min(I.lo, p[0]);
      I.hi = std::max(I.hi, p[0]);
    }
    for (std::size_t j = 0; j < H.points.size(); ++j) {
      if (H.points[j][0] == I.lo) I.lo_labels.push_back(H.labels[j]);
      if (H.points[j][0] == I.hi) I.hi_labels.push_back(H.labels[j]);
    }
    H.interval = I;
    std::size_t other = 1 - H.normalizer;
    Rational scale = make_rational(M.characters[H.normalizer].degree(), M.characters[other].degree());
    H.mean_root = Interval{I.lo * scale, I.hi * scale, I.lo_labels, I.hi_labels};
  }
  if (M.rows() == 3) H.polygon = detail::convex_hull_2d(H.points);
  return H;
}

/// Two-row interval test, independent of the LP.
inline bool interval_contains(const ProjectiveHull& H, const RationalVector& c) {
  if (!H.interval) throw Error(ErrorCode::InvalidParameters, "hull is not an interval");
  return H.interval->contains(projectivize_column(c, H.normalizer)[0]);
}

struct SplittingFieldBounds {
  Rational alpha_bar, omega_bar;
  Rational alpha, omega;  // unnormalized, against the regular character
  int max_fixed = 0;
  bool elusive = false;
  std::vector<std::string> omega_classes;
};

/// Comparison of the algebra of a faithful action with its splitting field:
/// ᾱ = 1 − fix/n and ω̄ = max_τ c̄_τ(φ)/((τ̄−1)/τ̄).
inline SplittingFieldBounds splitting_field_bounds(const ClassSetPtr& S, const PermChar& phi) {
  const auto& cls = *S;
  long n = phi.degree();
  long order = static_cast<long>(cls.group().order());
  SplittingFieldBounds B;
  if (cls.size() < 2) throw Error(ErrorCode::InvalidParameters, "trivial group has no comparison interval");
  B.elusive = true;
  bool first = true;
  for (std::size_t c = 1; c < cls.size(); ++c) {
    if (phi.chi[c] >= n) throw Error(ErrorCode::NotFaithful, "non-identity class " + cls[c].label + " acts trivially");
    auto lam = detail::partition_of(cls, phi, c);
    long tau = cls[c].order;
    B.max_fixed = std::max(B.max_fixed, lam.ones());
    bool semiregular = std::all_of(lam.parts.begin(), lam.parts.end(), [&](int p) { return p == tau; });
    if (semiregular) B.elusive = false;
    Rational mean = make_rational(lam.total() - lam.count(), n);
    Rational ratio = mean / make_rational(tau - 1, tau);
    if (first || ratio > B.omega_bar) {
      B.omega_bar = ratio;
      B.omega_classes.clear();
    }
    if (ratio == B.omega_bar) B.omega_classes.push_back(cls[c].label);
    first = false;
  }
  B.alpha_bar = 1 - make_rational(B.max_fixed, n);
  B.alpha = B.alpha_bar * make_rational(n, order);
  B.omega = B.omega_bar * make_rational(n, order);
  return B;
}

/// Restriction of the characters to a subgroup, for testing (I, V_I) directly.
inline std::vector<PermChar> pullback(const std::vector<PermChar>& chars, const ClassSetPtr& sub) {
  std::vector<PermChar> out;
  for (const auto& phi : chars) out.push_back(restrict_to(phi, sub));
  return out;
}

}  // namespace tamewild
