#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tamewild/classes.hpp"
#include "tamewild/error.hpp"
#include "tamewild/numtheory.hpp"
#include "tamewild/rational.hpp"

namespace tamewild {

/// Exact-rational function on G♯, bound to one class set by identity.
class ClassFunction {
 public:
  ClassFunction() = default;
  explicit ClassFunction(ClassSetPtr set) : set_(std::move(set)), values_(set_->size()) {}
  ClassFunction(ClassSetPtr set, RationalVector values) : set_(std::move(set)), values_(std::move(values)) {
    if (values_.size() != set_->size()) throw Error(ErrorCode::ClassSetMismatch, "value count differs from class count");
  }

  const ClassSetPtr& class_set() const { return set_; }
  const PowerClassSet& classes() const { return *set_; }
  std::size_t size() const { return values_.size(); }
  const RationalVector& values() const { return values_; }
  Rational& operator[](std::size_t c) { return values_[c]; }
  const Rational& operator[](std::size_t c) const { return values_[c]; }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q == 0; });
  }

  ClassFunction& operator+=(const ClassFunction& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  ClassFunction& operator-=(const ClassFunction& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  ClassFunction& operator*=(const Rational& s) {
    for (auto& v : values_) v *= s;
    return *this;
  }
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const Rational& s, ClassFunction a) { return a *= s; }

  bool operator==(const ClassFunction& o) const { return set_ == o.set_ && values_ == o.values_; }

  void check_same(const ClassFunction& o) const {
    if (set_ != o.set_) throw Error(ErrorCode::ClassSetMismatch, "class functions live on different class sets");
  }

 private:
  ClassSetPtr set_;
  RationalVector values_;
};

/// Character of a G-set. When the set is an invariant subset of the group's own
/// points, `points` records it; characters built from formulas leave it empty.
struct PermChar {
  std::string name;
  std::string origin;  // "action", "coset", "sum", "images"
  ClassFunction chi;
  std::vector<Point> points;

  long degree() const { return static_cast<long>(to_int64(chi[0])); }
  const ClassSetPtr& class_set() const { return chi.class_set(); }
};

inline Rational inner_product(const ClassFunction& f1, const ClassFunction& f2) {
  f1.check_same(f2);
  const auto& S = f1.classes();
  Rational sum = 0;
  for (std::size_t c = 0; c < S.size(); ++c) sum += Rational(static_cast<long>(S[c].size)) * f1[c] * f2[c];
  return sum / Rational(static_cast<long>(S.group().order()));
}

inline ClassFunction constant_function(const ClassSetPtr& S, const Rational& value) {
  return ClassFunction(S, RationalVector(S->size(), value));
}

inline void validate_perm_char(const PermChar& p) {
  const auto& v = p.chi.values();
  for (const auto& x : v)
    if (!is_integer(x) || x < 0 || x > v[0])
      throw Error(ErrorCode::NotAnAction, "values of '" + p.name + "' are not fixed-point counts");
}

/// Character of the action on an invariant subset of the group's points.
inline PermChar perm_char_from_action(const ClassSetPtr& S, std::vector<Point> points, std::string name = {}) {
  const auto& G = S->group();
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<bool> in(G.degree(), false);
  for (Point x : points) {
    if (x >= G.degree()) throw Error(ErrorCode::NotAnAction, "action point out of range");
    in[x] = true;
  }
  for (const auto& g : G.generators())
    for (Point x : points)
      if (!in[g(x)]) throw Error(ErrorCode::NotAnAction, "point set is not invariant under the group");
  ClassFunction chi(S);
  for (std::size_t c = 0; c < S->size(); ++c)
    chi[c] = fixed_points(G.element((*S)[c].representative), points);
  if (points.empty()) chi[0] = 0;
  return PermChar{std::move(name), "action", std::move(chi), std::move(points)};
}

inline PermChar natural_char(const ClassSetPtr& S, std::string name = {}) {
  std::vector<Point> pts(S->group().degree());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<Point>(i);
  return perm_char_from_action(S, std::move(pts), std::move(name));
}

/// Character of an action given by the images of the group's generators on m points.
/// The assignment must extend to a homomorphism; this is checked by closing the
/// diagonal group and comparing orders.
inline PermChar perm_char_from_images(const ClassSetPtr& S, const std::vector<Permutation>& images,
                                      std::string name = {}) {
  const auto& G = S->group();
  const auto& gens = G.generators();
  if (images.size() != gens.size()) throw Error(ErrorCode::NotAnAction, "need one image per generator");
  std::size_t n = G.degree();
  std::size_t m = images.empty() ? 0 : images[0].degree();
  std::vector<Permutation> diag;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (images[i].degree() != m) throw Error(ErrorCode::DegreeMismatch, "image degrees differ");
    std::vector<Point> im(n + m);
    for (std::size_t x = 0; x < n; ++x) im[x] = gens[i](x);
    for (std::size_t x = 0; x < m; ++x) im[n + x] = static_cast<Point>(n + images[i](x));
    diag.push_back(Permutation(std::move(im)));
  }
  GroupPtr D;
  try {
    D = FiniteGroup::closure(n + m, diag, G.order());
  } catch (const Error&) {
    throw Error(ErrorCode::NotAnAction, "generator images do not define an action");
  }
  if (D->order() != G.order()) throw Error(ErrorCode::NotAnAction, "generator images do not define an action");
  ClassFunction chi(S);
  std::vector<bool> done(S->size(), false);
  for (std::size_t i = 0; i < D->order(); ++i) {
    auto e = D->element(i);
    auto g = G.index_of(e.first(n));
    auto c = S->class_of(*g);
    if (*g != (*S)[c].representative || done[c]) continue;
    done[c] = true;
    int fix = 0;
    for (std::size_t x = 0; x < m; ++x) fix += e[n + x] == n + x;
    chi[c] = fix;
  }
  PermChar p{std::move(name), "images", std::move(chi), {}};
  validate_perm_char(p);
  return p;
}

/// φ_{G/H}(σ) = |G| |C_σ ∩ H| / (|H| |C_σ|).
inline PermChar perm_char_coset(const ClassSetPtr& S, const FiniteGroup& H, std::string name = {}) {
  auto counts = class_intersections(*S, H);
  ClassFunction chi(S);
  Rational ratio(static_cast<long>(S->group().order()), static_cast<long>(H.order()));
  ratio.canonicalize();
  for (std::size_t c = 0; c < S->size(); ++c)
    chi[c] = ratio * Rational(static_cast<long>(counts[c])) / Rational(static_cast<long>((*S)[c].size));
  PermChar p{std::move(name), "coset", std::move(chi), {}};
  validate_perm_char(p);
  return p;
}

inline PermChar regular_char(const ClassSetPtr& S) {
  ClassFunction chi(S);
  chi[0] = static_cast<long>(S->group().order());
  return PermChar{"regular", "coset", std::move(chi), {}};
}

inline PermChar sum(const PermChar& a, const PermChar& b) {
  PermChar out{a.name + "+" + b.name, "sum", a.chi + b.chi, {}};
  if (!a.points.empty() && !b.points.empty()) {
    std::vector<Point> merged = a.points;
    merged.insert(merged.end(), b.points.begin(), b.points.end());
    std::sort(merged.begin(), merged.end());
    if (std::adjacent_find(merged.begin(), merged.end()) == merged.end()) out.points = std::move(merged);
  }
  return out;
}

/// a_H = φ_G − φ_{G/H}.
inline ClassFunction formal_artin(const ClassSetPtr& S, const FiniteGroup& H) {
  return regular_char(S).chi - perm_char_coset(S, H).chi;
}

inline GroupPtr cyclic_subgroup(const PowerClassSet& S, std::size_t cls) {
  const auto& G = S.group();
  return FiniteGroup::closure(G.degree(), {G.element_at(S[cls].representative)}, G.order());
}

/// Tame character a_τ: the formal Artin character of ⟨g⟩ for g in τ.
inline ClassFunction tame_char(const ClassSetPtr& S, std::size_t tau) {
  if (tau == 0) return ClassFunction(S);
  return formal_artin(S, *cyclic_subgroup(*S, tau));
}

/// Precharacter â_τ: |G| at e, −|G|/|C_τ| at τ.
inline ClassFunction prechar(const ClassSetPtr& S, std::size_t tau) {
  ClassFunction f(S);
  if (tau == 0) return f;
  Rational n(static_cast<long>(S->group().order()));
  f[0] = n;
  f[tau] = -n / Rational(static_cast<long>((*S)[tau].size));
  return f;
}

/// a_τ = Σ_{k|τ̄} φ(τ̄/k)/τ̄ · â_{τ^k}.
inline ClassFunction tame_from_prechars(const ClassSetPtr& S, std::size_t tau) {
  ClassFunction f(S);
  long m = (*S)[tau].order;
  for (auto k : nt::divisors(m)) {
    Rational coeff(nt::euler_phi(m / k), m);
    coeff.canonicalize();
    f += coeff * prechar(S, S->power_map(tau, k));
  }
  return f;
}

/// â_τ = Σ_{k|τ̄} τ̄ μ(k) / (φ(τ̄) k) · a_{τ^k}.
inline ClassFunction prechar_from_tames(const ClassSetPtr& S, std::size_t tau) {
  ClassFunction f(S);
  long m = (*S)[tau].order;
  for (auto k : nt::divisors(m)) {
    int mu = nt::mobius(k);
    if (mu == 0) continue;
    Rational coeff(mu * m, nt::euler_phi(m) * k);
    coeff.canonicalize();
    f += coeff * tame_char(S, S->power_map(tau, k));
  }
  return f;
}

enum class ConvertDirection { TameToPre, PreToTame };

inline ClassFunction convert(const ClassSetPtr& S, std::size_t tau, ConvertDirection dir) {
  return dir == ConvertDirection::TameToPre ? tame_from_prechars(S, tau) : prechar_from_tames(S, tau);
}

inline Rational conductor(const ClassFunction& c, const PermChar& phi) { return inner_product(c, phi.chi); }

inline Rational mean_conductor(const ClassFunction& c, const PermChar& phi) {
  return conductor(c, phi) / phi.chi[0];
}

/// Cycle type of class σ on the G-set with character φ, from power maps:
/// m_d = (1/d) Σ_{e|d} μ(d/e) φ(σ^e).
inline Partition cycle_type_from_char(const ClassFunction& phi, std::size_t cls) {
  const auto& S = phi.classes();
  long m = S[cls].order;
  std::vector<int> parts;
  for (auto d : nt::divisors(m)) {
    Rational count = 0;
    for (auto e : nt::divisors(d)) count += Rational(nt::mobius(d / e)) * phi[S.power_map(cls, e)];
    count /= Rational(d);
    if (!is_integer(count) || count < 0) throw Error(ErrorCode::NotAnAction, "character is not a permutation character");
    for (long i = 0; i < to_int64(count); ++i) parts.push_back(static_cast<int>(d));
  }
  return Partition::from_sizes(std::move(parts));
}

/// Restriction to a subgroup: f_I(σ) = f(i(σ)).
inline ClassFunction restrict_to(const ClassFunction& f, const ClassSetPtr& sub) {
  auto m = class_map(*sub, f.classes());
  ClassFunction out(sub);
  for (std::size_t c = 0; c < sub->size(); ++c) out[c] = f[m[c]];
  return out;
}

inline PermChar restrict_to(const PermChar& p, const ClassSetPtr& sub) {
  return PermChar{p.name, p.origin, restrict_to(p.chi, sub), p.points};
}

/// Induction from I to G: (Ind f)(σ) = |G| / (|I| |C_σ|) Σ_{σ'↦σ} |C_σ'| f(σ').
/// Satisfies (Ind f, χ)_G = (f, χ|_I)_I.
inline ClassFunction induce(const ClassFunction& f, const ClassSetPtr& ambient) {
  const auto& sub = f.classes();
  auto m = class_map(sub, *ambient);
  ClassFunction out(ambient);
  for (std::size_t c = 0; c < sub.size(); ++c) out[m[c]] += Rational(static_cast<long>(sub[c].size)) * f[c];
  Rational scale(static_cast<long>(ambient->group().order()), static_cast<long>(sub.group().order()));
  scale.canonicalize();
  for (std::size_t c = 0; c < ambient->size(); ++c)
    out[c] = out[c] * scale / Rational(static_cast<long>((*ambient)[c].size));
  return out;
}

}  // namespace tamewild
