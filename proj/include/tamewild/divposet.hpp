#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tamewild/classes.hpp"
#include "tamewild/classfun.hpp"
#include "tamewild/error.hpp"
#include "tamewild/rational.hpp"

namespace tamewild {

enum class ClassKind { U, N };

inline const char* to_string(ClassKind k) { return k == ClassKind::U ? "U" : "N"; }

/// Divisibility poset on G♯ with weights d(τ,σ) = [σ]/[τ] and the integers u_{G,σ}.
/// The u-recursion runs over all of G♯; index 0 (identity) is kept but rendering
/// omits it unless asked.
struct DivPoset {
  ClassSetPtr classes;
  std::vector<long> u;                                       // indexed by class, identity included
  std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;  // (σ, τ) with σ^p = τ, p prime
  std::vector<bool> maximal;                                 // over G♯⁰
  std::vector<ClassKind> kind;                               // over G♯⁰; identity marked U

  Rational weight(std::size_t tau, std::size_t sigma) const {
    Rational w(static_cast<long>((*classes)[sigma].cyclic_count), static_cast<long>((*classes)[tau].cyclic_count));
    w.canonicalize();
    return w;
  }

  std::vector<std::size_t> n_classes() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 1; c < kind.size(); ++c)
      if (kind[c] == ClassKind::N) out.push_back(c);
    return out;
  }
};

inline DivPoset build_poset(const ClassSetPtr& S) {
  DivPoset P;
  P.classes = S;
  std::size_t n = S->size();
  std::vector<Rational> u(n);
  // Classes are sorted by order, so every proper multiple of τ has a larger index.
  for (std::size_t t = n; t-- > 0;) {
    Rational acc = 1;
    for (std::size_t s = t + 1; s < n; ++s)
      if (S->divides(t, s)) acc -= P.weight(t, s) * u[s];
    u[t] = acc;
  }
  P.u.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_integer(u[c])) throw Error(ErrorCode::IntegrityFailure, "non-integral u coefficient");
    P.u[c] = to_int64(u[c]);
  }
  for (std::size_t s = 1; s < n; ++s)
    for (auto p : nt::prime_factors((*S)[s].order)) P.covers.emplace_back(s, S->power_map(s, p));

  P.maximal.assign(n, false);
  for (std::size_t s = 1; s < n; ++s) {
    bool top = true;
    for (std::size_t o = s + 1; o < n && top; ++o)
      if (S->divides(s, o)) top = false;
    P.maximal[s] = top;
  }
  P.kind.assign(n, ClassKind::U);
  for (std::size_t t = 1; t < n; ++t) {
    int above = 0;
    bool unit = false;
    for (std::size_t s = 1; s < n; ++s) {
      if (!P.maximal[s] || !S->divides(t, s)) continue;
      ++above;
      unit = P.weight(t, s) == 1;
    }
    P.kind[t] = (above == 1 && unit) ? ClassKind::U : ClassKind::N;
  }

  // Consequences of the definitions, asserted rather than assumed.
  for (std::size_t t = 1; t < n; ++t) {
    if (P.maximal[t] && (P.kind[t] != ClassKind::U || P.u[t] != 1))
      throw Error(ErrorCode::IntegrityFailure, "maximal class must be U with u = 1");
    if (!P.maximal[t] && P.kind[t] == ClassKind::U && P.u[t] != 0)
      throw Error(ErrorCode::IntegrityFailure, "non-maximal U-class must have u = 0");
  }
  return P;
}

inline ClassKind classify_class(const DivPoset& P, std::size_t tau) { return P.kind.at(tau); }

/// N-classes that divide no other N-class.
inline std::vector<std::size_t> maximal_n_classes(const DivPoset& P) {
  std::vector<std::size_t> out;
  const auto& S = *P.classes;
  for (auto t : P.n_classes()) {
    bool top = true;
    for (auto s : P.n_classes())
      if (s != t && S.divides(t, s)) top = false;
    if (top) out.push_back(t);
  }
  return out;
}

inline bool is_U_group(const DivPoset& P) { return P.n_classes().empty(); }
inline bool is_U_group(const ClassSetPtr& S) { return is_U_group(build_poset(S)); }

/// Coefficients of a_I in the tame basis {a_τ : τ ∈ G♯⁰}:
/// a_I = (1/|I|) Σ_{σ ∈ I♯⁰} u_{I,σ} [σ] σ̄ a_{i(σ)}.
inline RationalVector expand_formal_artin(const ClassSetPtr& ambient, const ClassSetPtr& sub) {
  auto m = class_map(*sub, *ambient);
  auto P = build_poset(sub);
  RationalVector coeff(ambient->size());
  Rational inv_order(1, static_cast<long>(sub->group().order()));
  inv_order.canonicalize();
  for (std::size_t s = 1; s < sub->size(); ++s) {
    const auto& pc = (*sub)[s];
    coeff[m[s]] += inv_order * Rational(P.u[s]) * Rational(static_cast<long>(pc.cyclic_count)) * Rational(pc.order);
  }
  return coeff;
}

inline ClassFunction combine_tame(const ClassSetPtr& S, const RationalVector& coeff) {
  ClassFunction f(S);
  for (std::size_t c = 1; c < S->size(); ++c)
    if (coeff[c] != 0) f += coeff[c] * tame_char(S, c);
  return f;
}

struct RenderOptions {
  bool include_identity = false;
  std::string name = "G";
};

inline std::string node_text(const PowerClass& pc) {
  return pc.label + " (" + pc.cycle_type.compact() + ")";
}

inline std::string render_dot(const DivPoset& P, const RenderOptions& opt = {}) {
  const auto& S = *P.classes;
  std::ostringstream os;
  os << "digraph \"" << opt.name << "\" {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  std::size_t first = opt.include_identity ? 0 : 1;
  for (std::size_t c = first; c < S.size(); ++c) {
    os << "  c" << c << " [label=\"" << node_text(S[c]) << "\\nu=" << P.u[c] << "\"";
    if (c > 0 && P.kind[c] == ClassKind::N) os << ", shape=box";
    os << "];\n";
  }
  for (auto [s, t] : P.covers) {
    if (t == 0 && !opt.include_identity) continue;
    os << "  c" << s << " -> c" << t;
    auto w = P.weight(t, s);
    if (w != 1) os << " [label=\"" << w.get_str() << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string render_text(const DivPoset& P, const RenderOptions& opt = {}) {
  const auto& S = *P.classes;
  std::ostringstream os;
  os << "class\tcycle_type\torder\tsize\tcyclic\tu\tkind\n";
  std::size_t first = opt.include_identity ? 0 : 1;
  for (std::size_t c = first; c < S.size(); ++c) {
    const auto& pc = S[c];
    os << pc.label << '\t' << pc.cycle_type.compact() << '\t' << pc.order << '\t' << pc.size << '\t' << pc.cyclic_count
       << '\t' << P.u[c] << '\t' << (c == 0 ? "-" : to_string(P.kind[c])) << '\n';
  }
  os << "edges:";
  for (auto [s, t] : P.covers) {
    if (t == 0 && !opt.include_identity) continue;
    os << ' ' << S[s].label << "->" << S[t].label;
    auto w = P.weight(t, s);
    if (w != 1) os << ':' << w.get_str();
  }
  os << '\n';
  return os.str();
}

}  // namespace tamewild
