#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "tamewild/error.hpp"

namespace tamewild {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw Error(ErrorCode::InvalidParameters, "zero denominator");
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

/// Parses "p/q", "p", or a finite decimal such as "2.5".
inline Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty rational");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw Error(ErrorCode::Parse, "bad rational '" + text + "'");
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::string den = "1" + std::string(s.size() - dot - 1, '0');
    s = digits + "/" + den;
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::Parse, "bad rational '" + text + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw Error(ErrorCode::InvalidParameters, "not a machine integer: " + q.get_str());
  return q.get_num().get_si();
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace tamewild
