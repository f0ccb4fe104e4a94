#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tamewild/error.hpp"
#include "tamewild/group.hpp"
#include "tamewild/permutation.hpp"
#include "tamewild/rational.hpp"

namespace tamewild {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << j.dump(1) << "\n";
}

inline Json to_json(const Permutation& g) {
  Json a = Json::array();
  for (auto x : g.images()) a.push_back(x);
  return a;
}

inline Json to_json(const std::vector<Permutation>& gs) {
  Json a = Json::array();
  for (const auto& g : gs) a.push_back(to_json(g));
  return a;
}

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

/// A permutation as an image list (0-based) or as cycle notation text "(0,1,2)(3,4)".
inline Permutation permutation_from_json(const Json& j, std::size_t degree) {
  try {
    if (j.is_string()) {
      std::vector<std::vector<int>> cycles;
      const std::string s = j.get<std::string>();
      std::vector<int> cur;
      bool open = false;
      std::string num;
      for (char ch : s) {
        if (ch == '(') {
          open = true;
          cur.clear();
        } else if (ch == ',' || ch == ')') {
          if (!num.empty()) cur.push_back(std::stoi(num));
          num.clear();
          if (ch == ')') {
            if (!open) throw Error(ErrorCode::Parse, "unbalanced cycle text '" + s + "'");
            cycles.push_back(cur);
            open = false;
          }
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
          num += ch;
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
          throw Error(ErrorCode::Parse, "bad cycle text '" + s + "'");
        }
      }
      if (open) throw Error(ErrorCode::Parse, "unbalanced cycle text '" + s + "'");
      for (const auto& c : cycles)
        for (int x : c)
          if (x < 0 || static_cast<std::size_t>(x) >= degree) throw Error(ErrorCode::Parse, "cycle point out of range");
      return Permutation::from_cycles(degree, cycles);
    }
    std::vector<Point> im;
    for (const auto& x : j) im.push_back(x.get<Point>());
    if (im.size() != degree) throw Error(ErrorCode::DegreeMismatch, "permutation length differs from degree");
    return Permutation(std::move(im));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad permutation: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::Parse, "bad permutation");
  }
}

inline std::vector<Permutation> permutations_from_json(const Json& j, std::size_t degree) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "expected a list of permutations");
  std::vector<Permutation> out;
  for (const auto& x : j) out.push_back(permutation_from_json(x, degree));
  return out;
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::Parse, "expected a rational as integer or \"p/q\" string");
}

/// {"degree": n, "generators": [...], "name": optional, "bound": optional}.
inline GroupPtr group_from_json(const Json& j) {
  if (!j.contains("degree") || !j.contains("generators")) throw Error(ErrorCode::Parse, "group spec needs degree and generators");
  auto degree = j.at("degree").get<std::size_t>();
  auto gens = permutations_from_json(j.at("generators"), degree);
  std::size_t bound = j.value("bound", static_cast<std::size_t>(FiniteGroup::kDefaultBound));
  return FiniteGroup::closure(degree, gens, bound, j.value("name", std::string{}));
}

}  // namespace tamewild
