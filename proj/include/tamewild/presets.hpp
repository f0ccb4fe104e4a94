#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tamewild/classes.hpp"
#include "tamewild/classfun.hpp"
#include "tamewild/conegeom.hpp"
#include "tamewild/json_io.hpp"
#include "tamewild/polyfp.hpp"
#include "tamewild/wildartin.hpp"

#ifndef TAMEWILD_DATA_DIR
#define TAMEWILD_DATA_DIR "data"
#endif

namespace tamewild {

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"S5",  "A5",     "S6",    "Aff3F2", "WE6",   "M9",    "M9.2",   "M10",    "M10.2",
                                                 "M11", "M12",    "Q8",    "Q8hat",  "12T46", "12T47", "12T84",  "12T181", "12T272",
                                                 "12T112"};
  return names;
}

/// Preset directory: $TAMEWILD_PRESET_DIR, else the data directory fixed at build time.
inline std::string default_preset_dir() {
  if (const char* env = std::getenv("TAMEWILD_PRESET_DIR"); env && *env) return env;
  return std::string(TAMEWILD_DATA_DIR) + "/presets";
}

inline std::string default_fixture_dir() { return std::string(TAMEWILD_DATA_DIR) + "/fixtures"; }

struct Preset {
  std::string name;
  std::string provenance;
  GroupPtr group;
  ClassSetPtr classes;
  std::vector<std::string> action_names;
  std::map<std::string, std::vector<Permutation>> actions;
  std::map<std::string, GroupPtr> subgroups;
  Json expect;

  const std::vector<Permutation>& action(const std::string& n) const {
    auto it = actions.find(n);
    if (it == actions.end()) throw Error(ErrorCode::UnknownPreset, name + " has no action '" + n + "'");
    return it->second;
  }

  GroupPtr subgroup(const std::string& n) const {
    auto it = subgroups.find(n);
    if (it == subgroups.end()) throw Error(ErrorCode::UnknownPreset, name + " has no subgroup '" + n + "'");
    return it->second;
  }

  /// A registered action, a '+'-separated sum of them, or "regular".
  PermChar character(const std::string& spec) const {
    auto plus = spec.find('+');
    if (plus != std::string::npos) {
      auto out = sum(character(spec.substr(0, plus)), character(spec.substr(plus + 1)));
      out.name = spec;
      return out;
    }
    if (spec == "regular") return regular_char(classes);
    return perm_char_from_images(classes, action(spec), spec);
  }

  std::vector<PermChar> characters(const std::vector<std::string>& specs) const {
    std::vector<PermChar> out;
    for (const auto& s : specs) out.push_back(character(s));
    return out;
  }
};

using PresetPtr = std::shared_ptr<const Preset>;

namespace detail {

inline void integrity(bool ok, const std::string& preset, const std::string& what) {
  if (!ok) throw Error(ErrorCode::IntegrityFailure, "preset " + preset + ": " + what);
}

inline PresetPtr read_preset(const std::string& name, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::path base = fs::path(dir) / name;
  if (!fs::is_directory(base)) throw Error(ErrorCode::Io, "preset directory '" + base.string() + "' is missing");
  auto gj = read_json_file((base / "group.json").string());
  auto aj = read_json_file((base / "actions.json").string());
  auto ej = read_json_file((base / "expect.json").string());

  auto P = std::make_shared<Preset>();
  P->name = name;
  P->provenance = gj.value("provenance", "");
  P->expect = ej;
  std::size_t order = ej.at("order").get<std::size_t>();
  auto degree = gj.at("degree").get<std::size_t>();
  try {
    P->group = FiniteGroup::closure(degree, permutations_from_json(gj.at("generators"), degree), order, name);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BoundExceeded) integrity(false, name, "group order exceeds the expected " + std::to_string(order));
    throw;
  }
  integrity(P->group->order() == order, name, "order " + std::to_string(P->group->order()) + " != " + std::to_string(order));
  P->classes = power_classes(P->group);
  const auto& S = *P->classes;
  integrity(S.size() - 1 == ej.at("classes").get<std::size_t>(), name, "class count differs");
  if (ej.contains("class_fingerprint")) {
    std::vector<std::string> fp;
    for (std::size_t c = 1; c < S.size(); ++c) fp.push_back(std::to_string(S[c].order) + ":" + std::to_string(S[c].size));
    integrity(fp == ej.at("class_fingerprint").get<std::vector<std::string>>(), name, "class fingerprint differs");
  }

  for (const auto& a : aj.at("actions")) {
    auto an = a.at("name").get<std::string>();
    auto ad = a.at("degree").get<std::size_t>();
    auto images = permutations_from_json(a.at("images"), ad);
    integrity(images.size() == P->group->generators().size(), name, an + " needs one image per generator");
    try {
      perm_char_from_images(P->classes, images, an);
    } catch (const Error& e) {
      integrity(false, name, an + " is not an action: " + e.what());
    }
    auto img = FiniteGroup::closure(ad, images, order);
    if (ej.contains("actions") && ej["actions"].contains(an)) {
      const auto& ex = ej["actions"][an];
      integrity(ex.value("degree", ad) == ad, name, an + " degree differs");
      if (ex.contains("transitive"))
        integrity(ex["transitive"].get<bool>() == (img->orbit_partition().count() == 1), name, an + " transitivity differs");
      if (ex.contains("faithful"))
        integrity(ex["faithful"].get<bool>() == (img->order() == order), name, an + " faithfulness differs");
    }
    P->action_names.push_back(an);
    P->actions[an] = std::move(images);
  }
  if (gj.contains("subgroups")) {
    for (const auto& [sn, gens] : gj["subgroups"].items()) {
      auto perms = permutations_from_json(gens, degree);
      for (const auto& g : perms) integrity(P->group->contains(g), name, "subgroup " + sn + " leaves the group");
      auto H = P->group->subgroup(perms, sn);
      if (ej.contains("subgroup_orders") && ej["subgroup_orders"].contains(sn))
        integrity(H->order() == ej["subgroup_orders"][sn].get<std::size_t>(), name, "subgroup " + sn + " order differs");
      P->subgroups[sn] = H;
    }
  }
  return P;
}

}  // namespace detail

/// Loads and self-checks a registered preset. Results are cached per directory.
inline PresetPtr load_preset(const std::string& name, const std::string& dir = default_preset_dir()) {
  const auto& names = preset_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw Error(ErrorCode::UnknownPreset, "unknown preset '" + name + "'");
  static std::mutex mu;
  static std::map<std::string, PresetPtr> cache;
  std::string key = dir + "\n" + name;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto P = detail::read_preset(name, dir);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, P).first->second;
}

/// Group source in a spec or fixture: {"preset": name} or an inline group spec.
struct GroupSource {
  PresetPtr preset;
  GroupPtr group;
  ClassSetPtr classes;
};

inline GroupSource resolve_group(const Json& j, const std::string& preset_dir = default_preset_dir()) {
  GroupSource out;
  if (j.is_string() || j.contains("preset")) {
    out.preset = load_preset(j.is_string() ? j.get<std::string>() : j.at("preset").get<std::string>(), preset_dir);
    out.group = out.preset->group;
    out.classes = out.preset->classes;
  } else {
    out.group = group_from_json(j);
    out.classes = power_classes(out.group);
  }
  return out;
}

/// Explicit subgroup list, e.g. inertia groups for the inertial method.
struct SubgroupFile {
  GroupSource source;
  bool complete = false;
  std::vector<LabeledSubgroup> subgroups;
};

inline SubgroupFile load_subgroup_file(const std::string& path, const std::string& preset_dir = default_preset_dir()) {
  auto j = read_json_file(path);
  SubgroupFile f;
  f.source = resolve_group(j.at("group"), preset_dir);
  f.complete = j.value("complete", false);
  for (const auto& s : j.at("subgroups")) {
    auto gens = permutations_from_json(s.at("generators"), f.source.group->degree());
    for (const auto& g : gens)
      if (!f.source.group->contains(g)) throw Error(ErrorCode::NotASubgroup, "subgroup generator outside the group");
    auto label = s.value("name", "I" + std::to_string(f.subgroups.size()));
    f.subgroups.push_back({label, f.source.group->subgroup(gens, label)});
  }
  return f;
}

/// Slope chain fixture. The decomposition group is kept for provenance only.
struct ChainFile {
  GroupSource source;
  SlopeChain chain;
  GroupPtr decomposition;
  std::vector<Rational> slopes;
  std::vector<std::string> characters;
};

inline ChainFile load_chain_file(const std::string& path, const std::string& preset_dir = default_preset_dir()) {
  auto j = read_json_file(path);
  ChainFile f;
  f.source = resolve_group(j.at("group"), preset_dir);
  const auto& G = *f.source.group;
  auto sub = [&](const Json& gens) {
    auto perms = permutations_from_json(gens, G.degree());
    for (const auto& g : perms)
      if (!G.contains(g)) throw Error(ErrorCode::NotASubgroup, "chain generator outside the group");
    return G.subgroup(perms);
  };
  f.chain.ambient = f.source.classes;
  f.chain.inertia = sub(j.at("inertia"));
  f.chain.validation = parse_validation(j.value("validation", "strict"));
  for (const auto& lvl : j.at("levels")) f.chain.levels.push_back({sub(lvl.at("generators")), rational_from_json(lvl.at("slope"))});
  if (j.contains("decomposition")) f.decomposition = sub(j["decomposition"]);
  if (j.contains("slopes"))
    for (const auto& s : j["slopes"]) f.slopes.push_back(rational_from_json(s));
  if (j.contains("characters")) f.characters = j["characters"].get<std::vector<std::string>>();
  return f;
}

/// Polynomial fixture: {"coeffOrder": "ascending" | "descending", "coefficients": [...]} or {"text": "..."}.
inline IntPolynomial polynomial_from_json(const Json& j) {
  if (j.contains("text")) return parse_polynomial(j["text"].get<std::string>());
  auto order = j.at("coeffOrder").get<std::string>();
  auto c = j.at("coefficients").get<std::vector<std::int64_t>>();
  if (order == "descending")
    std::reverse(c.begin(), c.end());
  else if (order != "ascending")
    throw Error(ErrorCode::Parse, "coeffOrder must be ascending or descending");
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace tamewild
