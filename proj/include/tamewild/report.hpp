#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tamewild/actions.hpp"
#include "tamewild/conegeom.hpp"
#include "tamewild/divposet.hpp"
#include "tamewild/families.hpp"
#include "tamewild/presets.hpp"
#include "tamewild/svg.hpp"
#include "tamewild/wildartin.hpp"

namespace tamewild {

inline constexpr int kExitProved = 0;
inline constexpr int kExitInconclusive = 10;
inline constexpr int kExitRefuted = 20;
inline constexpr int kExitSpecError = 2;
inline constexpr int kExitInvalidChain = 3;
inline constexpr const char* kReportSchema = "tamewild.report/1";

/// Where the group comes from: a preset, a group-spec file, or a named family.
struct GroupRef {
  std::string preset;
  std::string group_file;
  std::string family;
  std::map<std::string, int> params;
};

struct AnalysisSpec {
  GroupRef group;
  std::vector<std::string> chars;
  std::string method = "broad";  // broad | inertial | both
  std::string inertial = "enumerate";  // enumerate | file:PATH
  std::size_t order_limit = kEnumerationBound;
  std::optional<std::string> normalizer;
  bool projectivize = true;
  bool mean_root = false;
  bool verbose = false;
};

/// A group with its class set and every named action available for characters.
struct AnalysisContext {
  std::string name;
  GroupPtr group;
  ClassSetPtr classes;
  PresetPtr preset;
  std::map<std::string, std::vector<Permutation>> actions;

  PermChar character(const std::string& spec) const {
    auto plus = spec.find('+');
    if (plus != std::string::npos) {
      auto out = sum(character(spec.substr(0, plus)), character(spec.substr(plus + 1)));
      out.name = spec;
      return out;
    }
    if (spec == "regular") return regular_char(classes);
    if (spec == "natural") return natural_char(classes, "natural");
    auto it = actions.find(spec);
    if (it == actions.end()) throw Error(ErrorCode::Parse, "unknown character '" + spec + "' for " + name);
    return perm_char_from_images(classes, it->second, spec);
  }
};

/// Group-spec file: {"degree", "generators", "name"?, "actions": [{"name","images"}]?, "cosets": [{"name","generators"}]?}.
inline AnalysisContext context_from_group_json(const Json& j) {
  AnalysisContext c;
  c.group = group_from_json(j);
  c.name = j.value("name", std::string("G"));
  c.classes = power_classes(c.group);
  if (j.contains("actions"))
    for (const auto& a : j["actions"]) {
      auto an = a.at("name").get<std::string>();
      c.actions[an] = permutations_from_json(a.at("images"), a.at("degree").get<std::size_t>());
    }
  if (j.contains("cosets"))
    for (const auto& s : j["cosets"]) {
      auto gens = permutations_from_json(s.at("generators"), c.group->degree());
      for (const auto& g : gens)
        if (!c.group->contains(g)) throw Error(ErrorCode::NotASubgroup, "coset subgroup generator outside the group");
      c.actions[s.at("name").get<std::string>()] = coset_action(*c.group, *c.group->subgroup(gens));
    }
  return c;
}

inline AnalysisContext make_context(const GroupRef& ref) {
  int sources = !ref.preset.empty() + !ref.group_file.empty() + !ref.family.empty();
  if (sources != 1) throw Error(ErrorCode::Parse, "give exactly one of --preset, --group, --family");
  if (!ref.preset.empty()) {
    AnalysisContext c;
    c.preset = load_preset(ref.preset);
    c.name = ref.preset;
    c.group = c.preset->group;
    c.classes = c.preset->classes;
    c.actions = c.preset->actions;
    return c;
  }
  if (!ref.group_file.empty()) return context_from_group_json(read_json_file(ref.group_file));
  AnalysisContext c;
  c.group = families::make_family(ref.family, ref.params);
  c.name = c.group->name();
  c.classes = power_classes(c.group);
  c.actions["natural"] = c.group->generators();
  return c;
}

namespace report {

inline Json rationals(const RationalVector& v) { return to_json(v); }

inline Json matrix(const ConductorMatrix& M) {
  Json j;
  j["kind"] = to_string(M.kind);
  Json names = Json::array();
  for (const auto& c : M.characters) names.push_back(c.name);
  j["characters"] = names;
  j["labels"] = M.labels;
  Json rows = Json::array();
  for (const auto& r : M.entries) rows.push_back(rationals(r));
  j["entries"] = rows;
  bool any_partition = false;
  for (const auto& r : M.partitions)
    for (const auto& p : r) any_partition |= !p.parts.empty();
  if (any_partition) {
    Json parts = Json::array();
    for (const auto& r : M.partitions) {
      Json row = Json::array();
      for (const auto& p : r) row.push_back(p.compact());
      parts.push_back(row);
    }
    j["partitions"] = parts;
  }
  return j;
}

inline Json interval(const Interval& I) {
  return Json{{"lo", to_string(I.lo)}, {"hi", to_string(I.hi)}, {"lo_labels", I.lo_labels}, {"hi_labels", I.hi_labels}};
}

inline Json hull(const ProjectiveHull& H, const std::vector<PermChar>& chars) {
  Json j;
  j["normalizer"] = chars.at(H.normalizer).name;
  Json pts = Json::array();
  for (std::size_t k = 0; k < H.points.size(); ++k) pts.push_back(Json{{"label", H.labels[k]}, {"point", rationals(H.points[k])}});
  j["points"] = pts;
  if (H.interval) j["interval"] = interval(*H.interval);
  if (H.mean_root) j["mean_root"] = interval(*H.mean_root);
  if (!H.polygon.empty()) {
    Json poly = Json::array();
    for (const auto& p : H.polygon) poly.push_back(rationals(p));
    j["polygon"] = poly;
  }
  return j;
}

inline Json certificate(const ConeCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  if (c.inside())
    j["combination"] = rationals(c.combination);
  else
    j["separator"] = rationals(c.separator);
  return j;
}

inline Json method(const std::string& name, const MethodResult& R) {
  Json j;
  j["method"] = name;
  j["verdict"] = to_string(R.verdict);
  j["tested"] = matrix(R.tested);
  Json cols = Json::array();
  for (const auto& c : R.columns) {
    Json cj{{"label", c.label}, {"column", rationals(c.column)}};
    cj["certificate"] = certificate(c.certificate);
    if (c.short_circuit) cj["prime_order"] = true;
    cols.push_back(cj);
  }
  j["columns"] = cols;
  return j;
}

inline std::string join(const RationalVector& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + to_string(v[i]);
  return s;
}

inline std::string matrix_text(const ConductorMatrix& M) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head = {""};
  for (const auto& l : M.labels) head.push_back(l);
  cells.push_back(head);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    std::vector<std::string> row = {M.characters[i].name};
    for (std::size_t j = 0; j < M.cols(); ++j) {
      std::string e = to_string(M.entries[i][j]);
      if (i < M.partitions.size() && j < M.partitions[i].size() && !M.partitions[i][j].parts.empty())
        e += " (" + M.partitions[i][j].compact() + ")";
      row.push_back(e);
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& r : cells)
    for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
  std::ostringstream os;
  for (const auto& r : cells) {
    std::string line = " ";
    for (std::size_t k = 0; k < r.size(); ++k) line += " " + r[k] + std::string(width[k] - r[k].size(), ' ');
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
  }
  return os.str();
}

}  // namespace report

struct Outcome {
  Json json;
  std::string text;
  int exit_code = kExitProved;
};

inline int exit_code_for(const std::vector<MethodVerdict>& verdicts) {
  bool proved = false;
  for (auto v : verdicts) {
    if (v == MethodVerdict::RefutedForMethod) return kExitRefuted;
    proved |= v == MethodVerdict::Proved;
  }
  return proved ? kExitProved : kExitInconclusive;
}

inline const char* verdict_word(int code) {
  return code == kExitProved ? "proved" : code == kExitRefuted ? "refuted-for-method" : "inconclusive";
}

/// Tame-wild analysis of one type (G, φ_1..φ_r) by the broad and/or inertial method.
inline Outcome run_check(const AnalysisSpec& spec) {
  auto t0 = std::chrono::steady_clock::now();
  if (spec.chars.empty()) throw Error(ErrorCode::Parse, "at least one character is required");
  if (spec.method != "broad" && spec.method != "inertial" && spec.method != "both")
    throw Error(ErrorCode::Parse, "method must be broad, inertial or both");
  auto ctx = make_context(spec.group);
  std::vector<PermChar> chars;
  for (const auto& c : spec.chars) chars.push_back(ctx.character(c));

  Outcome out;
  Json& j = out.json;
  j["schema"] = kReportSchema;
  j["command"] = "check";
  j["group"] = Json{{"name", ctx.name}, {"order", ctx.group->order()}, {"classes", ctx.classes->size() - 1}};
  Json cj = Json::array();
  for (const auto& c : chars) cj.push_back(Json{{"name", c.name}, {"degree", c.degree()}});
  j["characters"] = cj;

  std::ostringstream tx;
  tx << "group " << ctx.name << ": order " << ctx.group->order() << ", " << ctx.classes->size() - 1 << " non-identity classes\n";
  tx << "characters:";
  for (const auto& c : chars) tx << " " << c.name << " (degree " << c.degree() << ")";
  tx << "\n";

  auto T = tame_matrix(ctx.classes, chars);
  j["tame"] = report::matrix(T);
  tx << "tame matrix:\n" << report::matrix_text(T);

  if (spec.projectivize && T.cols() > 0) {
    std::optional<std::size_t> norm;
    if (spec.normalizer) {
      for (std::size_t i = 0; i < chars.size(); ++i)
        if (chars[i].name == *spec.normalizer) norm = i;
      if (!norm) throw Error(ErrorCode::Parse, "normalizer '" + *spec.normalizer + "' is not a selected character");
    }
    auto H = projectivize(T, norm);
    j["projective"] = report::hull(H, chars);
    tx << "projective tame points (normalizer " << chars[H.normalizer].name << "):";
    for (std::size_t k = 0; k < H.points.size(); ++k) tx << " " << H.labels[k] << "=(" << report::join(H.points[k]) << ")";
    tx << "\n";
    if (H.interval) tx << "tame interval: [" << to_string(H.interval->lo) << ", " << to_string(H.interval->hi) << "]\n";
    if (spec.mean_root && H.mean_root)
      tx << "mean-root interval: [" << to_string(H.mean_root->lo) << ", " << to_string(H.mean_root->hi) << "]\n";
  }

  std::vector<MethodVerdict> verdicts;
  Json methods = Json::array();
  auto describe = [&](const std::string& name, const MethodResult& R) {
    methods.push_back(report::method(name, R));
    verdicts.push_back(R.verdict);
    tx << name << " method: " << to_string(R.verdict) << "\n";
    if (name == "inertial") tx << report::matrix_text(R.tested);
    for (const auto& c : R.columns)
      if (!c.certificate.inside())
        tx << "  column " << c.label << " = (" << report::join(c.column) << ") outside; separator (" << report::join(c.certificate.separator)
           << ")\n";
  };
  if (spec.method == "broad" || spec.method == "both") describe("broad", broad_method(ctx.classes, chars));
  if (spec.method == "inertial" || spec.method == "both") {
    std::vector<LabeledSubgroup> subs;
    bool complete = false;
    if (spec.inertial == "enumerate") {
      subs = enumerated_inertial_subgroups(*ctx.group, spec.order_limit);
      complete = true;
    } else if (spec.inertial.rfind("file:", 0) == 0) {
      auto f = load_subgroup_file(spec.inertial.substr(5));
      if (f.source.group->order() != ctx.group->order() || f.source.group->generators() != ctx.group->generators())
        throw Error(ErrorCode::Parse, "subgroup file refers to a different group");
      for (auto& s : f.subgroups) subs.push_back({s.label, ctx.group->subgroup(s.group->generators(), s.label)});
      complete = f.complete;
    } else {
      throw Error(ErrorCode::Parse, "inertial source must be enumerate or file:PATH");
    }
    describe("inertial", inertial_method(ctx.classes, chars, subs, complete));
  }
  j["methods"] = methods;
  out.exit_code = exit_code_for(verdicts);
  j["verdict"] = verdict_word(out.exit_code);
  tx << "verdict: " << verdict_word(out.exit_code) << "\n";
  if (spec.verbose) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    j["timing_ms"] = ms;
    tx << "time: " << ms << " ms\n";
  }
  out.text = tx.str();
  return out;
}

/// Wild Artin character of a chain file and its conductor vector against the tame cone.
inline Outcome run_wild(const std::string& chain_file, std::vector<std::string> char_names, bool verbose = false) {
  auto t0 = std::chrono::steady_clock::now();
  auto f = load_chain_file(chain_file);
  auto a = artin_from_chain(f.chain);
  if (char_names.empty()) char_names = f.characters;
  if (char_names.empty()) throw Error(ErrorCode::Parse, "no characters given for the conductor vector");
  AnalysisContext ctx;
  ctx.group = f.source.group;
  ctx.classes = f.source.classes;
  ctx.preset = f.source.preset;
  ctx.name = f.source.preset ? f.source.preset->name : std::string("G");
  if (f.source.preset) ctx.actions = f.source.preset->actions;
  else ctx.actions = context_from_group_json(read_json_file(chain_file).at("group")).actions;
  std::vector<PermChar> chars;
  for (const auto& c : char_names) chars.push_back(ctx.character(c));

  auto v = conductor_vector(a, chars);
  auto T = tame_matrix(ctx.classes, chars);
  auto cols = T.columns();
  ConeCertificate cert;
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) {
    cert.combination.assign(cols.size(), Rational(0));
  } else {
    cert = cone_membership(v, cols);
  }
  if (!verify_certificate(cert, v, cols)) throw Error(ErrorCode::IntegrityFailure, "certificate failed verification");

  Outcome out;
  Json& j = out.json;
  j["schema"] = kReportSchema;
  j["command"] = "wild";
  j["group"] = Json{{"name", ctx.name}, {"order", ctx.group->order()}};
  j["inertia_order"] = f.chain.inertia->order();
  Json levels = Json::array();
  for (const auto& l : f.chain.levels) levels.push_back(Json{{"order", l.group->order()}, {"slope", to_string(l.slope)}});
  j["levels"] = levels;
  j["validation"] = to_string(f.chain.validation);
  const auto& SI = *a.inertia_classes;
  Json w = Json::object();
  for (std::size_t c = 1; c < SI.size(); ++c) w[SI[c].label] = to_string(a.w[c]);
  j["w"] = w;
  j["w_nonnegative"] = a.w_nonnegative();
  Json tc = Json::object();
  for (std::size_t c = 1; c < ctx.classes->size(); ++c)
    if (a.tame_coefficients[c] != 0) tc[(*ctx.classes)[c].label] = to_string(a.tame_coefficients[c]);
  j["tame_coefficients"] = tc;
  Json names = Json::array();
  for (const auto& c : chars) names.push_back(c.name);
  j["characters"] = names;
  j["conductors"] = report::rationals(v);
  j["tame"] = report::matrix(T);
  j["certificate"] = report::certificate(cert);
  j["verdict"] = cert.inside() ? "inside" : "outside";

  std::ostringstream tx;
  tx << "group " << ctx.name << ", inertia order " << f.chain.inertia->order() << ", validation " << to_string(f.chain.validation) << "\n";
  tx << "slopes:";
  for (const auto& l : f.chain.levels) tx << " " << to_string(l.slope) << " (order " << l.group->order() << ")";
  tx << "\nw:";
  for (std::size_t c = 1; c < SI.size(); ++c) tx << " " << SI[c].label << "=" << to_string(a.w[c]);
  tx << "\nconductors (";
  for (std::size_t i = 0; i < chars.size(); ++i) tx << (i ? ", " : "") << chars[i].name;
  tx << ") = (" << report::join(v) << ")\n";
  tx << "tame cone: " << (cert.inside() ? "inside" : "outside");
  if (cert.inside())
    tx << "; combination (" << report::join(cert.combination) << ")\n";
  else
    tx << "; separator (" << report::join(cert.separator) << ")\n";
  out.exit_code = cert.inside() ? kExitProved : kExitRefuted;
  if (verbose) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    j["timing_ms"] = ms;
    tx << "time: " << ms << " ms\n";
  }
  out.text = tx.str();
  return out;
}

inline Outcome run_classify(const GroupRef& ref) {
  auto ctx = make_context(ref);
  auto P = build_poset(ctx.classes);
  const auto& S = *ctx.classes;
  Outcome out;
  auto ncls = P.n_classes();
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "classify";
  j["group"] = Json{{"name", ctx.name}, {"order", ctx.group->order()}};
  j["kind"] = ncls.empty() ? "U-group" : "N-group";
  Json nj = Json::array();
  std::ostringstream tx;
  tx << ctx.name << ": " << (ncls.empty() ? "U-group" : "N-group") << "\n";
  if (!ncls.empty()) {
    tx << "N-classes:";
    for (auto c : ncls) {
      nj.push_back(Json{{"label", S[c].label}, {"cycle_type", S[c].cycle_type.compact()}, {"u", P.u[c]}});
      tx << " " << S[c].label << " (" << S[c].cycle_type.compact() << ", u=" << P.u[c] << ")";
    }
    tx << "\n";
  }
  j["n_classes"] = nj;
  out.json = j;
  out.text = tx.str();
  return out;
}

inline Outcome run_poset(const GroupRef& ref, const std::string& format) {
  auto ctx = make_context(ref);
  auto P = build_poset(ctx.classes);
  RenderOptions opt;
  opt.name = ctx.name;
  Outcome out;
  if (format == "dot")
    out.text = render_dot(P, opt);
  else if (format == "text")
    out.text = render_text(P, opt);
  else
    throw Error(ErrorCode::Parse, "poset format must be dot or text");
  out.json = Json{{"schema", kReportSchema}, {"command", "poset"}, {"format", format}, {"document", out.text}};
  return out;
}

/// Projective tame hull with broad crosses for exactly three characters.
inline Outcome run_svg(const AnalysisSpec& spec) {
  if (spec.chars.size() != 3) throw Error(ErrorCode::WrongArity, "hull figures need exactly three characters");
  auto ctx = make_context(spec.group);
  std::vector<PermChar> chars;
  for (const auto& c : spec.chars) chars.push_back(ctx.character(c));
  auto T = tame_matrix(ctx.classes, chars);
  auto B = broad_matrix(ctx.classes, chars);
  std::optional<std::size_t> norm;
  if (spec.normalizer)
    for (std::size_t i = 0; i < 3; ++i)
      if (chars[i].name == *spec.normalizer) norm = i;
  auto HT = projectivize(T, norm);
  auto HB = projectivize(B, HT.normalizer);
  HullFigure F;
  F.title = ctx.name + " (" + spec.chars[0] + ", " + spec.chars[1] + ", " + spec.chars[2] + ")";
  std::vector<std::string> axes;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != HT.normalizer) axes.push_back(chars[i].name + "/" + chars[HT.normalizer].name);
  F.x_label = axes[0];
  F.y_label = axes[1];
  F.tame_points = HT.points;
  F.tame_labels = HT.labels;
  F.cross_points = HB.points;
  F.cross_labels = HB.labels;
  F.hull = HT.polygon;
  if (F.hull.empty() && !HT.points.empty()) F.hull = {HT.points[0]};
  std::size_t outside = 0;
  for (const auto& p : HB.points)
    if (HT.polygon.size() < 3 ? std::find(HT.points.begin(), HT.points.end(), p) == HT.points.end() : !polygon_contains(HT.polygon, p))
      ++outside;
  Outcome out;
  out.text = render_hull_svg(F);
  out.json = Json{{"schema", kReportSchema},
                  {"command", "svg"},
                  {"crosses", HB.points.size()},
                  {"crosses_outside_hull", outside},
                  {"hull_vertices", HT.polygon.size()}};
  return out;
}

inline Outcome run_frobenius(const IntPolynomial& f, const std::vector<std::int64_t>& primes) {
  Outcome out;
  Json rows = Json::array();
  std::ostringstream tx;
  for (auto p : primes) {
    auto part = frobenius_partition(f, p);
    rows.push_back(Json{{"p", p}, {"partition", part.compact()}});
    tx << p << ": " << part.compact() << "\n";
  }
  out.json = Json{{"schema", kReportSchema}, {"command", "frobenius"}, {"partitions", rows}};
  out.text = tx.str();
  return out;
}

}  // namespace tamewild
