// Command-line front end: check, wild, poset, classify, svg, frobenius, presets.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "tamewild/report.hpp"

using namespace tamewild;

namespace {

void add_group_options(CLI::App* cmd, GroupRef& ref) {
  cmd->add_option("--preset", ref.preset, "preset name");
  cmd->add_option("--group", ref.group_file, "group-spec JSON file");
  cmd->add_option("--family", ref.family, "family name (C, D, F, S, A, PSL2, PGL2, ...)");
  for (const char* k : {"n", "p", "q", "r", "plus"})
    cmd->add_option_function<int>(std::string("--") + k, [&ref, k](int v) { ref.params[k] = v; }, std::string("family parameter ") + k);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << text;
}

/// Config JSON keys mirror long flag names; command-line flags take precedence.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end()) return args;
  if (it + 1 == args.end()) throw Error(ErrorCode::Parse, "--config needs a file");
  std::string path = *(it + 1);
  args.erase(it, it + 2);
  auto j = read_json_file(path);
  if (!j.is_object()) throw Error(ErrorCode::Parse, "config must be a JSON object");
  std::vector<std::string> extra;
  for (const auto& [k, v] : j.items()) {
    std::string flag = "--" + k;
    if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
    if (v.is_boolean()) {
      if (v.get<bool>()) extra.push_back(flag);
    } else if (v.is_array()) {
      std::string joined;
      for (const auto& x : v) joined += (joined.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
      extra.insert(extra.end(), {flag, joined});
    } else {
      extra.insert(extra.end(), {flag, v.is_string() ? v.get<std::string>() : v.dump()});
    }
  }
  // Options belong to the subcommand, so insert after it.
  std::size_t pos = args.empty() ? 0 : 1;
  args.insert(args.begin() + static_cast<long>(pos), extra.begin(), extra.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tame-wild principle analysis for permutation characters"};
  app.require_subcommand(1);
  std::string format = "text", json_out;
  bool verbose = false;

  AnalysisSpec spec;
  std::string svg_out, dot_out;
  bool no_projectivize = false;
  std::string normalizer;
  auto* check = app.add_subcommand("check", "decide the tame-wild principle by the broad and/or inertial method");
  add_group_options(check, spec.group);
  check->add_option("--chars", spec.chars, "characters: action names, sums a+b, or regular")->delimiter(',')->required();
  check->add_option("--method", spec.method, "broad | inertial | both")->check(CLI::IsMember({"broad", "inertial", "both"}));
  check->add_option("--inertial", spec.inertial, "enumerate | file:PATH");
  check->add_option("--order-limit", spec.order_limit, "largest group order for subgroup enumeration");
  check->add_option("--normalizer", normalizer, "character used to projectivize (default: last)");
  check->add_flag("--no-projectivize", no_projectivize, "skip projectivized points and intervals");
  check->add_flag("--mean-root", spec.mean_root, "also print the mean-root interval");
  check->add_option("--svg", svg_out, "write the hull figure (three characters)");
  check->add_option("--dot", dot_out, "write the divisibility poset as DOT");

  std::string chain_file;
  std::vector<std::string> wild_chars;
  auto* wild = app.add_subcommand("wild", "evaluate a wild Artin character from a slope chain file");
  wild->add_option("--chain", chain_file, "chain JSON file")->required();
  wild->add_option("--chars", wild_chars, "characters for the conductor vector")->delimiter(',');

  GroupRef poset_ref;
  std::string poset_format = "text";
  auto* poset = app.add_subcommand("poset", "render the divisibility poset of G♯ with u-values");
  add_group_options(poset, poset_ref);
  poset->add_option("--poset-format", poset_format, "text | dot")->check(CLI::IsMember({"text", "dot"}));

  GroupRef classify_ref;
  auto* classify = app.add_subcommand("classify", "U-group / N-group classification");
  add_group_options(classify, classify_ref);

  AnalysisSpec svg_spec;
  std::string svg_norm, svg_file;
  auto* svg = app.add_subcommand("svg", "projective tame hull with broad crosses, as SVG");
  add_group_options(svg, svg_spec.group);
  svg->add_option("--chars", svg_spec.chars, "exactly three characters")->delimiter(',')->required();
  svg->add_option("--normalizer", svg_norm, "character used to projectivize (default: last)");
  svg->add_option("--out", svg_file, "output file (default: stdout)");

  std::string poly_text, poly_fixture, poly_name;
  std::vector<std::int64_t> primes;
  auto* frob = app.add_subcommand("frobenius", "degrees of the irreducible factors mod p");
  frob->add_option("--poly", poly_text, "polynomial text in x");
  frob->add_option("--fixture", poly_fixture, "polynomial fixture JSON");
  frob->add_option("--name", poly_name, "polynomial name within the fixture");
  frob->add_option("--primes", primes, "primes")->delimiter(',');

  auto* list = app.add_subcommand("presets", "list registered presets and their actions");

  for (auto* cmd : {check, wild, poset, classify, svg, frob, list}) {
    cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--json", json_out, "also write the JSON report to a file");
    cmd->add_flag("--verbose", verbose, "add timing information");
  }

  std::vector<std::string> args;
  try {
    std::vector<std::string> raw(argv + 1, argv + argc);
    args = expand_config(raw);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpecError;
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitSpecError;
  }

  try {
    Outcome out;
    if (check->parsed()) {
      spec.projectivize = !no_projectivize;
      spec.verbose = verbose;
      if (!normalizer.empty()) spec.normalizer = normalizer;
      out = run_check(spec);
      if (!svg_out.empty()) {
        AnalysisSpec s = spec;
        write_file(svg_out, run_svg(s).text);
      }
      if (!dot_out.empty()) write_file(dot_out, run_poset(spec.group, "dot").text);
    } else if (wild->parsed()) {
      out = run_wild(chain_file, wild_chars, verbose);
    } else if (poset->parsed()) {
      out = run_poset(poset_ref, poset_format);
    } else if (classify->parsed()) {
      out = run_classify(classify_ref);
    } else if (svg->parsed()) {
      if (!svg_norm.empty()) svg_spec.normalizer = svg_norm;
      out = run_svg(svg_spec);
      if (!svg_file.empty()) {
        write_file(svg_file, out.text);
        out.text = out.json.dump(1) + "\n";
      }
    } else if (frob->parsed()) {
      IntPolynomial f;
      if (!poly_text.empty()) {
        f = parse_polynomial(poly_text);
      } else if (!poly_fixture.empty()) {
        auto j = read_json_file(poly_fixture);
        f = polynomial_from_json(j.at("polynomials").at(poly_name));
        if (primes.empty() && j.contains("primes")) primes = j["primes"].get<std::vector<std::int64_t>>();
      } else {
        throw Error(ErrorCode::Parse, "give --poly or --fixture");
      }
      if (primes.empty()) throw Error(ErrorCode::Parse, "give --primes");
      out = run_frobenius(f, primes);
    } else if (list->parsed()) {
      Json rows = Json::array();
      std::ostringstream tx;
      for (const auto& n : preset_names()) {
        auto P = load_preset(n);
        rows.push_back(Json{{"name", n}, {"order", P->group->order()}, {"actions", P->action_names}});
        tx << n << "\torder " << P->group->order() << "\t";
        for (std::size_t i = 0; i < P->action_names.size(); ++i) tx << (i ? "," : "") << P->action_names[i];
        tx << "\n";
      }
      out.json = Json{{"schema", kReportSchema}, {"command", "presets"}, {"presets", rows}};
      out.text = tx.str();
    }
    if (!json_out.empty()) write_file(json_out, out.json.dump(1) + "\n");
    if (format == "json" && !(svg->parsed() && svg_file.empty()))
      std::cout << out.json.dump(1) << "\n";
    else
      std::cout << out.text;
    return out.exit_code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InvalidChain ? kExitInvalidChain : kExitSpecError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpecError;
  }
}
