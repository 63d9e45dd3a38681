#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>

#include "syzcurve/catalog.hpp"
#include "syzcurve/fileformat.hpp"
#include "syzcurve/parse.hpp"
#include "syzcurve/report.hpp"

using namespace syzcurve;

namespace {

struct Globals {
  std::string format = "text";
  bool no_timing = false;
  bool aggregate = false;
};

InputFile load(const std::string& path) {
  try {
    return read_input(path);
  } catch (ParseError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
    throw;
  }
}

AnalyzeOptions options(const Globals& g, const std::string& name) {
  AnalyzeOptions o;
  o.aggregate = g.aggregate;
  o.timing = !g.no_timing;
  o.input_name = name;
  return o;
}

NumberField field_from_spec(const std::string& spec) {
  if (spec.empty()) return NumberField::rationals();
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::SyntaxError, "--field expects '<g> : <minpoly>'");
  std::string g = spec.substr(0, colon), mp = spec.substr(colon + 1);
  g.erase(0, g.find_first_not_of(' '));
  g.erase(g.find_last_not_of(' ') + 1);
  return NumberField::adjoin_root(g, parse_univariate(mp, g));
}

Arrangement generate(const std::string& name, std::map<std::string, std::string> params, const std::string& field_spec) {
  auto take = [&](const std::string& k) {
    auto it = params.find(k);
    if (it == params.end()) throw Error(ErrorCode::InvalidArgument, name + " needs parameter " + k);
    std::string v = it->second;
    params.erase(it);
    return v;
  };
  auto done = [&](Arrangement a) {
    if (!params.empty()) throw Error(ErrorCode::InvalidArgument, "unused parameter " + params.begin()->first);
    return a;
  };
  if (name == "orchard10" || name == "orchard12") {
    NumberField k = field_from_spec(field_spec);
    FieldElement s = parse_field_element(take("s"), k), t = parse_field_element(take("t"), k);
    return done(name == "orchard10" ? orchard10(s, t) : orchard12(s, t));
  }
  if (name == "full-monomial") return done(full_monomial(std::stoi(take("n"))));
  if (!field_spec.empty()) throw Error(ErrorCode::InvalidArgument, "--field only applies to orchard families");
  return done(catalog_entry(name).build());
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syzygies, freeness and weak combinatorics of plane curve arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-timing", g.no_timing, "Omit timing from reports");
  app.add_flag("--aggregate-points", g.aggregate, "Record conjugate point pairs once instead of failing");

  std::string path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify a curve or arrangement file");
  analyze_cmd->add_option("file", path, "Input file")->required();

  std::string path_a, path_b, variant = "lattice-ar";
  auto* ziegler_cmd = app.add_subcommand("ziegler", "Decide whether two arrangements form a (weak) Ziegler pair");
  ziegler_cmd->add_option("a", path_a, "First input")->required();
  ziegler_cmd->add_option("b", path_b, "Second input")->required();
  ziegler_cmd->add_option("--variant", variant, "lattice-mdr, lattice-ar, weak-mdr or weak-ar")
      ->check(CLI::IsMember({"lattice-mdr", "lattice-ar", "weak-mdr", "weak-ar"}));

  auto* catalog_cmd = app.add_subcommand("catalog", "List or generate named arrangements");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog entries");
  std::string gen_name, s_val, t_val, n_val, field_spec, out_path;
  std::vector<std::string> kv;
  auto* gen_cmd = catalog_cmd->add_subcommand("gen", "Write a catalog arrangement in the input format");
  gen_cmd->add_option("name", gen_name, "Entry or family (orchard10, orchard12, full-monomial)")->required();
  gen_cmd->add_option("--s", s_val, "Orchard parameter s");
  gen_cmd->add_option("--t", t_val, "Orchard parameter t");
  gen_cmd->add_option("--n", n_val, "Full monomial parameter n");
  gen_cmd->add_option("--param", kv, "k=v parameter, repeatable");
  gen_cmd->add_option("--field", field_spec, "Parameter field '<g> : <minpoly>'");
  gen_cmd->add_option("-o,--output", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const bool json_out = g.format == "json";
  try {
    if (*analyze_cmd) {
      AnalysisReport r = analyze(load(path), options(g, path));
      std::cout << (json_out ? r.to_json() + "\n" : r.to_text());
    } else if (*ziegler_cmd) {
      InputFile a = load(path_a), b = load(path_b);
      AnalyzeOptions o = options(g, path_a);
      ZieglerReport z = ziegler(a, b, parse_variant(variant), o);
      z.b.input = path_b;
      std::cout << (json_out ? z.to_json() + "\n" : z.to_text());
    } else if (*list_cmd) {
      if (json_out) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& e : catalog())
          j.push_back({{"name", e.name}, {"description", e.description}, {"extended", e.extended}});
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& e : catalog()) std::cout << e.name << "  " << e.description << "\n";
        std::cout << "families: orchard10 --s --t [--field], orchard12 --s --t [--field], full-monomial --n\n";
      }
    } else if (*gen_cmd) {
      std::map<std::string, std::string> params;
      for (const auto& p : kv) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--param expects k=v");
        params[p.substr(0, eq)] = p.substr(eq + 1);
      }
      if (!s_val.empty()) params["s"] = s_val;
      if (!t_val.empty()) params["t"] = t_val;
      if (!n_val.empty()) params["n"] = n_val;
      std::string comment = gen_name;
      for (const auto& [k, v] : params) comment += " " + k + "=" + v;
      emit(write_input(generate(gen_name, params, field_spec), comment), out_path);
    }
  } catch (const ParseError& e) {
    if (e.line() == 0) std::cerr << "error: " << e.what() << "\n";  // file errors were reported by load()
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
