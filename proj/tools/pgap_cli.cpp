// Command-line front end. Talks to the library only through pgap.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pgap/pgap.h"

using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kValidation = 1, kInvariant = 2, kIo = 3 };

int exit_code(pgap_status st) {
  switch (st) {
    case PGAP_OK: return kOk;
    case PGAP_INVALID_ARGUMENT:
    case PGAP_BUDGET_EXCEEDED: return kValidation;
    case PGAP_IO: return kIo;
    default: return kInvariant;
  }
}

// Options given on the command line; only these override the config file.
struct Flags {
  std::map<std::string, json> values;
  std::vector<std::function<void()>> collectors;

  template <typename T>
  void opt(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    auto holder = std::make_shared<T>();
    CLI::Option* o = app->add_option(flag, *holder, help);
    collectors.push_back([this, o, key, holder] {
      if (o->count() > 0) values[key] = *holder;
    });
  }
  void flag(CLI::App* app, const std::string& name, const std::string& key, const std::string& help) {
    app->add_flag_callback(name, [this, key] { values[key] = true; }, help);
  }
  void collect() {
    for (auto& c : collectors) c();
  }
};

std::vector<int> parse_triple(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) out.push_back(std::stoi(part));
  if (out.size() != 3) throw CLI::ValidationError("--divisor", "expected a,b,c");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weierstrass gaps, pure gaps and AG codes at the fundamental points of XY^n+YZ^n+ZX^n+XYZ*G=0"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(pgap_version()));

  std::string out_path, format = "json", config_path;
  Flags g;
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--config", config_path, "JSON config file; command-line flags override it");
  g.opt<std::uint64_t>(&app, "--seed", "seed", "seed for randomized procedures");
  g.opt<unsigned>(&app, "--jobs", "jobs", "worker threads");
  g.opt<std::uint64_t>(&app, "--budget", "budget", "column subsets allowed for distance certification");

  auto curve_option = [&](CLI::App* sub) {
    g.opt<std::string>(sub, "--curve", "curve", "curve JSON file or catalog name");
  };

  auto* gaps = app.add_subcommand("gaps", "gap sequences, semigroup generators and Kim maps");
  g.opt<int>(gaps, "--n", "n", "degree parameter n >= 3");
  curve_option(gaps);
  g.flag(gaps, "--check", "check", "compare against the Riemann-Roch oracle");

  auto* pure = app.add_subcommand("pure-gaps", "pure gaps at two or three points");
  g.opt<int>(pure, "--n", "n", "degree parameter n >= 3");
  g.opt<int>(pure, "--points", "points", "2 or 3");
  curve_option(pure);
  g.flag(pure, "--check", "check", "compare against the Riemann-Roch oracle and the Homma-Kim test");

  auto* dims = app.add_subcommand("dims", "Riemann-Roch dimensions l(aP1+bP2+cP3)");
  curve_option(dims);
  g.opt<int>(dims, "--n", "n", "use the standard curve for this n when --curve is absent");
  std::vector<std::string> divisor_texts;
  dims->add_option("--divisor", divisor_texts, "a,b,c (repeatable)");
  g.flag(dims, "--basis", "basis", "emit and verify a basis");
  g.flag(dims, "--formulas", "formulas", "run the closed-form dimension sweep");

  auto* code = app.add_subcommand("code", "build C_Omega(D, G) and report its parameters");
  curve_option(code);
  g.opt<int>(code, "--i", "i", "design parameter i");
  g.opt<int>(code, "--j", "j", "design parameter j");
  g.opt<int>(code, "--k", "k", "design parameter k (three-point design)");
  std::string code_divisor;
  code->add_option("--divisor", code_divisor, "explicit G as a,b,c");
  g.opt<int>(code, "--length", "length", "use the first m points of D");
  g.opt<std::vector<int>>(code, "--point-indices", "point_indices", "explicit indices into D");
  g.flag(code, "--include-p3", "include_p3", "keep P3 in D (pair designs)");
  g.opt<int>(code, "--certify", "certify", "check that every w parity-check columns are independent");
  g.opt<int>(code, "--trials", "trials", "randomized low-weight search trials");
  g.opt<std::string>(code, "--matrix-dir", "matrix_dir", "write generator/parity-check CSVs here");
  code->add_flag_callback("--no-matrices", [&] { g.values["matrices"] = false; }, "omit matrices from the report");

  auto* search = app.add_subcommand("search", "search for curves with many rational points");
  g.opt<std::uint32_t>(search, "--p", "p", "characteristic");
  g.opt<std::uint32_t>(search, "--field-degree", "field_degree", "extension degree k of GF(p^k)");
  g.opt<int>(search, "--n", "n", "degree parameter");
  g.flag(search, "--random", "random", "random sampling instead of exhaustive enumeration");
  g.opt<std::uint64_t>(search, "--samples", "samples", "random samples");
  g.opt<std::uint64_t>(search, "--max-candidates", "max_candidates", "cap on exhaustive candidates");
  g.opt<std::size_t>(search, "--min-points", "min_points", "keep curves with at least this many points");
  g.opt<std::size_t>(search, "--exact-points", "exact_points", "keep curves with exactly this many points");
  g.opt<int>(search, "--probe-ext", "probe_ext", "extension degree for the smoothness probe");
  g.opt<std::string>(search, "--sink", "sink", "append JSON-lines records to this file");

  auto* reproduce = app.add_subcommand("reproduce", "recompute the published example codes and counts");
  g.opt<std::string>(reproduce, "--out-dir", "out_dir", "directory for per-row reports");
  g.opt<std::uint32_t>(reproduce, "--q-cap", "q_cap", "largest field enumerated; larger rows are formula-only");

  auto* verify = app.add_subcommand("verify", "run every closed-form vs oracle suite");
  g.opt<int>(verify, "--n-max", "n_max", "largest n for the curve suites");
  g.opt<int>(verify, "--samples", "samples", "random divisors per property check");
  g.opt<std::string>(verify, "--inject", "inject", "negative fixture: corrupted-modulus");
  verify->add_flag_callback("--no-codes", [&] { g.values["codes"] = false; }, "skip the code certification");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kValidation;
  }

  g.collect();
  json config = json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read " << config_path << "\n";
      return kIo;
    }
    try {
      config = json::parse(in);
    } catch (const json::exception& e) {
      std::cerr << "error: " << config_path << ": " << e.what() << "\n";
      return kValidation;
    }
    if (!config.is_object()) {
      std::cerr << "error: config must be a JSON object\n";
      return kValidation;
    }
  }
  for (auto& [key, value] : g.values) config[key] = value;
  try {
    if (!divisor_texts.empty()) {
      json list = json::array();
      for (const auto& t : divisor_texts) list.push_back(parse_triple(t));
      config["divisors"] = list;
    }
    if (!code_divisor.empty()) config["divisor"] = parse_triple(code_divisor);
  } catch (const std::exception& e) {
    std::cerr << "error: bad --divisor: " << e.what() << "\n";
    return kValidation;
  }
  // A --curve argument naming an existing file is passed as a file path.
  if (config.contains("curve") && config["curve"].is_string()) {
    const std::string c = config["curve"];
    if (std::ifstream(c)) {
      config.erase("curve");
      config["curve_file"] = c;
    }
  }

  const std::string command = app.get_subcommands().front()->get_name();
  char* report = nullptr;
  char* csv = nullptr;
  const pgap_status st = pgap_run(command.c_str(), config.dump().c_str(), &report, &csv);
  if (!report) {
    std::cerr << "error (" << pgap_status_name(st) << "): " << pgap_last_error() << "\n";
    return exit_code(st);
  }
  try {
    const json parsed = json::parse(report);
    if (parsed.contains("result") && parsed["result"].contains("check_summary"))
      std::cerr << parsed["result"]["check_summary"].get<std::string>() << "\n";
  } catch (const json::exception&) {
  }
  const std::string text = format == "csv" ? std::string(csv) : std::string(report) + "\n";
  pgap_string_free(report);
  pgap_string_free(csv);

  int rc = exit_code(st);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kIo;
    }
  }
  if (st != PGAP_OK) std::cerr << "FAIL: " << pgap_last_error() << "\n";
  return rc;
}
