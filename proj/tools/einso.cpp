/*
   Copyright 2026 The einso Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


// einso: command-line front end. Results go to stdout, progress to stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "einso/cli/config.hpp"
#include "einso/cli/serialize.hpp"
#include "einso/cli/verify.hpp"
#include "einso/einstein/analysis.hpp"
#include "einso/einstein/system.hpp"
#include "einso/einstein/table.hpp"
#include "einso/exact/errors.hpp"
#include "einso/liealg/liealg.hpp"
#include "einso/ricci/ricci.hpp"

namespace {

using namespace einso;
using cli::json;

enum Exit { kOk = 0, kDomain = 1, kUsage = 2, kBudget = 3 };

struct Blocks {
  int k1 = 0, k2 = 0, k3 = 0;

  liealg::Decomposition decomposition() const {
    if (k3 < 1 || k2 < k3 || k1 < k2)
      throw StructuralError("block sizes must satisfy k1 >= k2 >= k3 >= 1");
    return {k1, k2, k3};
  }
};

void add_blocks(CLI::App* app, Blocks& b) {
  app->add_option("--k1", b.k1, "size of the first block")->required();
  app->add_option("--k2", b.k2, "size of the second block")->required();
  app->add_option("--k3", b.k3, "size of the third block")->required();
}

std::map<std::string, Rational> parse_metric(const std::vector<std::string>& items) {
  std::map<std::string, Rational> out;
  for (const auto& item : items) {
    auto [name, value] = einstein::parse_binding(item);
    out[name] = parse_rational(value);
  }
  return out;
}

void emit(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw StructuralError("cannot write " + path);
  f << j.dump(2) << '\n';
  std::cerr << "einso: wrote " << path << '\n';
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7f", v);
  return buf;
}

void print_record(const einstein::SolutionRecord& r) {
  std::cout << "  ";
  for (std::size_t i = 0; i < r.variables.size(); ++i)
    std::cout << r.variables[i] << "=" << fixed(r.approx_scaled(r.variables[i])) << " ";
  std::cout << "[" << einstein::to_string(r.classification.kind);
  if (r.classification.case_id) std::cout << ", case " << *r.classification.case_id;
  if (r.classification.subgroup) std::cout << ", " << *r.classification.subgroup;
  std::cout << ", " << einstein::to_string(r.status) << "]\n";
}

int run_triplets(const Blocks& b, bool bruteforce) {
  auto d = b.decomposition();
  auto t = bruteforce ? liealg::triplets_bruteforce(d) : liealg::triplets_closed_form(d);
  std::cout << cli::triplets_to_json(t).dump(2) << '\n';
  return kOk;
}

int run_ricci(const Blocks& b, const std::vector<std::string>& metric_items, const cli::Config& config) {
  auto sys = ricci::ricci_closed_form(b.decomposition());
  std::optional<std::map<std::string, Rational>> metric;
  if (!metric_items.empty()) {
    metric = parse_metric(metric_items);
    for (const auto& name : sys.ring->names()) {
      auto it = metric->find(name);
      if (it == metric->end()) throw StructuralError("missing metric value " + name);
      if (it->second <= 0) throw DomainError(name + " must be positive");
    }
  }
  if (config.output_format == cli::OutputFormat::Text && !metric) {
    for (const auto& [m, r] : sys.components)
      std::cout << "r_" << liealg::label(m).substr(1) << " = " << r.to_string() << '\n';
    return kOk;
  }
  std::cout << cli::ricci_to_json(sys, metric ? &*metric : nullptr).dump(2) << '\n';
  return kOk;
}

struct SolveArgs {
  Blocks blocks;
  std::string method = "auto";
  std::vector<std::string> specialize;
  std::vector<std::string> nonzero;
  std::string tol;
  int starts = 0;
  std::string json_path;
};

int run_solve(const SolveArgs& a, cli::Config config) {
  auto d = a.blocks.decomposition();
  if (!a.tol.empty()) cli::apply_setting(config, "refinement_tolerance", a.tol);
  if (a.starts > 0) config.numeric_starts = a.starts;
  cli::validate(config);
  einstein::Specialization spec;
  for (const auto& s : a.specialize) spec.insert(einstein::parse_binding(s));
  auto sys = einstein::build_system(d, spec);

  auto opt = cli::pipeline_options(config);
  opt.exact.nonzero = a.nonzero;
  if (a.method == "exact") {
    opt.method = einstein::Method::Exact;
    opt.fallback = false;
  } else if (a.method == "numeric") {
    opt.method = einstein::Method::Numeric;
  } else if (a.method == "both") {
    opt.method = einstein::Method::Both;
  } else {
    opt.method = einstein::Method::Exact;
    opt.fallback = true;
  }
  auto res = einstein::run_pipeline(sys, opt);
  if (res.budget_exceeded) std::cerr << "einso: Groebner budget exhausted, solved numerically\n";

  if (config.output_format == cli::OutputFormat::Text && a.json_path.empty()) {
    std::cout << "SO(" << d.n() << ") with (" << d.k(1) << "," << d.k(2) << "," << d.k(3) << "): "
              << res.solutions.size() << " positive solutions, " << res.classes.size()
              << " isometry classes (" << einstein::to_string(res.status)
              << (res.certified ? "" : ", uncertified") << ")\n";
    if (res.exact)
      std::cout << "eliminant in " << res.exact->eliminant_variable << " of degree "
                << realroots::degree(res.exact->eliminant) << '\n';
    for (const auto& r : res.classes) print_record(r);
    return kOk;
  }
  emit(cli::pipeline_to_json(sys, res), a.json_path);
  return kOk;
}

int run_classify(const Blocks& b, const std::vector<std::string>& metric_items, const cli::Config& config) {
  auto d = b.decomposition();
  auto rec = einstein::rational_record(d, parse_metric(metric_items));
  if (config.output_format == cli::OutputFormat::Text) {
    print_record(rec);
    return kOk;
  }
  std::cout << cli::record_to_json(rec).dump(2) << '\n';
  return kOk;
}

int run_table(int n_min, int n_max, const std::string& json_path, const cli::Config& config) {
  cli::validate(config);
  auto opt = cli::pipeline_options(config);
  auto cells = einstein::count_table(n_min, n_max, opt, config.threads);
  int code = kOk;
  json rows = json::array();
  for (const auto& c : cells) {
    rows.push_back(cli::cell_to_json(c));
    if (c.status == einstein::CellStatus::Failed) code = kDomain;
    if (c.status == einstein::CellStatus::BudgetExceeded && code == kOk) code = kBudget;
  }
  if (config.output_format == cli::OutputFormat::Text && json_path.empty()) {
    std::cout << pad("n", 4) << pad("(k1,k2,k3)", 12) << pad("non-NR", 8) << pad("NR", 6) << "status\n";
    for (const auto& c : cells) {
      const auto& d = c.decomposition;
      std::ostringstream k;
      k << "(" << d.k(1) << "," << d.k(2) << "," << d.k(3) << ")";
      std::cout << pad(std::to_string(d.n()), 4) << pad(k.str(), 12) << pad(std::to_string(c.non_nr), 8)
                << pad(std::to_string(c.nr), 6) << einstein::to_string(c.status) << '\n';
    }
    return code;
  }
  emit(json{{"n_min", n_min}, {"n_max", n_max}, {"cells", rows}}, json_path);
  return code;
}

int run_verify(const std::vector<int>& only, int n_max, const std::string& json_path, const cli::Config& config) {
  cli::validate(config);
  cli::VerifyOptions opt;
  opt.only = only;
  opt.table_n_max = n_max;
  opt.on_check = [](const cli::Check& c) {
    std::cerr << "[" << cli::to_string(c.status) << "] " << c.id << " " << c.name << ": " << c.actual << '\n';
  };
  opt.log = [](const std::string& line) { std::cerr << "  " << line << '\n'; };
  auto report = cli::verify_paper(config, opt);
  emit(report.to_json(), json_path);
  return report.passed() ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left-invariant Einstein metrics on SO(k1+k2+k3)", "einso"};
  app.require_subcommand(1);

  std::string config_path, format, cache_dir;
  bool no_cache = false;
  unsigned threads = 0;
  app.add_option("--config", config_path, "key=value configuration file")->check(CLI::ExistingFile);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cache-dir", cache_dir, "Groebner basis cache directory");
  app.add_flag("--no-cache", no_cache, "do not read or write the basis cache");
  app.add_option("--threads", threads, "workers for table and verify-paper (0: all cores)");

  Blocks blocks;
  bool bruteforce = false;
  auto* triplets = app.add_subcommand("triplets", "squared structure constants [k;ij]");
  add_blocks(triplets, blocks);
  triplets->add_flag("--bruteforce", bruteforce, "count brackets instead of using the closed forms");

  std::vector<std::string> metric;
  auto* ricci_cmd = app.add_subcommand("ricci", "Ricci components of the diagonal metric");
  add_blocks(ricci_cmd, blocks);
  ricci_cmd->add_option("--metric", metric, "metric values, e.g. x12=1/2");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "find and classify the Einstein metrics");
  add_blocks(solve_cmd, solve.blocks);
  solve_cmd->add_option("--method", solve.method, "exact, numeric, both, or auto (exact with numeric fallback)")
      ->check(CLI::IsMember({"exact", "numeric", "both", "auto"}));
  solve_cmd->add_option("--specialize", solve.specialize, "bindings such as x3=x2 or x12=1");
  solve_cmd->add_option("--nonzero", solve.nonzero, "extra polynomials required to be nonzero");
  solve_cmd->add_option("--tol", solve.tol, "width of reported enclosures, p/q or decimal");
  solve_cmd->add_option("--starts", solve.starts, "numeric multistart count");
  solve_cmd->add_option("--json", solve.json_path, "write JSON to this file");

  auto* classify_cmd = app.add_subcommand("classify", "scale and classify a rational Einstein metric");
  add_blocks(classify_cmd, blocks);
  classify_cmd->add_option("--metric", metric, "metric values, e.g. x12=1/2")->required();

  int n_min = 5, n_max = 9;
  std::string table_json;
  auto* table_cmd = app.add_subcommand("table", "count isometry classes for every partition of n");
  table_cmd->add_option("--n-min", n_min, "smallest n")->check(CLI::Range(5, 64));
  table_cmd->add_option("--n-max", n_max, "largest n")->check(CLI::Range(5, 64));
  table_cmd->add_option("--json", table_json, "write JSON to this file");

  std::vector<int> only;
  int verify_n_max = 9;
  std::string verify_json;
  auto* verify_cmd = app.add_subcommand("verify-paper", "run the acceptance checks");
  verify_cmd->add_option("--only", only, "criteria to run")->delimiter(',')->check(CLI::Range(1, 10));
  verify_cmd->add_option("--n-max", verify_n_max, "largest n in the table check")->check(CLI::Range(5, 9));
  verify_cmd->add_option("--json", verify_json, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cli::Config config = config_path.empty() ? cli::default_config() : cli::load_config(config_path);
    if (!format.empty()) cli::apply_setting(config, "output_format", format);
    if (!cache_dir.empty()) config.cache_dir = cache_dir;
    if (no_cache) config.use_cache = false;
    if (app.count("--threads")) config.threads = threads;

    if (*triplets) return run_triplets(blocks, bruteforce);
    if (*ricci_cmd) return run_ricci(blocks, metric, config);
    if (*solve_cmd) return run_solve(solve, config);
    if (*classify_cmd) return run_classify(blocks, metric, config);
    if (*table_cmd) {
      if (n_max < n_min) throw StructuralError("--n-max is below --n-min");
      return run_table(n_min, n_max, table_json, config);
    }
    if (*verify_cmd) return run_verify(only, verify_n_max, verify_json, config);
  } catch (const StructuralError& e) {
    std::cerr << "einso: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "einso: " << e.what() << '\n';
    return kDomain;
  } catch (const BudgetExceeded& e) {
    std::cerr << "einso: budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "einso: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}
