// Command-line front end. Exit status: 0 success, 1 cross-check
// disagreement or failing sweep, 2 input or usage error.

#include "companion_smith/companion_smith.hpp"
#include "companion_smith/json_io.hpp"
#include "companion_smith/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace companion_smith;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kDisagreement = 1, kInputError = 2 };

struct Output {
  std::string format = "text";
  bool timing = false;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::optional<bool> agreement;
  std::string text;  // human rendering
};

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + values[i].get_str();
  return out.empty() ? "(none)" : out;
}

int emit(const Report& report, const Output& out, double elapsed_ms) {
  if (out.format == "json") {
    json j;
    j["schema"] = 1;
    j["command"] = report.command;
    j["inputs"] = report.inputs;
    j["result"] = report.result;
    if (report.agreement) j["agreement"] = *report.agreement;
    if (out.timing) j["elapsed_ms"] = elapsed_ms;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report.text;
    if (report.agreement) std::cout << "agreement: " << (*report.agreement ? "yes" : "NO") << "\n";
    if (out.timing) std::cout << "elapsed: " << elapsed_ms << " ms\n";
  }
  return report.agreement.value_or(true) ? kOk : kDisagreement;
}

IntMatrix load_matrix(const std::string& path) {
  if (path == "-") return read_matrix(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_matrix(in);
}

Report cmd_snf(const std::string& path, bool transforms) {
  const IntMatrix m = load_matrix(path);
  const SmithDecomposition snf = smith_form(m, transforms);
  Report r;
  r.command = "snf";
  r.inputs = {{"file", path}, {"rows", m.rows()}, {"cols", m.cols()}, {"transforms", transforms}};
  r.result = to_json(snf);
  std::ostringstream text;
  text << "invariant factors: " << join(snf.invariant_factors) << "\n";
  text << "rank: " << snf.rank << "\n";
  if (transforms) text << "left:\n" << to_text(*snf.left) << "right:\n" << to_text(*snf.right);
  r.text = text.str();
  return r;
}

Report cmd_polymat(const std::string& f_text, const std::string& g_text, bool check) {
  const IntPolynomial f = parse_polynomial(f_text);
  const IntPolynomial g = parse_polynomial(g_text);
  const TheoremCReduction red = theorem_c_reduce(f, g);
  const SmithDecomposition fast = smith_from_reduction(red);
  std::optional<Integer> gamma_r;
  if (fast.rank > 0) gamma_r = last_nonzero_determinantal_divisor(f, g);

  Report r;
  r.command = "polymat";
  r.inputs = {{"f", to_string(f)}, {"g", to_string(g)}, {"check", check}};
  r.result["reduction"] = {{"z", to_string(red.z)},
                           {"F", to_string(red.f_quot)},
                           {"G", to_string(red.g_quot)},
                           {"m", red.zero_block_size}};
  r.result["invariant_factors"] = to_json(fast.invariant_factors);
  r.result["rank"] = fast.rank;
  r.result["last_nonzero_determinantal_divisor"] = gamma_r ? to_json(*gamma_r) : json(nullptr);

  std::ostringstream text;
  text << "f(C_g) with f = " << to_string(f) << ", g = " << to_string(g) << "\n";
  text << "reduction: z = " << to_string(red.z) << ", F = " << to_string(red.f_quot)
       << ", G = " << to_string(red.g_quot) << ", m = " << red.zero_block_size << "\n";
  text << "invariant factors: " << join(fast.invariant_factors) << "\n";
  text << "rank: " << fast.rank << "\n";
  text << "last nonzero determinantal divisor: " << (gamma_r ? gamma_r->get_str() : "none")
       << "\n";
  if (check) {
    const auto engine = smith_form(poly_of_companion(f, g)).invariant_factors;
    r.result["engine_invariant_factors"] = to_json(engine);
    r.agreement = engine == fast.invariant_factors;
    text << "engine: " << join(engine) << "\n";
  }
  r.text = text.str();
  return r;
}

Report cmd_cyclotomic(std::size_t m, std::size_t n, bool check) {
  const SmithDecomposition closed = cyclotomic_companion_smith(m, n);
  Report r;
  r.command = "cyclotomic";
  r.inputs = {{"m", m}, {"n", n}, {"check", check}};
  r.result["invariant_factors"] = to_json(closed.invariant_factors);
  r.result["rank"] = closed.rank;
  std::ostringstream text;
  text << "Phi_" << m << "(C_Phi_" << n << ") invariant factors: " << join(closed.invariant_factors)
       << "\n";
  if (check) {
    const auto engine =
        smith_form(poly_of_companion(cyclotomic(m), cyclotomic(n))).invariant_factors;
    r.result["engine_invariant_factors"] = to_json(engine);
    r.agreement = engine == closed.invariant_factors;
    text << "engine: " << join(engine) << "\n";
  }
  r.text = text.str();
  return r;
}

Report cmd_brieskorn(std::size_t rr, std::size_t s, std::size_t n, bool verify_direct) {
  const AbelianGroup h = brieskorn_homology(rr, s, n);
  Report r;
  r.command = "brieskorn";
  r.inputs = {{"r", rr}, {"s", s}, {"n", n}, {"verify", verify_direct}};
  r.result["homology"] = to_json(h);
  r.result["text"] = to_string(h);
  r.result["invariant_factors"] = to_json(torus_circulant_smith(rr, s, n).invariant_factors);
  std::ostringstream text;
  text << "H_1(M(" << rr << ", " << s << ", " << n << ")) = " << to_string(h) << "\n";
  if (verify_direct) {
    const AbelianGroup direct = brieskorn_homology_by_elimination(rr, s, n);
    r.result["elimination"] = to_json(direct);
    r.agreement = direct == h;
    text << "by elimination: " << to_string(direct) << "\n";
  }
  r.text = text.str();
  return r;
}

Report cmd_verify(const std::string& suite, const verify::SweepConfig& cfg) {
  Report r;
  r.command = "verify";
  r.inputs = {{"suite", suite}, {"max", cfg.max}, {"seed", cfg.seed}, {"jobs", cfg.jobs},
              {"minor_cap", cfg.minor_cap}};
  json results = json::array();
  std::ostringstream text;
  std::size_t passed = 0, failed = 0;
  for (const auto& entry : verify::suites()) {
    if (suite != "all" && suite != entry.name) continue;
    const verify::SuiteResult res = entry.run(cfg);
    passed += res.passed;
    failed += res.failed;
    results.push_back(to_json(res));
    text << entry.name << ": " << res.passed << "/" << res.total() << " passed\n";
    for (const auto& f : res.failures) text << "  FAIL " << f << "\n";
  }
  r.result = {{"suites", results}, {"passed", passed}, {"failed", failed}};
  text << "total: " << passed << " passed, " << failed << " failed\n";
  r.agreement = failed == 0;
  r.text = text.str();
  return r;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names{"all"};
  for (const auto& e : verify::suites()) names.emplace_back(e.name);
  return names;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smith normal forms of companion-ring matrices f(C_g) over Z"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--timing", out.timing, "Report elapsed time");

  std::string matrix_path;
  bool transforms = false;
  auto* snf = app.add_subcommand("snf", "Smith form of a matrix file ('-' reads stdin)");
  snf->add_option("file", matrix_path, "Matrix in 'rows cols' text format")->required();
  snf->add_flag("--transforms", transforms, "Also print unimodular left and right transforms");

  std::string f_text, g_text;
  bool check = false;
  auto* polymat = app.add_subcommand("polymat", "Smith form of f(C_g) by gcd reduction");
  polymat->add_option("--f", f_text, "Polynomial f")->required();
  polymat->add_option("--g", g_text, "Monic polynomial g")->required();
  polymat->add_flag("--check", check, "Compare with the general engine");

  std::size_t m = 0, n = 0;
  auto* cyclo = app.add_subcommand("cyclotomic", "Smith form of Phi_m(C_Phi_n), m >= n");
  cyclo->add_option("--m", m)->required();
  cyclo->add_option("--n", n)->required();
  cyclo->add_flag("--check", check, "Compare with the general engine");

  std::size_t r = 0, s = 0, bn = 0;
  bool verify_direct = false;
  auto* brieskorn = app.add_subcommand("brieskorn", "First homology of M(r, s, n)");
  brieskorn->add_option("--r", r)->required();
  brieskorn->add_option("--s", s)->required();
  brieskorn->add_option("--n", bn)->required();
  brieskorn->add_flag("--verify", verify_direct, "Recompute from the relation circulant");

  std::string suite = "all";
  verify::SweepConfig cfg;
  cfg.minor_cap = minor_cap_from_env();
  auto* verify_cmd = app.add_subcommand("verify", "Run seeded verification sweeps");
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember(suite_names()))
      ->capture_default_str();
  verify_cmd->add_option("--max", cfg.max, "Suite scale, 0 for the default")
      ->capture_default_str();
  verify_cmd->add_option("--seed", cfg.seed)->capture_default_str();
  verify_cmd->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Report report;
    if (*snf)
      report = cmd_snf(matrix_path, transforms);
    else if (*polymat)
      report = cmd_polymat(f_text, g_text, check);
    else if (*cyclo)
      report = cmd_cyclotomic(m, n, check);
    else if (*brieskorn)
      report = cmd_brieskorn(r, s, bn, verify_direct);
    else
      report = cmd_verify(suite, cfg);
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return emit(report, out, elapsed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
