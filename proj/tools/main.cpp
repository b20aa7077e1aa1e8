// boolfour CLI: analyze single gates, run the exhaustive verification
// suites, run the PID/spectrum injectivity scan, and sweep bias grids.
// Built entirely on the C API (boolfour.h).
//
// Exit codes: 0 success, 1 check failure (or I/O failure), 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolfour/boolfour.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct StringGuard {
  char* value = nullptr;
  ~StringGuard() { bf_string_free(value); }
};

struct GateGuard {
  bf_gate* gate = nullptr;
  ~GateGuard() { bf_gate_free(gate); }
};

[[noreturn]] void fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitUsage);
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << text;
  if (!file.good()) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitCheckFailure;
  }
  return kExitOk;
}

std::vector<double> parse_p_list(const std::string& list) {
  std::vector<double> values;
  size_t start = 0;
  while (start <= list.size()) {
    const size_t comma = list.find(',', start);
    const std::string tok =
        list.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!tok.empty()) {
      try {
        values.push_back(std::stod(tok));
      } catch (const std::exception&) {
        fail_usage("bad p value '" + tok + "'");
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  for (double p : values) {
    if (!(p > 0.0 && p < 1.0)) fail_usage("p values must lie in (0, 1)");
  }
  return values;
}

std::vector<double> parse_p_grid(const std::string& grid) {
  const size_t c1 = grid.find(':');
  const size_t c2 = grid.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    fail_usage("--p-grid expects lo:hi:step");
  }
  double lo = 0, hi = 0, step = 0;
  try {
    lo = std::stod(grid.substr(0, c1));
    hi = std::stod(grid.substr(c1 + 1, c2 - c1 - 1));
    step = std::stod(grid.substr(c2 + 1));
  } catch (const std::exception&) {
    fail_usage("--p-grid expects numeric lo:hi:step");
  }
  if (step <= 0.0) fail_usage("--p-grid step must be positive");
  std::vector<double> values;
  for (double p = lo; p <= hi + 1e-12; p += step) values.push_back(p);
  for (double p : values) {
    if (!(p > 0.0 && p < 1.0)) fail_usage("p values must lie in (0, 1)");
  }
  return values;
}

std::string pretty_analyze(const std::string& json_text) {
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(json_text);
  std::string s;
  s += "gate " + j["gate"]["spec"].get<std::string>();
  if (j["gate"].contains("name")) {
    s += " (" + j["gate"]["name"].get<std::string>() + ")";
  }
  s += "  measure ";
  s += j["measure"].is_string() ? j["measure"].get<std::string>()
                                : "p=" + std::to_string(
                                      j["measure"]["p"].get<double>());
  s += "\n";
  s += "  expectation " + std::to_string(j["expectation"].get<double>()) +
       ", variance " + std::to_string(j["variance"].get<double>()) + "\n";
  s += "  influence:";
  for (const auto& v : j["influence"]["per_variable"]) {
    s += " " + std::to_string(v.get<double>());
  }
  s += "  (total " + std::to_string(j["influence"]["total"].get<double>()) +
       ")\n";
  if (j.contains("pid") && j["pid"].contains("si")) {
    s += "  pid (imin): si " + std::to_string(j["pid"]["si"].get<double>()) +
         ", ui_x " + std::to_string(j["pid"]["ui_x"].get<double>()) +
         ", ui_y " + std::to_string(j["pid"]["ui_y"].get<double>()) + ", ci " +
         std::to_string(j["pid"]["ci"].get<double>()) + "\n";
  }
  if (j.contains("mapping")) {
    for (const auto& rec : j["mapping"]) {
      s += "  mapping " + rec["check"].get<std::string>() + ": residual ";
      s += rec["residual"].is_number()
               ? std::to_string(rec["residual"].get<double>())
               : rec["residual"].get<std::string>();
      if (rec.contains("pass")) {
        s += rec["pass"].get<bool>() ? " (pass)" : " (FAIL)";
      }
      s += "\n";
    }
  }
  return s;
}

std::string pretty_verify(const std::string& json_text) {
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(json_text);
  std::string s = "suite " + j["suite"].get<std::string>() + ": " +
                  std::to_string(j["gate_count"].get<int>()) + " gates, " +
                  (j["all_passed"].get<bool>() ? "all checks passed"
                                               : "FAILURES PRESENT") +
                  "\n";
  for (const auto& c : j["checks"]) {
    char line[256];
    std::snprintf(line, sizeof(line), "  %-44s pass %6d  fail %4d  worst %.3e\n",
                  c["id"].get<std::string>().c_str(), c["pass"].get<int>(),
                  c["fail"].get<int>(),
                  c["worst_residual"].is_number()
                      ? c["worst_residual"].get<double>()
                      : -1.0);
    s += line;
  }
  if (!j["discrepancies"].empty()) {
    s += "  published-form discrepancies (reported, not failures):\n";
    for (const auto& d : j["discrepancies"]) {
      char line[256];
      std::snprintf(line, sizeof(line), "    %-42s flagged %5d  worst gap %.3e\n",
                    d["id"].get<std::string>().c_str(), d["flagged"].get<int>(),
                    d["worst_gap"].is_number() ? d["worst_gap"].get<double>()
                                               : -1.0);
      s += line;
    }
  }
  return s;
}

std::string pretty_conjecture(const std::string& json_text) {
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(json_text);
  std::string s = "conjecture scan (" + j["measure"].get<std::string>() +
                  "): " + std::to_string(j["gate_count"].get<int>()) +
                  " gates, " + std::to_string(j["pid_group_count"].get<int>()) +
                  " PID classes, " +
                  std::to_string(j["collision_groups"].size()) +
                  " collision groups\n";
  s += j["note"].get<std::string>() + "\n";
  return s;
}

int run_analyze(const std::string& gate_spec, double p, double tol,
                const std::string& format, const std::string& out_path,
                bool info_only) {
  GateGuard gate;
  if (bf_gate_parse(gate_spec.c_str(), &gate.gate) != BF_OK) {
    fail_usage(std::string("bad gate spec: ") + bf_last_error());
  }
  StringGuard json;
  if (bf_analyze_json(gate.gate, p, tol, &json.value) != BF_OK) {
    fail_usage(std::string("analyze failed: ") + bf_last_error());
  }
  std::string text = json.value;
  if (info_only) {
    text = nlohmann::ordered_json::parse(text)["info"].dump(2);
  }
  if (format == "pretty" && !info_only) {
    return emit(pretty_analyze(text), out_path);
  }
  if (format != "json" && format != "pretty") {
    fail_usage("analyze supports --format json|pretty");
  }
  return emit(text, out_path);
}

int run_verify(int arity, const std::vector<double>& grid, double tol,
               const std::string& format, const std::string& out_path) {
  int all_passed = 0;
  StringGuard text;
  bf_status status;
  if (format == "csv") {
    status = bf_verify_csv(arity, grid.empty() ? nullptr : grid.data(),
                           grid.size(), tol, &text.value, &all_passed);
  } else {
    status = bf_verify_json(arity, grid.empty() ? nullptr : grid.data(),
                            grid.size(), tol, &text.value, &all_passed);
  }
  if (status != BF_OK) {
    fail_usage(std::string("verify failed: ") + bf_last_error());
  }
  std::string rendered = text.value;
  if (format == "pretty") rendered = pretty_verify(rendered);
  const int emit_code = emit(rendered, out_path);
  if (emit_code != kExitOk) return emit_code;
  return all_passed ? kExitOk : kExitCheckFailure;
}

int run_conjecture(double epsilon, const std::string& format,
                   const std::string& out_path) {
  int collision_free = 0;
  StringGuard json;
  if (bf_conjecture_json(epsilon, &json.value, &collision_free) != BF_OK) {
    fail_usage(std::string("conjecture scan failed: ") + bf_last_error());
  }
  std::string rendered = json.value;
  if (format == "pretty") rendered = pretty_conjecture(rendered);
  const int emit_code = emit(rendered, out_path);
  if (emit_code != kExitOk) return emit_code;
  return collision_free ? kExitOk : kExitCheckFailure;
}

int run_sweep(const std::optional<std::string>& gate_spec, int arity,
              const std::vector<double>& grid, double tol,
              const std::string& out_path) {
  StringGuard csv;
  const bf_status status =
      bf_sweep_csv(gate_spec ? gate_spec->c_str() : nullptr, arity,
                   grid.empty() ? nullptr : grid.data(), grid.size(), tol,
                   &csv.value);
  if (status != BF_OK) {
    fail_usage(std::string("sweep failed: ") + bf_last_error());
  }
  return emit(csv.value, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier spectra, information quantities, and partial "
               "information decompositions of small Boolean gates"};
  app.require_subcommand(1);

  std::string gate_spec, p_list, p_grid, format = "json", out_path;
  double p = BF_UNIFORM;
  double tol = 1e-9;
  double epsilon = 1e-9;
  int arity = 3;
  bool info_only = false;

  CLI::App* analyze = app.add_subcommand("analyze", "analyze a single gate");
  analyze->add_option("--gate", gate_spec, "gate name, bits, or n:bits")
      ->required();
  analyze->add_option("--p", p, "bias P[X=+1]; omit for uniform");
  analyze->add_option("--tol", tol, "equality tolerance");
  analyze->add_option("--format", format, "json|pretty");
  analyze->add_option("--out", out_path, "output file (default stdout)");
  analyze->add_flag("--info", info_only, "emit only the information report");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--arity", arity, "gate arity (2 or 3)")->required();
  verify->add_option("--p", p_list, "comma-separated biased measures");
  verify->add_option("--tol", tol, "equality tolerance");
  verify->add_option("--format", format, "json|csv|pretty");
  verify->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* conjecture =
      app.add_subcommand("conjecture", "PID-vs-spectrum injectivity scan");
  conjecture->add_option("--epsilon", epsilon, "matching tolerance");
  conjecture->add_option("--format", format, "json|pretty");
  conjecture->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* sweep = app.add_subcommand("sweep", "per-p residual maxima");
  sweep->add_option("--gate", gate_spec, "sweep one gate (default: all)");
  sweep->add_option("--arity", arity, "arity when sweeping all gates");
  sweep->add_option("--p-grid", p_grid, "lo:hi:step (default 0.1:0.9:0.1)");
  sweep->add_option("--tol", tol, "equality tolerance");
  sweep->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (p != BF_UNIFORM && !(p > 0.0 && p < 1.0)) {
    fail_usage("--p must lie in (0, 1)");
  }

  if (analyze->parsed()) {
    return run_analyze(gate_spec, p, tol, format, out_path, info_only);
  }
  if (verify->parsed()) {
    if (arity != 2 && arity != 3) fail_usage("verify supports arity 2 or 3");
    if (format != "json" && format != "csv" && format != "pretty") {
      fail_usage("verify supports --format json|csv|pretty");
    }
    return run_verify(arity, parse_p_list(p_list), tol, format, out_path);
  }
  if (conjecture->parsed()) {
    if (format != "json" && format != "pretty") {
      fail_usage("conjecture supports --format json|pretty");
    }
    return run_conjecture(epsilon, format, out_path);
  }
  if (sweep->parsed()) {
    std::optional<std::string> gate;
    if (!gate_spec.empty()) gate = gate_spec;
    std::vector<double> grid = p_grid.empty()
                                   ? parse_p_grid("0.1:0.9:0.1")
                                   : parse_p_grid(p_grid);
    return run_sweep(gate, arity, grid, tol, out_path);
  }
  return kExitUsage;
}
