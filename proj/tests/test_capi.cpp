#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "boolfour/boolfour.h"

namespace {

struct Gate {
  bf_gate* g = nullptr;
  explicit Gate(const char* spec) { REQUIRE(bf_gate_parse(spec, &g) == BF_OK); }
  ~Gate() { bf_gate_free(g); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(bf_version() != nullptr);
  CHECK(std::strcmp(bf_status_name(BF_OK), "ok") == 0);
  CHECK(std::strcmp(bf_status_name(BF_ERR_PARSE), "parse error") == 0);
}

TEST_CASE("gate parse and inspect") {
  Gate andg("AND");
  CHECK(bf_gate_arity(andg.g) == 2);

  char* spec = nullptr;
  REQUIRE(bf_gate_spec(andg.g, &spec) == BF_OK);
  CHECK(std::string(spec) == "2:0001");
  bf_string_free(spec);

  int value = 0;
  REQUIRE(bf_gate_value(andg.g, 3, &value) == BF_OK);
  CHECK(value == -1);
  CHECK(bf_gate_value(andg.g, 4, &value) == BF_ERR_INVALID_ARGUMENT);

  int sensitivity = 0;
  REQUIRE(bf_gate_sensitivity(andg.g, 3, &sensitivity) == BF_OK);
  CHECK(sensitivity == 2);

  int monotone = 0, antitone = 0, unate = 0;
  int signs[2] = {0, 0};
  REQUIRE(bf_gate_classify(andg.g, &monotone, &antitone, &unate, signs) ==
          BF_OK);
  CHECK(monotone == 1);
  CHECK(antitone == 0);
  CHECK(unate == 1);
  CHECK(signs[0] == 1);
  CHECK(signs[1] == 1);

  double e = 0.0;
  REQUIRE(bf_gate_expectation(andg.g, BF_UNIFORM, &e) == BF_OK);
  CHECK(e == doctest::Approx(0.5));
  REQUIRE(bf_gate_expectation(andg.g, 0.9, &e) == BF_OK);
  CHECK(e == doctest::Approx(0.98).epsilon(1e-12));
}

TEST_CASE("parse errors carry messages") {
  bf_gate* g = nullptr;
  CHECK(bf_gate_parse("NOPE", &g) == BF_ERR_PARSE);
  CHECK(std::string(bf_last_error()).find("NOPE") != std::string::npos);
  CHECK(bf_gate_parse(nullptr, &g) == BF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("spectrum handles") {
  Gate xorg("XOR");
  bf_spectrum* sp = nullptr;
  REQUIRE(bf_transform(xorg.g, BF_UNIFORM, &sp) == BF_OK);
  double c = 0.0;
  REQUIRE(bf_spectrum_coefficient(sp, 3, &c) == BF_OK);
  CHECK(c == doctest::Approx(1.0));
  double inf = 0.0;
  REQUIRE(bf_spectrum_influence(sp, 0, &inf) == BF_OK);
  CHECK(inf == doctest::Approx(1.0));
  double total = 0.0;
  REQUIRE(bf_spectrum_total_influence(sp, &total) == BF_OK);
  CHECK(total == doctest::Approx(2.0));
  double var = 0.0;
  REQUIRE(bf_spectrum_variance(sp, &var) == BF_OK);
  CHECK(var == doctest::Approx(1.0));
  double stab = 0.0;
  REQUIRE(bf_spectrum_stability(sp, 0.5, &stab) == BF_OK);
  CHECK(stab == doctest::Approx(0.25));
  double ns = 0.0;
  REQUIRE(bf_spectrum_noise_sensitivity(sp, 0.1, &ns) == BF_OK);
  CHECK(ns == doctest::Approx(0.18));
  CHECK(bf_spectrum_coefficient(sp, 4, &c) == BF_ERR_INVALID_ARGUMENT);
  bf_spectrum_free(sp);

  // stability is rejected on biased-basis spectra
  bf_spectrum* biased = nullptr;
  REQUIRE(bf_transform(xorg.g, 0.75, &biased) == BF_OK);
  CHECK(bf_spectrum_stability(biased, 0.5, &stab) == BF_ERR_DOMAIN);
  bf_spectrum_free(biased);

  CHECK(bf_transform(xorg.g, 1.5, &sp) == BF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("bivariate PID") {
  Gate xorg("XOR");
  double terms[4] = {0, 0, 0, 0};
  REQUIRE(bf_pid_bivariate(xorg.g, BF_UNIFORM, terms) == BF_OK);
  CHECK(terms[0] == doctest::Approx(0.0));
  CHECK(terms[3] == doctest::Approx(1.0));

  Gate maj("MAJ3");
  CHECK(bf_pid_bivariate(maj.g, BF_UNIFORM, terms) == BF_ERR_DOMAIN);
}

TEST_CASE("analyze JSON") {
  Gate xorg("XOR");
  char* text = nullptr;
  REQUIRE(bf_analyze_json(xorg.g, BF_UNIFORM, 1e-9, &text) == BF_OK);
  const nlohmann::json j = nlohmann::json::parse(text);
  bf_string_free(text);
  CHECK(j["gate"]["spec"] == "2:0110");
  CHECK(j["gate"]["name"] == "XOR");
  CHECK(j["spectrum"]["coeffs"]["3"].get<double>() == doctest::Approx(1.0));
  CHECK(j["pid"]["ci"].get<double>() == doctest::Approx(1.0));
  CHECK(j["pid"]["measure"] == "imin");
  bool found_map = false;
  for (const auto& rec : j["mapping"]) {
    if (rec["check"] == "squared-map") {
      found_map = true;
      CHECK(rec["pass"].get<bool>());
    }
  }
  CHECK(found_map);

  // biased analyze carries the measure
  REQUIRE(bf_analyze_json(xorg.g, 0.75, 1e-9, &text) == BF_OK);
  const nlohmann::json jb = nlohmann::json::parse(text);
  bf_string_free(text);
  CHECK(jb["measure"]["p"].get<double>() == doctest::Approx(0.75));
  CHECK_FALSE(jb.contains("stability"));
}

TEST_CASE("verify JSON and CSV") {
  char* text = nullptr;
  int all_passed = 0;
  REQUIRE(bf_verify_json(2, nullptr, 0, 1e-9, &text, &all_passed) == BF_OK);
  const nlohmann::json j = nlohmann::json::parse(text);
  bf_string_free(text);
  CHECK(all_passed == 1);
  CHECK(j["suite"] == "bivariate");
  CHECK(j["all_passed"].get<bool>());

  const double grid[1] = {0.75};
  REQUIRE(bf_verify_csv(2, grid, 1, 1e-9, &text, &all_passed) == BF_OK);
  CHECK(all_passed == 1);
  CHECK(std::string(text).rfind("gate,measure,check,residual,pass\n", 0) == 0);
  bf_string_free(text);

  CHECK(bf_verify_json(5, nullptr, 0, 1e-9, &text, &all_passed) ==
        BF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("conjecture JSON") {
  char* text = nullptr;
  int collision_free = 0;
  REQUIRE(bf_conjecture_json(1e-9, &text, &collision_free) == BF_OK);
  const nlohmann::json j = nlohmann::json::parse(text);
  bf_string_free(text);
  CHECK(collision_free == 1);
  CHECK(j["measure"] == "imin");
  CHECK(j["collision_groups"].empty());
}

TEST_CASE("sweep CSV") {
  char* text = nullptr;
  const double grid[3] = {0.25, 0.5, 0.75};
  REQUIRE(bf_sweep_csv("MAJ3", 3, grid, 3, 1e-9, &text) == BF_OK);
  const std::string csv = text;
  bf_string_free(text);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(csv.find("0.25,1,") != std::string::npos);

  CHECK(bf_sweep_csv("BAD", 3, grid, 3, 1e-9, &text) ==
        BF_ERR_INVALID_ARGUMENT);
}
