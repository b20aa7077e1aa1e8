// extern-C surface over the C++ core. Exceptions stop here: every entry
// point traps them and reports an error code plus a thread-local message.

#include "boolfour/boolfour.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "boolfour/json_io.hpp"

struct bf_gate {
  boolfour::TruthTable tt;
};

struct bf_spectrum {
  boolfour::FourierSpectrum sp;
};

namespace {

thread_local std::string g_last_error;

boolfour::InputMeasure measure_from(double p) {
  if (p == BF_UNIFORM) return boolfour::InputMeasure::uniform();
  return boolfour::InputMeasure::p_biased(p);  // throws outside (0,1)
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
bf_status guard(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return BF_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return BF_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return BF_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return BF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BF_ERR_INTERNAL;
  }
}

bf_status require(bool ok, const char* message) {
  if (ok) return BF_OK;
  g_last_error = message;
  return BF_ERR_INVALID_ARGUMENT;
}

std::vector<double> grid_from(const double* p_grid, size_t p_count) {
  if (!p_grid) return {};
  return std::vector<double>(p_grid, p_grid + p_count);
}

}  // namespace

extern "C" {

const char* bf_version(void) { return "1.0.0"; }

const char* bf_status_name(bf_status status) {
  switch (status) {
    case BF_OK:
      return "ok";
    case BF_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case BF_ERR_PARSE:
      return "parse error";
    case BF_ERR_DOMAIN:
      return "domain error";
    case BF_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* bf_last_error(void) { return g_last_error.c_str(); }

void bf_string_free(char* s) { delete[] s; }

bf_status bf_gate_parse(const char* spec, bf_gate** out) {
  if (bf_status s = require(spec && out, "spec and out must be non-null")) {
    return s;
  }
  const bf_status status = guard([&] {
    *out = new bf_gate{boolfour::make_gate(spec)};
    return BF_OK;
  });
  return status == BF_ERR_INVALID_ARGUMENT ? BF_ERR_PARSE : status;
}

void bf_gate_free(bf_gate* gate) { delete gate; }

int bf_gate_arity(const bf_gate* gate) { return gate ? gate->tt.arity() : 0; }

bf_status bf_gate_spec(const bf_gate* gate, char** out) {
  if (bf_status s = require(gate && out, "gate and out must be non-null")) {
    return s;
  }
  return guard([&] {
    *out = copy_string(gate->tt.spec());
    return BF_OK;
  });
}

bf_status bf_gate_value(const bf_gate* gate, int point, int* out) {
  if (bf_status s = require(gate && out, "gate and out must be non-null")) {
    return s;
  }
  return guard([&] {
    *out = gate->tt.value(point);
    return BF_OK;
  });
}

bf_status bf_gate_sensitivity(const bf_gate* gate, int point, int* out) {
  if (bf_status s = require(gate && out, "gate and out must be non-null")) {
    return s;
  }
  return guard([&] {
    *out = boolfour::sensitivity_at(gate->tt, point);
    return BF_OK;
  });
}

bf_status bf_gate_classify(const bf_gate* gate, int* monotone, int* antitone,
                           int* unate, int* signs) {
  if (bf_status s = require(gate != nullptr, "gate must be non-null")) {
    return s;
  }
  return guard([&] {
    const boolfour::GateClass cls = boolfour::classify(gate->tt);
    if (monotone) *monotone = cls.monotone ? 1 : 0;
    if (antitone) *antitone = cls.antitone ? 1 : 0;
    if (unate) *unate = cls.unate ? 1 : 0;
    if (signs) {
      for (int i = 0; i < gate->tt.arity(); ++i) {
        signs[i] = cls.unate ? cls.unate_signs[i] : 0;
      }
    }
    return BF_OK;
  });
}

bf_status bf_gate_expectation(const bf_gate* gate, double p, double* out) {
  if (bf_status s = require(gate && out, "gate and out must be non-null")) {
    return s;
  }
  return guard([&] {
    *out = boolfour::expectation(gate->tt, measure_from(p));
    return BF_OK;
  });
}

bf_status bf_transform(const bf_gate* gate, double p, bf_spectrum** out) {
  if (bf_status s = require(gate && out, "gate and out must be non-null")) {
    return s;
  }
  return guard([&] {
    *out = new bf_spectrum{boolfour::transform(gate->tt, measure_from(p))};
    return BF_OK;
  });
}

void bf_spectrum_free(bf_spectrum* sp) { delete sp; }

bf_status bf_spectrum_coefficient(const bf_spectrum* sp, unsigned subset_mask,
                                  double* out) {
  if (bf_status s = require(sp && out, "spectrum and out must be non-null")) {
    return s;
  }
  return guard([&] {
    *out = sp->sp.at(subset_mask);
    return BF_OK;
  });
}

bf_status bf_spectrum_influence(const bf_spectrum* sp, int variable,
                                double* out) {
  if (bf_status s = require(sp && out, "spectrum and out must be non-null")) {
    return s;
  }
  return guard([&] {
    *out = boolfour::influence(sp->sp, variable);
    return BF_OK;
  });
}

bf_status bf_spectrum_total_influence(const bf_spectrum* sp, double* out) {
  if (bf_status s = require(sp && out, "spectrum and out must be non-null")) {
    return s;
  }
  return guard([&] {
    *out = boolfour::total_influence(sp->sp);
    return BF_OK;
  });
}

bf_status bf_spectrum_variance(const bf_spectrum* sp, double* out) {
  if (bf_status s = require(sp && out, "spectrum and out must be non-null")) {
    return s;
  }
  return guard([&] {
    *out = boolfour::variance(sp->sp);
    return BF_OK;
  });
}

bf_status bf_spectrum_stability(const bf_spectrum* sp, double rho,
                                double* out) {
  if (bf_status s = require(sp && out, "spectrum and out must be non-null")) {
    return s;
  }
  return guard([&] {
    *out = boolfour::stability(sp->sp, rho);
    return BF_OK;
  });
}

bf_status bf_spectrum_noise_sensitivity(const bf_spectrum* sp, double delta,
                                        double* out) {
  if (bf_status s = require(sp && out, "spectrum and out must be non-null")) {
    return s;
  }
  return guard([&] {
    *out = boolfour::noise_sensitivity(sp->sp, delta);
    return BF_OK;
  });
}

bf_status bf_pid_bivariate(const bf_gate* gate, double p,
                           double out_terms[4]) {
  if (bf_status s =
          require(gate && out_terms, "gate and out must be non-null")) {
    return s;
  }
  return guard([&] {
    const boolfour::JointDistribution jd(gate->tt, measure_from(p));
    const boolfour::PIDBivariate pid = boolfour::pid_bivariate(jd);
    out_terms[0] = pid.si;
    out_terms[1] = pid.ui_x;
    out_terms[2] = pid.ui_y;
    out_terms[3] = pid.ci;
    return BF_OK;
  });
}

bf_status bf_analyze_json(const bf_gate* gate, double p, double tol,
                          char** out_json) {
  if (bf_status s =
          require(gate && out_json, "gate and out must be non-null")) {
    return s;
  }
  return guard([&] {
    *out_json =
        copy_string(boolfour::analyze_json(gate->tt, measure_from(p), tol));
    return BF_OK;
  });
}

bf_status bf_verify_json(int arity, const double* p_grid, size_t p_count,
                         double tol, char** out_json, int* all_passed) {
  if (bf_status s = require(out_json != nullptr, "out must be non-null")) {
    return s;
  }
  return guard([&] {
    if (arity != 2 && arity != 3) {
      throw std::invalid_argument("verify supports arity 2 or 3");
    }
    const std::vector<double> grid = grid_from(p_grid, p_count);
    const boolfour::VerificationReport report =
        arity == 2 ? boolfour::verify_bivariate(grid, tol)
                   : boolfour::verify_trivariate(grid, tol);
    *out_json = copy_string(boolfour::verification_json(report));
    if (all_passed) *all_passed = report.all_passed ? 1 : 0;
    return BF_OK;
  });
}

bf_status bf_verify_csv(int arity, const double* p_grid, size_t p_count,
                        double tol, char** out_csv, int* all_passed) {
  if (bf_status s = require(out_csv != nullptr, "out must be non-null")) {
    return s;
  }
  return guard([&] {
    if (arity != 2 && arity != 3) {
      throw std::invalid_argument("verify supports arity 2 or 3");
    }
    const std::vector<double> grid = grid_from(p_grid, p_count);
    const boolfour::VerificationReport report =
        arity == 2 ? boolfour::verify_bivariate(grid, tol)
                   : boolfour::verify_trivariate(grid, tol);
    *out_csv = copy_string(boolfour::verification_csv(report));
    if (all_passed) *all_passed = report.all_passed ? 1 : 0;
    return BF_OK;
  });
}

bf_status bf_conjecture_json(double epsilon, char** out_json,
                             int* collision_free) {
  if (bf_status s = require(out_json != nullptr, "out must be non-null")) {
    return s;
  }
  return guard([&] {
    const boolfour::ConjectureScanResult result =
        boolfour::conjecture_scan(epsilon);
    *out_json = copy_string(boolfour::conjecture_json(result));
    if (collision_free) *collision_free = result.collisions.empty() ? 1 : 0;
    return BF_OK;
  });
}

bf_status bf_sweep_csv(const char* gate_spec, int arity, const double* p_grid,
                       size_t p_count, double tol, char** out_csv) {
  if (bf_status s = require(out_csv != nullptr, "out must be non-null")) {
    return s;
  }
  return guard([&] {
    std::optional<boolfour::TruthTable> gate;
    if (gate_spec) gate = boolfour::make_gate(gate_spec);
    const std::vector<double> grid = grid_from(p_grid, p_count);
    const std::vector<boolfour::SweepRow> rows =
        boolfour::sweep_residuals(gate, arity, grid, tol);
    *out_csv = copy_string(boolfour::sweep_csv(rows));
    return BF_OK;
  });
}

}  // extern "C"
