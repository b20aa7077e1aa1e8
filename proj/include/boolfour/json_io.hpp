// JSON and CSV rendering of every report. Output is deterministic for a
// fixed configuration: key order is fixed, doubles use shortest-round-trip
// form, and only the duration fields vary between runs.

#pragma once

#include <optional>
#include <string>

#include "boolfour/verify.hpp"

namespace boolfour {

std::string spectrum_json(const FourierSpectrum& sp);

std::string info_json(const InfoReport& report);

std::string pid_bivariate_json(const PIDBivariate& pid);
std::string pid_trivariate_json(const PIDTrivariate& pid);

/// Full single-gate report: spectrum, influences, stability samples,
/// information quantities, PID, and mapping residuals.
std::string analyze_json(const TruthTable& tt, const InputMeasure& m,
                         double tol = kDefaultTolerance);

std::string verification_json(const VerificationReport& report);
/// Per-record rows: gate,measure,check,residual,pass.
std::string verification_csv(const VerificationReport& report);

std::string conjecture_json(const ConjectureScanResult& result);

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace boolfour
