// Exhaustive verification over whole gate spaces and measure grids, plus
// the PID-vs-spectrum injectivity scan. Reports are deterministic: two runs
// with the same configuration produce identical content up to the duration
// field.

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boolfour/mapping.hpp"

namespace boolfour {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::array<double, 5> kDefaultPGrid = {0.1, 0.25, 0.5, 0.75,
                                                        0.9};

struct CheckStat {
  std::string id;  // e.g. "squared-map/p=0.75"
  int pass = 0;
  int fail = 0;
  double worst_residual = 0.0;
  std::string worst_gate;
};

struct DiscrepancyStat {
  std::string id;
  int flagged = 0;
  double worst_gap = 0.0;
  std::string worst_gate;
};

struct VerificationReport {
  std::string suite;
  int gate_count = 0;
  std::vector<std::string> measures;
  double tolerance = kDefaultTolerance;
  std::vector<CheckStat> checks;
  /// Every (gate, measure, check) row, in run order; the CSV export.
  std::vector<MappingRecord> records;
  /// Every failing record, with enough context to reproduce via the CLI.
  std::vector<MappingRecord> failures;
  /// Published-form mismatches; reported, never counted as failures.
  std::vector<DiscrepancyStat> discrepancies;
  /// Empirically tightest interval offsets seen (trivariate suite):
  /// per Phi entry, max of center-actual and actual-center over all gates.
  bool has_tightest = false;
  std::array<double, 7> tightest_lower{};
  std::array<double, 7> tightest_upper{};
  double duration_seconds = 0.0;
  bool all_passed = false;
};

/// Every bivariate mapping/identity check over all 16 gates, under the
/// uniform measure plus one biased measure per grid entry.
VerificationReport verify_bivariate(std::span<const double> p_grid,
                                    double tol = kDefaultTolerance);

/// Bounds containment, monotone/unate solved spectra, PID lattice
/// identities and published-form reports over all 256 trivariate gates.
VerificationReport verify_trivariate(std::span<const double> p_grid,
                                     double tol = kDefaultTolerance);

/// h(p)·Inf_i vs I(T;X_i|rest) for every gate of arity 2 and 3, every
/// variable, uniform plus grid measures (1e-12 uniform, 1e-9 biased).
VerificationReport influence_identity_sweep(std::span<const double> p_grid);

struct CollisionGroup {
  std::vector<std::string> gates;  // gate specs, ascending index order
  double max_spectrum_gap = 0.0;
};

struct ConjectureScanResult {
  std::string measure = kPidMeasure;
  double epsilon = 0.0;
  int gate_count = 0;
  int pid_group_count = 0;  // PID-equality classes under epsilon matching
  std::vector<CollisionGroup> collisions;  // equal PIDs, differing spectra
  double duration_seconds = 0.0;
  std::string note;
};

/// Groups the 256 trivariate gates by epsilon-equality of their 18 PID
/// atoms (transitive closure) under uniform inputs and flags groups whose
/// squared spectra differ by more than epsilon. An empty collision list
/// means the scan found no counterexample to PID-vector injectivity under
/// this measure.
ConjectureScanResult conjecture_scan(double epsilon);

struct SweepRow {
  double p = 0.0;
  int gate_count = 0;
  double max_equality_residual = 0.0;
  /// Smallest distance from a true squared coefficient to its interval
  /// edge over the swept gates; NaN for arities without interval bounds.
  double min_lower_slack = 0.0;
  double min_upper_slack = 0.0;
  bool all_pass = false;
};

/// One row per grid entry; sweeps a single gate when given, otherwise all
/// gates of the arity.
std::vector<SweepRow> sweep_residuals(const std::optional<TruthTable>& gate,
                                      int arity,
                                      std::span<const double> p_grid,
                                      double tol = kDefaultTolerance);

/// Worker cap: BOOLFOUR_THREADS when set, hardware concurrency otherwise.
unsigned thread_budget();

/// Runs fn(i) for i in [0, count) across the thread budget. Callers get
/// determinism by writing to disjoint slots indexed by i.
void parallel_over(size_t count, const std::function<void(size_t)>& fn);

}  // namespace boolfour
