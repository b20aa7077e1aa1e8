#include "boolfour/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

namespace boolfour {

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kDiscrepancyTol = 1e-6;
constexpr std::array<double, 7> kRhoGrid = {-1.0, -0.6, -0.3, 0.0,
                                            0.3,  0.6,  1.0};
constexpr std::array<double, 6> kDeltaGrid = {0.0, 0.1, 0.25, 0.5, 0.75, 1.0};

double sq(double v) { return v * v; }

// One gate's outcomes under one measure; merged into the report in gate
// order so runs are deterministic regardless of scheduling.
struct GateOutcome {
  struct Row {
    std::string check;
    double residual;
    bool pass;
  };
  std::string gate;
  std::vector<Row> rows;
  std::vector<std::pair<std::string, double>> discrepancies;  // id, gap
  bool has_slack = false;
  std::array<double, 7> slack_lower{};  // center - actual
  std::array<double, 7> slack_upper{};  // actual - center
};

class ReportBuilder {
 public:
  explicit ReportBuilder(double tol) {
    report_.tolerance = tol;
    report_.tightest_lower.fill(-std::numeric_limits<double>::infinity());
    report_.tightest_upper.fill(-std::numeric_limits<double>::infinity());
  }

  void merge(const GateOutcome& out, const std::string& measure_label) {
    for (const GateOutcome::Row& row : out.rows) {
      CheckStat& stat = stats_[row.check + "/" + measure_label];
      MappingRecord rec;
      rec.gate = out.gate;
      rec.measure = measure_label;
      rec.check = row.check;
      rec.residual = row.residual;
      rec.pass = row.pass;
      if (row.pass) {
        ++stat.pass;
      } else {
        ++stat.fail;
        report_.failures.push_back(rec);
      }
      report_.records.push_back(std::move(rec));
      if (row.residual > stat.worst_residual) {
        stat.worst_residual = row.residual;
        stat.worst_gate = out.gate;
      }
    }
    for (const auto& [id, gap] : out.discrepancies) {
      DiscrepancyStat& d = discs_[id + "/" + measure_label];
      ++d.flagged;
      if (gap > d.worst_gap) {
        d.worst_gap = gap;
        d.worst_gate = out.gate;
      }
    }
    if (out.has_slack) {
      report_.has_tightest = true;
      for (int i = 0; i < 7; ++i) {
        report_.tightest_lower[i] =
            std::max(report_.tightest_lower[i], out.slack_lower[i]);
        report_.tightest_upper[i] =
            std::max(report_.tightest_upper[i], out.slack_upper[i]);
      }
    }
  }

  VerificationReport finish(std::string suite, int gate_count,
                            std::vector<std::string> measures,
                            double duration_seconds) {
    report_.suite = std::move(suite);
    report_.gate_count = gate_count;
    report_.measures = std::move(measures);
    report_.duration_seconds = duration_seconds;
    for (auto& [id, stat] : stats_) {
      stat.id = id;
      report_.checks.push_back(stat);
    }
    for (auto& [id, d] : discs_) {
      d.id = id;
      report_.discrepancies.push_back(d);
    }
    report_.all_passed =
        std::all_of(report_.checks.begin(), report_.checks.end(),
                    [](const CheckStat& s) { return s.fail == 0; });
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  std::map<std::string, CheckStat> stats_;  // ordered, deterministic
  std::map<std::string, DiscrepancyStat> discs_;
};

void add_row(GateOutcome& out, std::string check, double residual,
             double tol) {
  out.rows.push_back({std::move(check), residual, residual <= tol});
}

void add_pass_flag(GateOutcome& out, std::string check, bool pass,
                   double residual) {
  out.rows.push_back({std::move(check), residual, pass});
}

// Checks shared by both arities: Parseval, spectral-vs-direct information
// quantities, and the influence identity.
void common_checks(const TruthTable& tt, const InputMeasure& m,
                   const FourierSpectrum& sp, const JointDistribution& jd,
                   double tol, GateOutcome& out) {
  const int pts = tt.points();

  double parseval = 0.0;
  for (double c : sp.coeff) parseval += c * c;
  add_row(out, "parseval", std::abs(parseval - 1.0), kExactTol);

  double worst_h = 0.0, worst_mi = 0.0;
  const double ht = jd.target_entropy();
  const double h_empty = binary_entropy(0.5 * (1.0 + sp.empty_coefficient()));
  for (int mask = 0; mask < pts; ++mask) {
    const double direct = cond_entropy_direct(jd, mask);
    const double spectral = cond_entropy_fourier(sp, mask);
    worst_h = std::max(worst_h, std::abs(direct - spectral));
    worst_mi =
        std::max(worst_mi, std::abs((ht - direct) - (h_empty - spectral)));
  }
  add_row(out, "cond-entropy-spectral", worst_h, tol);
  add_row(out, "mi-spectral", worst_mi, tol);

  const double h_input = m.entropy_bits();
  double worst_inf = 0.0;
  for (int i = 0; i < tt.arity(); ++i) {
    worst_inf = std::max(
        worst_inf, std::abs(h_input * influence(sp, i) - conditional_mi(jd, i)));
  }
  add_row(out, "influence-identity", worst_inf,
          m.is_uniform_kind() ? kExactTol : tol);
}

void bivariate_checks(const TruthTable& tt, const InputMeasure& m, double tol,
                      GateOutcome& out) {
  const FourierSpectrum sp = transform(tt, m);
  const JointDistribution jd(tt, m);
  const GateClass cls = classify(tt);
  out.gate = tt.spec();

  common_checks(tt, m, sp, jd, tol, out);

  const PIDBivariate pid = pid_bivariate(jd);
  const double ef = sp.empty_coefficient();
  const double ef_sq = ef * ef;
  const double actual_xy = sq(sp.at(0b11));
  const double actual_x = sq(sp.at(0b01));
  const double actual_y = sq(sp.at(0b10));

  {
    const double i_xy = mutual_information_direct(jd, 0b11);
    const double i_x = mutual_information_direct(jd, 0b01);
    const double i_y = mutual_information_direct(jd, 0b10);
    const double r = std::max(
        {std::abs(pid.si + pid.ui_x + pid.ui_y + pid.ci - i_xy),
         std::abs(pid.si + pid.ui_x - i_x), std::abs(pid.si + pid.ui_y - i_y)});
    add_row(out, "pid-identities", r, kExactTol);
    const double min_atom =
        std::min({pid.si, pid.ui_x, pid.ui_y, pid.ci});
    add_pass_flag(out, "pid-nonnegativity", min_atom >= -kExactTol,
                  std::max(0.0, -min_atom));
  }

  {
    const BivariateSquared pred = p_biased_bivariate(pid, ef_sq, m);
    const double r =
        std::max({std::abs(pred.xy - actual_xy), std::abs(pred.x - actual_x),
                  std::abs(pred.y - actual_y)});
    add_row(out, "squared-map", r, tol);
    if (!m.is_uniform_kind()) {
      const BivariateSquared printed = p_biased_bivariate_printed(pid, ef_sq, m);
      const double gap =
          std::max({std::abs(printed.xy - pred.xy),
                    std::abs(printed.x - pred.x), std::abs(printed.y - pred.y)});
      if (gap > kDiscrepancyTol) {
        out.discrepancies.emplace_back("printed-scaling", gap);
      }
    }
  }

  if (m.is_uniform_kind()) {
    const BivariateSquared pred = phi_bivariate_stab(pid, stability(sp, -1.0));
    const double r =
        std::max({std::abs(pred.xy - actual_xy), std::abs(pred.x - actual_x),
                  std::abs(pred.y - actual_y)});
    add_row(out, "squared-map-stab", r, tol);
  }

  if (cls.monotone || cls.antitone) {
    const Direction dir =
        cls.monotone ? Direction::Increasing : Direction::Decreasing;
    const MonotoneBivariateMap map = p_biased_bivariate_monotone(pid, m, dir);
    const double r = std::max({std::abs(map.coeff_x - sp.at(0b01)),
                               std::abs(map.coeff_y - sp.at(0b10)),
                               std::abs(map.sq_xy - actual_xy),
                               std::abs(map.sq_xy_alt - actual_xy)});
    add_row(out, "monotone-map", r, tol);
    add_row(out, "monotone-consistency", std::abs(map.consistency_residual),
            tol);
    if (!m.is_uniform_kind()) {
      const double gap = std::abs(map.sq_xy_printed - map.sq_xy);
      if (gap > kDiscrepancyTol) {
        out.discrepancies.emplace_back("printed-degree2-form", gap);
      }
    }
  }

  if (cls.unate) {
    const MonotoneBivariateMap map = p_biased_bivariate_unate(
        pid, m, cls.unate_signs[0], cls.unate_signs[1]);
    const double r = std::max(std::abs(map.coeff_x - sp.at(0b01)),
                              std::abs(map.coeff_y - sp.at(0b10)));
    add_row(out, "unate-sign", r, tol);
  }

  if (m.is_uniform_kind()) {
    const double alpha = std::min(jd.target_prob(1), jd.target_prob(-1));
    const FunctionalsReport fn = functionals_from_pid(
        pid, ef_sq, alpha, mutual_information_direct(jd, 0b11),
        co_information(jd), 0.0, 0.0);
    add_row(out, "influence-from-pid",
            std::abs(fn.influence - total_influence(sp)), kExactTol);
    if (alpha > 0.0) {  // non-constant gates
      const double viol = std::max({0.0, fn.chain.lower - fn.chain.middle,
                                    fn.chain.middle - fn.chain.upper});
      add_pass_flag(out, "poincare-chain", fn.chain.holds, viol);
    }
    double worst_stab = 0.0, worst_stab_printed = 0.0;
    for (double rho : kRhoGrid) {
      const double exact = stability_from_pid(pid, ef_sq, rho);
      worst_stab = std::max(worst_stab, std::abs(exact - stability(sp, rho)));
      worst_stab_printed =
          std::max(worst_stab_printed,
                   std::abs(exact - stability_from_pid_printed(pid, ef_sq, rho)));
    }
    add_row(out, "stability-from-pid", worst_stab, tol);
    double worst_ns = 0.0, worst_ns_printed = 0.0;
    for (double delta : kDeltaGrid) {
      const double exact = noise_sensitivity_from_pid(pid, ef_sq, delta);
      worst_ns =
          std::max(worst_ns, std::abs(exact - noise_sensitivity(sp, delta)));
      worst_ns_printed = std::max(
          worst_ns_printed,
          std::abs(exact - noise_sensitivity_from_pid_printed(pid, ef_sq, delta)));
    }
    add_row(out, "noise-sensitivity-from-pid", worst_ns, tol);
    if (worst_stab_printed > kDiscrepancyTol) {
      out.discrepancies.emplace_back("printed-stab-form", worst_stab_printed);
    }
    if (worst_ns_printed > kDiscrepancyTol) {
      out.discrepancies.emplace_back("printed-ns-form", worst_ns_printed);
    }
  }
}

void trivariate_checks(const TruthTable& tt, const InputMeasure& m, double tol,
                       GateOutcome& out) {
  const FourierSpectrum sp = transform(tt, m);
  const JointDistribution jd(tt, m);
  const GateClass cls = classify(tt);
  out.gate = tt.spec();

  common_checks(tt, m, sp, jd, tol, out);

  const PIDTrivariate pid = pid_trivariate(jd);
  const PsiVector psi = psi_sums(jd);
  const double ef = sp.empty_coefficient();

  {
    const double atom_sum =
        std::accumulate(pid.atoms.begin(), pid.atoms.end(), 0.0);
    add_row(out, "pid-atoms-sum", std::abs(atom_sum - pid.joint_mi), tol);
    const double min_atom =
        *std::min_element(pid.atoms.begin(), pid.atoms.end());
    add_pass_flag(out, "pid-nonnegativity", min_atom >= -kExactTol,
                  std::max(0.0, -min_atom));
    const std::array<double, 3> sums = pid.five_atom_sums();
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      worst = std::max(worst, std::abs(sums[i] - psi.values[i]));
    }
    add_row(out, "psi-five-atom-identity", worst, tol);
  }

  {
    const CoefficientBounds bounds = phi_trivariate_bounds(pid, m);
    double violation = 0.0;
    out.has_slack = true;
    for (int i = 0; i < 7; ++i) {
      const CoefficientBounds::Entry& e = bounds.entries[i];
      const double actual = sq(sp.at(e.mask));
      violation = std::max({violation, e.lo - actual, actual - e.hi});
      out.slack_lower[i] = e.center - actual;
      out.slack_upper[i] = actual - e.center;
    }
    add_pass_flag(out, "interval-bounds", violation <= kExactTol,
                  std::max(0.0, violation));
    if (!m.is_uniform_kind()) {
      const CoefficientBounds printed = phi_trivariate_bounds_printed(pid, m);
      double pv = 0.0;
      for (const CoefficientBounds::Entry& e : printed.entries) {
        const double actual = sq(sp.at(e.mask));
        pv = std::max({pv, e.lo - actual, actual - e.hi});
      }
      if (pv > kDiscrepancyTol) {
        out.discrepancies.emplace_back("printed-scaling-bounds", pv);
      }
    }
  }

  if (cls.monotone || cls.antitone) {
    const Direction dir =
        cls.monotone ? Direction::Increasing : Direction::Decreasing;
    try {
      const TrivariateSolution sol = solve_trivariate_monotone(psi, ef, m, dir);
      const double r = std::max({std::abs(sol.first_order[0] - sp.at(0b001)),
                                 std::abs(sol.first_order[1] - sp.at(0b010)),
                                 std::abs(sol.first_order[2] - sp.at(0b100)),
                                 std::abs(sol.sq_xyz - sq(sp.at(0b111))),
                                 std::abs(sol.sq_xy - sq(sp.at(0b011))),
                                 std::abs(sol.sq_xz - sq(sp.at(0b101))),
                                 std::abs(sol.sq_yz - sq(sp.at(0b110)))});
      add_row(out, "monotone-system", r, tol);
    } catch (const std::exception&) {
      add_pass_flag(out, "monotone-system", false,
                    std::numeric_limits<double>::infinity());
    }
    const PrintedFormulaReport printed =
        check_printed_trivariate_formulas(psi, ef, m, dir);
    if (printed.printed_formula_discrepancy) {
      double worst = 0.0;
      for (double r : printed.residual_vs_solver) {
        worst = std::max(worst, std::abs(r));
      }
      out.discrepancies.emplace_back("printed-closed-forms", worst);
    }
  }

  if (cls.unate) {
    try {
      const TrivariateSolution sol = phi_trivariate_unate(
          psi,
          {cls.unate_signs[0], cls.unate_signs[1], cls.unate_signs[2]}, ef, m);
      const double r = std::max({std::abs(sol.first_order[0] - sp.at(0b001)),
                                 std::abs(sol.first_order[1] - sp.at(0b010)),
                                 std::abs(sol.first_order[2] - sp.at(0b100)),
                                 std::abs(sol.sq_xyz - sq(sp.at(0b111))),
                                 std::abs(sol.sq_xy - sq(sp.at(0b011))),
                                 std::abs(sol.sq_xz - sq(sp.at(0b101))),
                                 std::abs(sol.sq_yz - sq(sp.at(0b110)))});
      add_row(out, "unate-sign", r, tol);
    } catch (const std::exception&) {
      add_pass_flag(out, "unate-sign", false,
                    std::numeric_limits<double>::infinity());
    }
  }
}

std::vector<InputMeasure> measures_for(std::span<const double> p_grid) {
  std::vector<InputMeasure> measures;
  measures.push_back(InputMeasure::uniform());
  for (double p : p_grid) measures.push_back(InputMeasure::p_biased(p));
  return measures;
}

using PerGateFn = std::function<void(const TruthTable&, const InputMeasure&,
                                     double, GateOutcome&)>;

VerificationReport run_suite(const std::string& suite, int arity,
                             std::span<const double> p_grid, double tol,
                             const PerGateFn& fn) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<TruthTable> gates = enumerate_gates(arity);
  const std::vector<InputMeasure> measures = measures_for(p_grid);

  ReportBuilder builder(tol);
  std::vector<std::string> labels;
  for (const InputMeasure& m : measures) {
    labels.push_back(m.label());
    std::vector<GateOutcome> outcomes(gates.size());
    parallel_over(gates.size(), [&](size_t g) {
      fn(gates[g], m, tol, outcomes[g]);
    });
    for (const GateOutcome& out : outcomes) builder.merge(out, m.label());
  }

  // Arity-3 self-check: the increasing-monotone count must be the Dedekind
  // count 20.
  if (arity == 3) {
    int monotone = 0;
    for (const TruthTable& tt : gates) {
      if (classify(tt).monotone) ++monotone;
    }
    GateOutcome count_check;
    count_check.gate = "(suite)";
    add_pass_flag(count_check, "monotone-count", monotone == 20,
                  std::abs(monotone - 20));
    builder.merge(count_check, "uniform");
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return builder.finish(suite, static_cast<int>(gates.size()),
                        std::move(labels), seconds);
}

}  // namespace

unsigned thread_budget() {
  if (const char* env = std::getenv("BOOLFOUR_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void parallel_over(size_t count, const std::function<void(size_t)>& fn) {
  const unsigned budget =
      std::min<size_t>(thread_budget(), count ? count : 1);
  if (budget <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(budget);
  for (unsigned w = 0; w < budget; ++w) {
    workers.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (std::thread& t : workers) t.join();
}

VerificationReport verify_bivariate(std::span<const double> p_grid,
                                    double tol) {
  return run_suite("bivariate", 2, p_grid, tol, bivariate_checks);
}

VerificationReport verify_trivariate(std::span<const double> p_grid,
                                     double tol) {
  return run_suite("trivariate", 3, p_grid, tol, trivariate_checks);
}

VerificationReport influence_identity_sweep(std::span<const double> p_grid) {
  const auto start = std::chrono::steady_clock::now();
  ReportBuilder builder(kDefaultTolerance);
  const std::vector<InputMeasure> measures = measures_for(p_grid);
  std::vector<std::string> labels;
  int total_gates = 0;
  for (int arity : {2, 3}) {
    const std::vector<TruthTable> gates = enumerate_gates(arity);
    total_gates += static_cast<int>(gates.size());
    for (const InputMeasure& m : measures) {
      const double tol = m.is_uniform_kind() ? kExactTol : kDefaultTolerance;
      std::vector<GateOutcome> outcomes(gates.size());
      parallel_over(gates.size(), [&](size_t g) {
        const TruthTable& tt = gates[g];
        const FourierSpectrum sp = transform(tt, m);
        const JointDistribution jd(tt, m);
        GateOutcome& out = outcomes[g];
        out.gate = tt.spec();
        for (int i = 0; i < arity; ++i) {
          const double residual = std::abs(
              m.entropy_bits() * influence(sp, i) - conditional_mi(jd, i));
          add_row(out, "influence-identity/n=" + std::to_string(arity),
                  residual, tol);
        }
      });
      for (const GateOutcome& out : outcomes) builder.merge(out, m.label());
    }
  }
  for (const InputMeasure& m : measures) labels.push_back(m.label());
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return builder.finish("influence-identity", total_gates, std::move(labels),
                        seconds);
}

std::vector<SweepRow> sweep_residuals(const std::optional<TruthTable>& gate,
                                      int arity,
                                      std::span<const double> p_grid,
                                      double tol) {
  if (gate) arity = gate->arity();
  if (arity != 2 && arity != 3) {
    throw std::invalid_argument("sweep supports arity 2 or 3");
  }
  std::vector<TruthTable> gates;
  if (gate) {
    gates.push_back(*gate);
  } else {
    gates = enumerate_gates(arity);
  }
  const auto checks = arity == 2 ? bivariate_checks : trivariate_checks;

  std::vector<SweepRow> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) {
    const InputMeasure m = InputMeasure::p_biased(p);
    std::vector<GateOutcome> outcomes(gates.size());
    parallel_over(gates.size(), [&](size_t g) {
      checks(gates[g], m, tol, outcomes[g]);
    });
    SweepRow row;
    row.p = p;
    row.gate_count = static_cast<int>(gates.size());
    row.all_pass = true;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.min_lower_slack = arity == 3
                              ? std::numeric_limits<double>::infinity()
                              : nan;
    row.min_upper_slack = row.min_lower_slack;
    for (const GateOutcome& out : outcomes) {
      for (const GateOutcome::Row& r : out.rows) {
        if (std::isfinite(r.residual)) {
          row.max_equality_residual =
              std::max(row.max_equality_residual, r.residual);
        }
        row.all_pass = row.all_pass && r.pass;
      }
      if (out.has_slack) {
        for (int i = 0; i < 7; ++i) {
          const double hi_offset = (i >= 1 && i <= 3) ? 4.0 / 8.0 : 5.0 / 8.0;
          row.min_lower_slack =
              std::min(row.min_lower_slack, 2.0 / 8.0 - out.slack_lower[i]);
          row.min_upper_slack =
              std::min(row.min_upper_slack, hi_offset - out.slack_upper[i]);
        }
      }
    }
    rows.push_back(row);
  }
  return rows;
}

ConjectureScanResult conjecture_scan(double epsilon) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<TruthTable> gates = enumerate_gates(3);
  const InputMeasure m = InputMeasure::uniform();
  const size_t count = gates.size();

  std::vector<std::array<double, 18>> atoms(count);
  std::vector<std::array<double, 8>> spectra(count);
  parallel_over(count, [&](size_t g) {
    const JointDistribution jd(gates[g], m);
    const PIDTrivariate pid = pid_trivariate(jd);
    for (int i = 0; i < 18; ++i) atoms[g][i] = pid.atoms[i];
    const FourierSpectrum sp = transform(gates[g], m);
    for (int s = 0; s < 8; ++s) spectra[g][s] = sq(sp.coeff[s]);
  });

  const auto close = [epsilon](const auto& a, const auto& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (std::abs(a[i] - b[i]) > epsilon) return false;
    }
    return true;
  };

  // Transitive closure of pairwise PID matches via union-find.
  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  const std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = i + 1; j < count; ++j) {
      if (close(atoms[i], atoms[j])) {
        parent[find(static_cast<int>(j))] = find(static_cast<int>(i));
      }
    }
  }

  std::map<int, std::vector<int>> groups;
  for (size_t i = 0; i < count; ++i) {
    groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  }

  ConjectureScanResult result;
  result.epsilon = epsilon;
  result.gate_count = static_cast<int>(count);
  result.pid_group_count = static_cast<int>(groups.size());
  // Spectra "differ" at the equality tolerance (capped by epsilon so an
  // exact scan stays exact); degenerate epsilons still flag honestly.
  const double spectrum_tol = std::min(epsilon, kDefaultTolerance);
  for (const auto& [root, members] : groups) {
    if (members.size() < 2) continue;
    double gap = 0.0;
    for (size_t a = 0; a < members.size(); ++a) {
      for (size_t b = a + 1; b < members.size(); ++b) {
        for (int s = 0; s < 8; ++s) {
          gap = std::max(
              gap, std::abs(spectra[members[a]][s] - spectra[members[b]][s]));
        }
      }
    }
    if (gap > spectrum_tol) {
      CollisionGroup group;
      group.max_spectrum_gap = gap;
      for (int idx : members) group.gates.push_back(gates[idx].spec());
      result.collisions.push_back(std::move(group));
    }
  }
  result.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  result.note =
      "PID atoms computed with the closed-form imin measure; an empty "
      "collision list supports, for this measure only, that equal PID "
      "vectors imply equal squared spectra over all 256 trivariate gates.";
  return result;
}

}  // namespace boolfour
