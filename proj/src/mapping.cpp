#include "boolfour/mapping.hpp"

#include <cmath>
#include <stdexcept>

namespace boolfour {

namespace {

constexpr double kRangeSlack = 1e-9;
constexpr double kDiscrepancyTol = 1e-6;

void check_squared_range(double value, const char* what) {
  if (value < -kRangeSlack || value > 1.0 + kRangeSlack) {
    throw std::domain_error(std::string(what) +
                            " left [0, 1]; inconsistent PID input");
  }
}

// The PID combinations scale by `scale` relative to the uniform map.
BivariateSquared phi_bivariate_scaled(const PIDBivariate& pid, double ef_sq,
                                      double scale) {
  BivariateSquared sq;
  sq.xy = scale * (2.0 * pid.ci + pid.ui_x + pid.ui_y) + ef_sq - 1.0;
  sq.x = 1.0 - scale * (pid.ci + pid.ui_y) - ef_sq;
  sq.y = 1.0 - scale * (pid.ci + pid.ui_x) - ef_sq;
  check_squared_range(sq.xy, "f^2({x,y})");
  check_squared_range(sq.x, "f^2({x})");
  check_squared_range(sq.y, "f^2({y})");
  return sq;
}

MonotoneBivariateMap monotone_map(const PIDBivariate& pid,
                                  const InputMeasure& m, int a1, int a2) {
  if ((a1 != 1 && a1 != -1) || (a2 != 1 && a2 != -1)) {
    throw std::invalid_argument("unate parameters must be +1 or -1");
  }
  const double sigma = m.sigma();
  const double h = m.entropy_bits();
  const double mag_x = (sigma / h) * (pid.ci + pid.ui_x);
  const double mag_y = (sigma / h) * (pid.ci + pid.ui_y);
  MonotoneBivariateMap map;
  map.coeff_x = a1 * mag_x;
  map.coeff_y = a2 * mag_y;
  map.sq_xy = mag_x * (sigma - mag_x);
  map.sq_xy_alt = mag_y * (sigma - mag_y);
  map.sq_xy_printed = mag_x * (1.0 - mag_x);
  const double route_a = (pid.ci + pid.ui_x) * (h - pid.ci - pid.ui_x);
  const double route_b = (pid.ci + pid.ui_y) * (h - pid.ci - pid.ui_y);
  map.consistency_residual = route_a - route_b;
  return map;
}

// Centers of the trivariate intervals: the Moore-Penrose projection
// A_r^+ s of the influence vector s onto the squared-coefficient space.
// A_r^+ = A_r^T (1/8)(4I - J); entries are exact dyadic rationals.
std::array<double, 7> projection_centers(const std::array<double, 3>& s) {
  std::array<double, 3> v{};
  const double sum = s[0] + s[1] + s[2];
  for (int i = 0; i < 3; ++i) v[i] = (4.0 * s[i] - sum) / 8.0;
  return {
      v[0] + v[1] + v[2],  // {x,y,z}
      v[0] + v[1],         // {x,y}
      v[0] + v[2],         // {x,z}
      v[1] + v[2],         // {y,z}
      v[0],                // {x}
      v[1],                // {y}
      v[2],                // {z}
  };
}

CoefficientBounds bounds_with_scale(const PIDTrivariate& pid,
                                    const InputMeasure& m, double scale) {
  const std::array<double, 3> psi = pid.five_atom_sums();
  std::array<double, 3> s{};
  for (int i = 0; i < 3; ++i) s[i] = scale * psi[i];
  const std::array<double, 7> centers = projection_centers(s);

  static constexpr unsigned masks[7] = {7, 3, 5, 6, 1, 2, 4};
  CoefficientBounds bounds;
  for (int i = 0; i < 7; ++i) {
    const bool pair = (i >= 1 && i <= 3);
    CoefficientBounds::Entry& e = bounds.entries[i];
    e.mask = masks[i];
    e.center = centers[i];
    e.lo = centers[i] - 2.0 / 8.0;
    e.hi = centers[i] + (pair ? 4.0 : 5.0) / 8.0;
    // The published biased list omits the {y,z} and {x} entries; they are
    // rebuilt from the uniform pattern and flagged.
    e.reconstructed = !m.is_uniform_kind() && (i == 3 || i == 4);
  }
  return bounds;
}

struct QuadSolution {
  double xyz, xy, xz, yz;
};

// Unknowns a = f̂²({x,y,z}), b = f̂²({x,y}), c = f̂²({x,z}), d = f̂²({y,z})
// from  a + (pairs containing i) = s_i - q_i  and the Parseval closure
// a + b + c + d = 1 - ef_sq - Σq.
QuadSolution solve_quadratic_system(const std::array<double, 3>& s,
                                    const std::array<double, 3>& q,
                                    double ef_sq) {
  QuadSolution sol{};
  sol.xyz = (s[0] + s[1] + s[2]) + (q[0] + q[1] + q[2]) + 2.0 * ef_sq - 2.0;
  sol.xy = 1.0 - ef_sq - q[0] - q[1] - s[2];
  sol.xz = 1.0 - ef_sq - q[0] - q[2] - s[1];
  sol.yz = 1.0 - ef_sq - q[1] - q[2] - s[0];
  check_squared_range(sol.xyz, "f^2({x,y,z})");
  check_squared_range(sol.xy, "f^2({x,y})");
  check_squared_range(sol.xz, "f^2({x,z})");
  check_squared_range(sol.yz, "f^2({y,z})");
  return sol;
}

TrivariateSolution solve_signed(const PsiVector& psi,
                                const std::array<int, 3>& signs, double ef,
                                const InputMeasure& m) {
  const double sigma = m.sigma();
  const double h = m.entropy_bits();
  TrivariateSolution out;
  std::array<double, 3> s{}, q{};
  for (int i = 0; i < 3; ++i) {
    if (signs[i] != 1 && signs[i] != -1) {
      throw std::invalid_argument("unate parameters must be +1 or -1");
    }
    const double mag = (sigma / h) * psi.values[i];
    out.first_order[i] = signs[i] * mag;
    q[i] = mag * mag;
    s[i] = sigma * mag;  // sigma²·Inf_i
  }
  const QuadSolution sol = solve_quadratic_system(s, q, ef * ef);
  out.sq_xyz = sol.xyz;
  out.sq_xy = sol.xy;
  out.sq_xz = sol.xz;
  out.sq_yz = sol.yz;
  return out;
}

}  // namespace

BivariateSquared phi_bivariate(const PIDBivariate& pid, double ef_sq) {
  return phi_bivariate_scaled(pid, ef_sq, 1.0);
}

BivariateSquared phi_bivariate_stab(const PIDBivariate& pid,
                                    double stab_minus1) {
  const double quarter = 0.25 * (1.0 - stab_minus1);
  BivariateSquared sq;
  sq.xy = pid.ci + 0.5 * pid.ui_x + 0.5 * pid.ui_y - quarter;
  sq.x = 0.5 * pid.ui_x - 0.5 * pid.ui_y + quarter;
  sq.y = -0.5 * pid.ui_x + 0.5 * pid.ui_y + quarter;
  check_squared_range(sq.xy, "f^2({x,y})");
  check_squared_range(sq.x, "f^2({x})");
  check_squared_range(sq.y, "f^2({y})");
  return sq;
}

BivariateSquared p_biased_bivariate(const PIDBivariate& pid, double ef_sq,
                                    const InputMeasure& m) {
  return phi_bivariate_scaled(pid, ef_sq, m.sigma_sq() / m.entropy_bits());
}

BivariateSquared p_biased_bivariate_printed(const PIDBivariate& pid,
                                            double ef_sq,
                                            const InputMeasure& m) {
  BivariateSquared sq;
  const double scale = m.sigma() / m.entropy_bits();
  sq.xy = scale * (2.0 * pid.ci + pid.ui_x + pid.ui_y) + ef_sq - 1.0;
  sq.x = 1.0 - scale * (pid.ci + pid.ui_y) - ef_sq;
  sq.y = 1.0 - scale * (pid.ci + pid.ui_x) - ef_sq;
  return sq;  // reporting route: no range validation
}

MonotoneBivariateMap phi_bivariate_monotone(const PIDBivariate& pid,
                                            Direction dir) {
  const int sign = dir == Direction::Increasing ? 1 : -1;
  return monotone_map(pid, InputMeasure::uniform(), sign, sign);
}

MonotoneBivariateMap phi_bivariate_unate(const PIDBivariate& pid, int a1,
                                         int a2) {
  return monotone_map(pid, InputMeasure::uniform(), a1, a2);
}

MonotoneBivariateMap p_biased_bivariate_monotone(const PIDBivariate& pid,
                                                 const InputMeasure& m,
                                                 Direction dir) {
  const int sign = dir == Direction::Increasing ? 1 : -1;
  return monotone_map(pid, m, sign, sign);
}

MonotoneBivariateMap p_biased_bivariate_unate(const PIDBivariate& pid,
                                              const InputMeasure& m, int a1,
                                              int a2) {
  return monotone_map(pid, m, a1, a2);
}

CoefficientBounds phi_trivariate_bounds(const PIDTrivariate& pid,
                                        const InputMeasure& m) {
  return bounds_with_scale(pid, m, m.sigma_sq() / m.entropy_bits());
}

CoefficientBounds phi_trivariate_bounds_printed(const PIDTrivariate& pid,
                                                const InputMeasure& m) {
  return bounds_with_scale(pid, m, m.sigma() / m.entropy_bits());
}

TrivariateSolution solve_trivariate_monotone(const PsiVector& psi, double ef,
                                             const InputMeasure& m,
                                             Direction dir) {
  const int sign = dir == Direction::Increasing ? 1 : -1;
  return solve_signed(psi, {sign, sign, sign}, ef, m);
}

TrivariateSolution phi_trivariate_unate(const PsiVector& psi,
                                        const std::array<int, 3>& signs,
                                        double ef, const InputMeasure& m) {
  return solve_signed(psi, signs, ef, m);
}

PrintedFormulaReport check_printed_trivariate_formulas(const PsiVector& psi,
                                                       double ef,
                                                       const InputMeasure& m,
                                                       Direction dir) {
  PrintedFormulaReport report;
  report.solver = solve_trivariate_monotone(psi, ef, m, dir);

  const double sigma = m.sigma();
  const double h = m.entropy_bits();
  const double ratio = sigma / h;  // equals 1 under the uniform measure
  const double ef_sq = ef * ef;
  std::array<double, 3> t{};  // the scaled psi the published forms consume
  for (int i = 0; i < 3; ++i) t[i] = ratio * psi.values[i];

  report.printed[0] =
      2.0 * (t[0] * (t[0] + 0.5 * ratio) + t[1] * (t[1] + 0.5 * ratio) +
             t[2] * (t[2] + 0.5 * ratio) + ef_sq - 1.0);
  report.printed[1] =
      1.0 - ef_sq - t[0] * t[0] - t[1] * t[1] - t[2] * (ratio + t[2]);
  report.printed[2] =
      1.0 - ef_sq - t[0] * t[0] - t[2] * t[2] - t[1] * (ratio + t[1]);
  report.printed[3] =
      1.0 - ef_sq - t[1] * t[1] - t[2] * t[2] - t[0] * (ratio + t[0]);

  const std::array<double, 4> solver_sq = {report.solver.sq_xyz,
                                           report.solver.sq_xy,
                                           report.solver.sq_xz,
                                           report.solver.sq_yz};
  for (int i = 0; i < 4; ++i) {
    report.residual_vs_solver[i] = report.printed[i] - solver_sq[i];
    if (std::abs(report.residual_vs_solver[i]) > kDiscrepancyTol) {
      report.printed_formula_discrepancy = true;
    }
  }
  return report;
}

double influence_from_pid(const PIDBivariate& pid) {
  return 2.0 * pid.ci + pid.ui_x + pid.ui_y;
}

double stability_from_pid(const PIDBivariate& pid, double ef_sq, double rho) {
  const BivariateSquared sq = phi_bivariate(pid, ef_sq);
  return ef_sq + rho * (sq.x + sq.y) + rho * rho * sq.xy;
}

double stability_from_pid_printed(const PIDBivariate& pid, double ef_sq,
                                  double rho) {
  return (rho * rho - rho) * influence_from_pid(pid) +
         (rho * rho - 2.0 * rho) * (ef_sq - 1.0);
}

double noise_sensitivity_from_pid(const PIDBivariate& pid, double ef_sq,
                                  double delta) {
  return 0.5 - 0.5 * stability_from_pid(pid, ef_sq, 1.0 - 2.0 * delta);
}

double noise_sensitivity_from_pid_printed(const PIDBivariate& pid,
                                          double ef_sq, double delta) {
  return 2.0 * delta * delta +
         (1.0 - 2.0 * delta) * (delta * influence_from_pid(pid) +
                                0.5 * (1.0 + 2.0 * delta) * ef_sq);
}

FunctionalsReport functionals_from_pid(const PIDBivariate& pid, double ef_sq,
                                       double alpha, double joint_mi,
                                       double coi, double rho, double delta) {
  FunctionalsReport rep;
  rep.influence = influence_from_pid(pid);
  rep.chain.lower = alpha > 0.0 ? 2.0 * alpha * std::log2(1.0 / alpha) : 0.0;
  rep.chain.middle = rep.influence;
  rep.chain.upper = joint_mi - coi;
  rep.chain.holds = rep.chain.lower <= rep.chain.middle + kRangeSlack &&
                    rep.chain.middle <= rep.chain.upper + kRangeSlack;
  rep.stab_exact = stability_from_pid(pid, ef_sq, rho);
  rep.stab_printed = stability_from_pid_printed(pid, ef_sq, rho);
  rep.ns_exact = noise_sensitivity_from_pid(pid, ef_sq, delta);
  rep.ns_printed = noise_sensitivity_from_pid_printed(pid, ef_sq, delta);
  rep.printed_formula_discrepancy =
      std::abs(rep.stab_exact - rep.stab_printed) > kDiscrepancyTol ||
      std::abs(rep.ns_exact - rep.ns_printed) > kDiscrepancyTol;
  return rep;
}

}  // namespace boolfour
