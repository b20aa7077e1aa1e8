#include "boolfour/fourier.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace boolfour {

namespace {

void require_uniform_kind(const FourierSpectrum& sp, const char* op) {
  if (!sp.measure.is_uniform_kind()) {
    throw std::domain_error(std::string(op) +
                            " is defined for uniform-basis spectra only");
  }
}

}  // namespace

double FourierSpectrum::at(unsigned subset_mask) const {
  if (subset_mask >= coeff.size()) {
    throw std::out_of_range("subset mask out of range");
  }
  return coeff[subset_mask];
}

FourierSpectrum transform(const TruthTable& tt, const InputMeasure& m) {
  const int n = tt.arity();
  const int pts = tt.points();
  // Fold the point mass into the values, then butterfly one axis at a time:
  // the pair (bit j = 0 -> x_j = +1, bit j = 1 -> x_j = -1) maps to
  // (S without j, S with j) via the 2x2 character matrix.
  std::vector<double> work(pts);
  for (int x = 0; x < pts; ++x) {
    work[x] = m.prob_of(x, n) * tt.value(x);
  }
  const double cp = m.char_plus();
  const double cm = m.char_minus();
  for (int j = 0; j < n; ++j) {
    const int bit = 1 << j;
    for (int base = 0; base < pts; ++base) {
      if (base & bit) continue;
      const double a = work[base];        // x_j = +1
      const double b = work[base | bit];  // x_j = -1
      work[base] = a + b;
      work[base | bit] = a * cp + b * cm;
    }
  }
  return FourierSpectrum{n, m, std::move(work)};
}

TruthTable inverse_transform(const FourierSpectrum& sp) {
  const int pts = 1 << sp.n;
  std::vector<double> work = sp.coeff;
  const double cp = sp.measure.char_plus();
  const double cm = sp.measure.char_minus();
  for (int j = 0; j < sp.n; ++j) {
    const int bit = 1 << j;
    for (int base = 0; base < pts; ++base) {
      if (base & bit) continue;
      const double without = work[base];
      const double with = work[base | bit];
      work[base] = without + with * cp;        // x_j = +1
      work[base | bit] = without + with * cm;  // x_j = -1
    }
  }
  std::vector<int8_t> out(pts);
  for (int x = 0; x < pts; ++x) {
    const double snapped = work[x] >= 0.0 ? 1.0 : -1.0;
    if (std::abs(work[x] - snapped) > 1e-6) {
      throw std::domain_error("spectrum does not evaluate to a ±1 gate");
    }
    out[x] = static_cast<int8_t>(snapped);
  }
  return TruthTable(sp.n, std::move(out));
}

std::vector<int64_t> character_sums(const TruthTable& tt) {
  const int pts = tt.points();
  std::vector<int64_t> work(pts);
  for (int x = 0; x < pts; ++x) work[x] = tt.value(x);
  for (int j = 0; j < tt.arity(); ++j) {
    const int bit = 1 << j;
    for (int base = 0; base < pts; ++base) {
      if (base & bit) continue;
      const int64_t a = work[base];
      const int64_t b = work[base | bit];
      work[base] = a + b;
      work[base | bit] = a - b;
    }
  }
  return work;
}

double variance(const FourierSpectrum& sp) {
  double var = 0.0;
  for (size_t s = 1; s < sp.coeff.size(); ++s) var += sp.coeff[s] * sp.coeff[s];
  return var;
}

double influence(const FourierSpectrum& sp, int i) {
  if (i < 0 || i >= sp.n) throw std::out_of_range("variable index out of range");
  double sum = 0.0;
  const unsigned bit = 1u << i;
  for (size_t s = 0; s < sp.coeff.size(); ++s) {
    if (s & bit) sum += sp.coeff[s] * sp.coeff[s];
  }
  return sum / sp.measure.sigma_sq();
}

double influence_group(const FourierSpectrum& sp, unsigned subset_mask) {
  if (subset_mask >= sp.coeff.size()) {
    throw std::out_of_range("subset mask out of range");
  }
  double sum = 0.0;
  for (size_t s = 0; s < sp.coeff.size(); ++s) {
    const int members = std::popcount(static_cast<unsigned>(s) & subset_mask);
    if (members) sum += members * sp.coeff[s] * sp.coeff[s];
  }
  return sum / sp.measure.sigma_sq();
}

double total_influence(const FourierSpectrum& sp) {
  return influence_group(sp, (1u << sp.n) - 1);
}

double stability(const FourierSpectrum& sp, double rho) {
  require_uniform_kind(sp, "stability");
  if (rho < -1.0 || rho > 1.0) {
    throw std::invalid_argument("rho must lie in [-1, 1]");
  }
  // Powers built multiplicatively so that rho = 0 contributes rho^0 = 1.
  std::vector<double> rho_pow(sp.n + 1, 1.0);
  for (int k = 1; k <= sp.n; ++k) rho_pow[k] = rho_pow[k - 1] * rho;
  double stab = 0.0;
  for (size_t s = 0; s < sp.coeff.size(); ++s) {
    stab += rho_pow[std::popcount(s)] * sp.coeff[s] * sp.coeff[s];
  }
  return stab;
}

double noise_sensitivity(const FourierSpectrum& sp, double delta) {
  require_uniform_kind(sp, "noise sensitivity");
  if (delta < 0.0 || delta > 1.0) {
    throw std::invalid_argument("delta must lie in [0, 1]");
  }
  return 0.5 - 0.5 * stability(sp, 1.0 - 2.0 * delta);
}

BoundReport classical_bounds(const FourierSpectrum& sp, const TruthTable& tt) {
  BoundReport report;
  const double inf = total_influence(sp);

  report.poincare.lhs = variance(sp);
  report.poincare.rhs = inf;
  report.poincare.pass = report.poincare.lhs <= report.poincare.rhs + 1e-12;

  double p_plus = 0.0;
  for (int x = 0; x < tt.points(); ++x) {
    if (tt.value(x) == 1) p_plus += sp.measure.prob_of(x, tt.arity());
  }
  const double alpha = std::min(p_plus, 1.0 - p_plus);
  report.entropy_bound.lhs =
      alpha > 0.0 ? 2.0 * alpha * std::log2(1.0 / alpha) : 0.0;
  report.entropy_bound.rhs = inf;
  report.entropy_bound.pass =
      report.entropy_bound.lhs <= report.entropy_bound.rhs + 1e-12;

  const GateClass cls = classify(tt);
  const bool applicable = cls.transitive_symmetric.value_or(false) &&
                          (cls.monotone || cls.antitone);
  report.symmetric_bound.checked = applicable;
  if (applicable) {
    double max_inf = 0.0;
    for (int i = 0; i < sp.n; ++i) max_inf = std::max(max_inf, influence(sp, i));
    report.symmetric_bound.lhs = max_inf;
    report.symmetric_bound.rhs = 1.0 / std::sqrt(double(sp.n));
    report.symmetric_bound.pass =
        report.symmetric_bound.lhs <= report.symmetric_bound.rhs + 1e-12;
  }
  return report;
}

}  // namespace boolfour
