// Joint distributions of (T, X_1..X_n), direct entropy/mutual-information
// computation, and the spectral counterparts with cross-validation.
//
// Everything is exact enumeration over 2^n points; no sampling. Logs are
// base 2 throughout ("bits"), with the 0·log 0 = 0 convention.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boolfour/fourier.hpp"
#include "boolfour/gate.hpp"

namespace boolfour {

/// Binary entropy in bits; 0 at the endpoints.
double binary_entropy(double x);

/// Distribution of (T, X_1..X_n) for a deterministic gate: the mass of
/// (t, x) is P_m(x)·1[f(x) = t]. Stored as the input mass plus the gate's
/// value per point.
class JointDistribution {
 public:
  JointDistribution(const TruthTable& tt, const InputMeasure& m);

  int arity() const { return n_; }
  const InputMeasure& measure() const { return measure_; }
  const std::string& gate_spec() const { return gate_spec_; }

  double point_prob(int point) const { return prob_[point]; }
  int target_value(int point) const { return value_[point]; }

  /// P[T = t] for t = ±1.
  double target_prob(int t) const;
  /// H(T) in bits.
  double target_entropy() const;

 private:
  int n_;
  InputMeasure measure_;
  std::string gate_spec_;
  std::vector<double> prob_;
  std::vector<int8_t> value_;
};

/// H(T | X_A) by direct enumeration, A a subset bitmask ((empty -> H(T)).
double cond_entropy_direct(const JointDistribution& jd, unsigned subset_mask);

/// H(T | X_A) from the spectrum: E over assignments a of
/// h(½(1 + Σ_{S⊆A} f̂(S)Φ_S(a))). The spectrum's basis must match the
/// measure the entropy is taken under.
double cond_entropy_fourier(const FourierSpectrum& sp, unsigned subset_mask);

/// I(T; X_A) by direct enumeration.
double mutual_information_direct(const JointDistribution& jd,
                                 unsigned subset_mask);

/// I(T; X_A) computed both directly and through the spectrum. The two
/// routes must agree within 1e-6 (std::runtime_error otherwise); the direct
/// value is returned.
double mutual_information(const JointDistribution& jd,
                          const FourierSpectrum& sp, unsigned subset_mask);

/// I(T; X_i | rest).
double conditional_mi(const JointDistribution& jd, int i);

/// CoI(T;X;Y) = I(T;X) - I(T;X|Y). Bivariate only; both defining
/// expressions are computed and must agree within 1e-12.
double co_information(const JointDistribution& jd);

/// Every information quantity for one gate, keyed by subset bitmask.
struct InfoReport {
  int n = 0;
  double target_entropy = 0.0;
  std::vector<double> cond_entropy;        // H(T|X_A) per subset mask
  std::vector<double> mutual_information;  // I(T;X_A) per subset mask
  std::vector<double> conditional_mi;      // I(T;X_i|rest) per variable
  bool has_co_information = false;
  double co_information = 0.0;
};

InfoReport info_report(const JointDistribution& jd);

}  // namespace boolfour
