// Spectra under the uniform and p-biased orthonormal product bases, and the
// spectral functionals built on them (variance, influence, stability, noise
// sensitivity, classical bounds).

#pragma once

#include <cstdint>
#include <vector>

#include "boolfour/gate.hpp"

namespace boolfour {

/// Coefficients f̂(S) indexed by subset bitmask, tagged with the measure
/// whose basis they live in. Satisfies Parseval: sum of squares is 1 for
/// any ±1-valued gate.
struct FourierSpectrum {
  int n = 0;
  InputMeasure measure = InputMeasure::uniform();
  std::vector<double> coeff;  // size 2^n, entry at subset bitmask S

  double at(unsigned subset_mask) const;
  double empty_coefficient() const { return coeff[0]; }
};

/// f̂(S) = E_m[f(X)·Φ_S(X)], Φ_S the product of per-coordinate characters
/// ((x-mu)/sigma; ±1 themselves under the uniform measure). O(n·2^n).
FourierSpectrum transform(const TruthTable& tt, const InputMeasure& m);

/// Evaluate the multilinear expansion at every vertex and snap to ±1.
/// Throws std::domain_error if any value strays more than 1e-6 from ±1.
TruthTable inverse_transform(const FourierSpectrum& sp);

/// Integer character sums c(S) = Σ_x f(x)·Π_{i∈S} x_i, so f̂(S) = c(S)/2^n
/// under the uniform measure. Exact for arity <= 16; the dyadic oracle used
/// by exactness tests.
std::vector<int64_t> character_sums(const TruthTable& tt);

double variance(const FourierSpectrum& sp);  // Σ_{S≠∅} f̂(S)²

/// Flip probability of input i. Uniform: Σ_{S∋i} f̂(S)²; biased: that sum
/// divided by sigma².
double influence(const FourierSpectrum& sp, int i);

/// Group influence: Σ_S |S∩A|·f̂(S)² (scaled by 1/sigma² per member when
/// biased).
double influence_group(const FourierSpectrum& sp, unsigned subset_mask);

/// Total influence; equals influence_group over all variables and the sum
/// of the per-variable influences.
double total_influence(const FourierSpectrum& sp);

/// Stab_ρ = Σ_S ρ^|S| f̂(S)². Defined for uniform-kind spectra only;
/// ρ must lie in [-1, 1].
double stability(const FourierSpectrum& sp, double rho);

/// NS_δ = 1/2 - Stab_{1-2δ}/2. Uniform-kind spectra only; δ in [0, 1].
double noise_sensitivity(const FourierSpectrum& sp, double delta);

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
  bool checked = true;
};

/// Classical lower/upper bounds on influence:
///  * poincare:       Var[f] <= Inf[f]
///  * entropy_bound:  2α·log2(1/α) <= Inf[f], α = min probability of each
///                    output value (0·log(1/0) taken as 0)
///  * symmetric_bound: max_i Inf_i <= 1/sqrt(n), checked only when the gate
///                    carries the curated transitive-symmetric flag and is
///                    monotone or antitone.
struct BoundReport {
  BoundCheck poincare;
  BoundCheck entropy_bound;
  BoundCheck symmetric_bound;  // checked=false when not applicable
};

BoundReport classical_bounds(const FourierSpectrum& sp, const TruthTable& tt);

}  // namespace boolfour
