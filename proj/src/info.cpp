#include "boolfour/info.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace boolfour {

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

JointDistribution::JointDistribution(const TruthTable& tt,
                                     const InputMeasure& m)
    : n_(tt.arity()),
      measure_(m),
      gate_spec_(tt.spec()),
      prob_(tt.points()),
      value_(tt.values().begin(), tt.values().end()) {
  for (int x = 0; x < tt.points(); ++x) {
    prob_[x] = m.prob_of(x, n_);
  }
}

double JointDistribution::target_prob(int t) const {
  double p = 0.0;
  for (size_t x = 0; x < prob_.size(); ++x) {
    if (value_[x] == t) p += prob_[x];
  }
  return p;
}

double JointDistribution::target_entropy() const {
  return binary_entropy(target_prob(1));
}

double cond_entropy_direct(const JointDistribution& jd, unsigned subset_mask) {
  const int pts = 1 << jd.arity();
  if (subset_mask >= static_cast<unsigned>(pts)) {
    throw std::out_of_range("subset mask out of range");
  }
  // Bucket points by their projection onto the conditioning set.
  std::vector<double> total(pts, 0.0), plus(pts, 0.0);
  for (int x = 0; x < pts; ++x) {
    const unsigned key = static_cast<unsigned>(x) & subset_mask;
    total[key] += jd.point_prob(x);
    if (jd.target_value(x) == 1) plus[key] += jd.point_prob(x);
  }
  double h = 0.0;
  for (int key = 0; key < pts; ++key) {
    if (total[key] > 0.0) h += total[key] * binary_entropy(plus[key] / total[key]);
  }
  return h;
}

double cond_entropy_fourier(const FourierSpectrum& sp, unsigned subset_mask) {
  const unsigned pts = 1u << sp.n;
  if (subset_mask >= pts) throw std::out_of_range("subset mask out of range");
  const double cp = sp.measure.char_plus();
  const double cm = sp.measure.char_minus();
  const double p = sp.measure.p();
  double h = 0.0;
  // Assignments of the conditioning set are the submasks of subset_mask;
  // a set bit means that input is -1 (same convention as point indices).
  unsigned a = 0;
  while (true) {
    double weight = 1.0;
    for (int j = 0; j < sp.n; ++j) {
      if (!(subset_mask >> j & 1u)) continue;
      weight *= (a >> j & 1u) ? (1.0 - p) : p;
    }
    // Conditional expectation E[f | X_A = a] = Σ_{S⊆A} f̂(S)Φ_S(a).
    double cond_mean = 0.0;
    unsigned s = 0;
    while (true) {
      double chi = 1.0;
      for (int j = 0; j < sp.n; ++j) {
        if (s >> j & 1u) chi *= (a >> j & 1u) ? cm : cp;
      }
      cond_mean += sp.coeff[s] * chi;
      if (s == subset_mask) break;
      s = (s - subset_mask) & subset_mask;  // next submask
    }
    h += weight * binary_entropy(0.5 * (1.0 + cond_mean));
    if (a == subset_mask) break;
    a = (a - subset_mask) & subset_mask;
  }
  return h;
}

double mutual_information_direct(const JointDistribution& jd,
                                 unsigned subset_mask) {
  return jd.target_entropy() - cond_entropy_direct(jd, subset_mask);
}

double mutual_information(const JointDistribution& jd,
                          const FourierSpectrum& sp, unsigned subset_mask) {
  if (sp.n != jd.arity() || !(sp.measure == jd.measure())) {
    throw std::invalid_argument("spectrum basis does not match the measure");
  }
  const double direct = mutual_information_direct(jd, subset_mask);
  const double spectral =
      binary_entropy(0.5 * (1.0 + sp.empty_coefficient())) -
      cond_entropy_fourier(sp, subset_mask);
  if (std::abs(direct - spectral) > 1e-6) {
    throw std::runtime_error(
        "spectral and direct mutual information disagree beyond 1e-6");
  }
  return direct;
}

double conditional_mi(const JointDistribution& jd, int i) {
  if (i < 0 || i >= jd.arity()) {
    throw std::out_of_range("variable index out of range");
  }
  const unsigned all = (1u << jd.arity()) - 1;
  const unsigned rest = all & ~(1u << i);
  return cond_entropy_direct(jd, rest) - cond_entropy_direct(jd, all);
}

double co_information(const JointDistribution& jd) {
  if (jd.arity() != 2) {
    throw std::domain_error("co-information is defined for arity 2");
  }
  const double via_x = mutual_information_direct(jd, 0b01) -
                       (cond_entropy_direct(jd, 0b10) -
                        cond_entropy_direct(jd, 0b11));
  const double via_y = mutual_information_direct(jd, 0b10) -
                       (cond_entropy_direct(jd, 0b01) -
                        cond_entropy_direct(jd, 0b11));
  if (std::abs(via_x - via_y) > 1e-12) {
    throw std::runtime_error("co-information expressions disagree");
  }
  return via_x;
}

InfoReport info_report(const JointDistribution& jd) {
  InfoReport rep;
  rep.n = jd.arity();
  const int pts = 1 << rep.n;
  rep.target_entropy = jd.target_entropy();
  rep.cond_entropy.resize(pts);
  rep.mutual_information.resize(pts);
  for (int mask = 0; mask < pts; ++mask) {
    rep.cond_entropy[mask] = cond_entropy_direct(jd, mask);
    rep.mutual_information[mask] = rep.target_entropy - rep.cond_entropy[mask];
  }
  rep.conditional_mi.resize(rep.n);
  for (int i = 0; i < rep.n; ++i) rep.conditional_mi[i] = conditional_mi(jd, i);
  if (rep.n == 2) {
    rep.has_co_information = true;
    rep.co_information = boolfour::co_information(jd);
  }
  return rep;
}

}  // namespace boolfour
