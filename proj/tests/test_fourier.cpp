#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>

#include "boolfour/fourier.hpp"

using namespace boolfour;

namespace {

// Direct-expectation oracle: f̂(S) = Σ_x P(x) f(x) Π_{i∈S} φ(x_i), no
// butterfly.
double coefficient_oracle(const TruthTable& tt, const InputMeasure& m,
                          unsigned subset) {
  double acc = 0.0;
  for (int x = 0; x < tt.points(); ++x) {
    double chi = 1.0;
    for (int j = 0; j < tt.arity(); ++j) {
      if (subset >> j & 1u) {
        chi *= (x >> j & 1) ? m.char_minus() : m.char_plus();
      }
    }
    acc += m.prob_of(x, tt.arity()) * tt.value(x) * chi;
  }
  return acc;
}

// Flip-probability oracle for influence under any product measure.
double influence_oracle(const TruthTable& tt, const InputMeasure& m, int i) {
  double prob = 0.0;
  for (int x = 0; x < tt.points(); ++x) {
    if (tt.value(x) != tt.value(x ^ (1 << i))) {
      prob += m.prob_of(x, tt.arity());
    }
  }
  return prob;
}

const std::array<double, 5> kPGrid = {0.1, 0.25, 0.5, 0.75, 0.9};

}  // namespace

TEST_CASE("transform matches the direct-expectation oracle") {
  const InputMeasure uniform = InputMeasure::uniform();
  const FourierSpectrum and_sp = transform(make_gate("AND"), uniform);
  CHECK(and_sp.at(0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(and_sp.at(1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(and_sp.at(2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(and_sp.at(3) == doctest::Approx(-0.5).epsilon(1e-15));

  const FourierSpectrum xor_sp = transform(make_gate("XOR"), uniform);
  CHECK(xor_sp.at(3) == doctest::Approx(1.0));
  CHECK(xor_sp.at(0) == doctest::Approx(0.0));
  CHECK(xor_sp.at(1) == doctest::Approx(0.0));
  CHECK(xor_sp.at(2) == doctest::Approx(0.0));

  for (const TruthTable& tt : enumerate_gates(3)) {
    for (double p : kPGrid) {
      const InputMeasure m = InputMeasure::p_biased(p);
      const FourierSpectrum sp = transform(tt, m);
      for (unsigned s = 0; s < 8; ++s) {
        CHECK(sp.at(s) ==
              doctest::Approx(coefficient_oracle(tt, m, s)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("p=1/2 biased spectrum is bit-identical to uniform") {
  const InputMeasure half = InputMeasure::p_biased(0.5);
  const InputMeasure uniform = InputMeasure::uniform();
  for (const TruthTable& tt : enumerate_gates(3)) {
    const FourierSpectrum a = transform(tt, half);
    const FourierSpectrum b = transform(tt, uniform);
    for (unsigned s = 0; s < 8; ++s) CHECK(a.at(s) == b.at(s));
  }
}

TEST_CASE("Parseval and empty coefficient") {
  for (int arity : {1, 2, 3, 4}) {
    for (const TruthTable& tt : enumerate_gates(arity)) {
      for (double p : kPGrid) {
        const InputMeasure m = InputMeasure::p_biased(p);
        const FourierSpectrum sp = transform(tt, m);
        double sum = 0.0;
        for (double c : sp.coeff) sum += c * c;
        CHECK(std::abs(sum - 1.0) < 1e-12);
        CHECK(std::abs(sp.empty_coefficient() - expectation(tt, m)) < 1e-12);
      }
    }
  }
}

TEST_CASE("inverse transform round trip") {
  CHECK(inverse_transform(transform(make_gate("XOR"),
                                    InputMeasure::uniform())) ==
        make_gate("XOR"));
  CHECK(inverse_transform(transform(make_gate("MAJ3"),
                                    InputMeasure::p_biased(0.3))) ==
        make_gate("MAJ3"));
  for (const TruthTable& tt : enumerate_gates(3)) {
    CHECK(inverse_transform(transform(tt, InputMeasure::p_biased(0.75))) ==
          tt);
  }
  FourierSpectrum zero{2, InputMeasure::uniform(), {0.0, 0.0, 0.0, 0.0}};
  CHECK_THROWS_AS(inverse_transform(zero), std::domain_error);
}

TEST_CASE("character sums are the exact dyadic spectrum") {
  for (const TruthTable& tt : enumerate_gates(2)) {
    const std::vector<int64_t> c = character_sums(tt);
    const FourierSpectrum sp = transform(tt, InputMeasure::uniform());
    for (unsigned s = 0; s < 4; ++s) {
      CHECK(sp.at(s) == double(c[s]) / 4.0);
    }
  }
}

TEST_CASE("variance") {
  const InputMeasure u = InputMeasure::uniform();
  CHECK(variance(transform(make_gate("XOR"), u)) == doctest::Approx(1.0));
  CHECK(variance(transform(make_gate("AND"), u)) == doctest::Approx(0.75));
  CHECK(variance(transform(make_gate("CONST_+1"), u)) == doctest::Approx(0.0));
  // Var = E[f²] - E[f]² = 1 - E[f]² for ±1 gates
  for (const TruthTable& tt : enumerate_gates(2)) {
    for (double p : kPGrid) {
      const InputMeasure m = InputMeasure::p_biased(p);
      const FourierSpectrum sp = transform(tt, m);
      const double ef = expectation(tt, m);
      CHECK(variance(sp) == doctest::Approx(1.0 - ef * ef).epsilon(1e-12));
    }
  }
}

TEST_CASE("influence equals flip probability") {
  const InputMeasure u = InputMeasure::uniform();
  CHECK(influence(transform(make_gate("XOR"), u), 0) == doctest::Approx(1.0));
  CHECK(influence(transform(make_gate("AND"), u), 0) == doctest::Approx(0.5));
  CHECK(influence(transform(make_gate("MAJ3"), u), 0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(influence(transform(make_gate("AND"), u), 2),
                  std::out_of_range);

  for (const TruthTable& tt : enumerate_gates(3)) {
    for (double p : kPGrid) {
      const InputMeasure m = InputMeasure::p_biased(p);
      const FourierSpectrum sp = transform(tt, m);
      for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(influence(sp, i) - influence_oracle(tt, m, i)) < 1e-12);
      }
    }
  }
}

TEST_CASE("influence: exact integer identity for arity up to 4") {
  for (int arity : {1, 2, 3, 4}) {
    for (const TruthTable& tt : enumerate_gates(arity)) {
      const std::vector<int64_t> c = character_sums(tt);
      for (int i = 0; i < arity; ++i) {
        int64_t spectral = 0;
        for (size_t s = 0; s < c.size(); ++s) {
          if (s >> i & 1) spectral += c[s] * c[s];
        }
        int64_t flips = 0;
        for (int x = 0; x < tt.points(); ++x) {
          if (tt.value(x) != tt.value(x ^ (1 << i))) ++flips;
        }
        // Σ_{S∋i} c(S)² = flips · 2^n, exactly
        CHECK(spectral == flips * int64_t(tt.points()));
      }
    }
  }
}

TEST_CASE("group and total influence") {
  const InputMeasure u = InputMeasure::uniform();
  const FourierSpectrum xor_sp = transform(make_gate("XOR"), u);
  CHECK(influence_group(xor_sp, 0b01) == doctest::Approx(1.0));
  CHECK(total_influence(xor_sp) == doctest::Approx(2.0));
  const FourierSpectrum and_sp = transform(make_gate("AND"), u);
  CHECK(influence_group(and_sp, 0b11) == doctest::Approx(1.0));
  CHECK(total_influence(and_sp) == doctest::Approx(1.0));
  CHECK(total_influence(transform(make_gate("MAJ3"), u)) ==
        doctest::Approx(1.5));

  for (const TruthTable& tt : enumerate_gates(3)) {
    for (double p : {0.25, 0.5, 0.9}) {
      const FourierSpectrum sp = transform(tt, InputMeasure::p_biased(p));
      // group over everything = total = sum of singles
      CHECK(influence_group(sp, 0b111) ==
            doctest::Approx(total_influence(sp)).epsilon(1e-12));
      const double singles =
          influence(sp, 0) + influence(sp, 1) + influence(sp, 2);
      CHECK(total_influence(sp) == doctest::Approx(singles).epsilon(1e-12));
    }
  }
}

TEST_CASE("total influence equals average sensitivity, exactly") {
  for (int arity : {1, 2, 3, 4}) {
    for (const TruthTable& tt : enumerate_gates(arity)) {
      const std::vector<int64_t> c = character_sums(tt);
      int64_t weighted = 0;
      for (size_t s = 0; s < c.size(); ++s) {
        weighted += int64_t(std::popcount(s)) * c[s] * c[s];
      }
      int64_t sens_total = 0;
      for (int x = 0; x < tt.points(); ++x) sens_total += sensitivity_at(tt, x);
      CHECK(weighted == sens_total * int64_t(tt.points()));
    }
  }
}

TEST_CASE("stability") {
  const InputMeasure u = InputMeasure::uniform();
  const FourierSpectrum xor_sp = transform(make_gate("XOR"), u);
  const FourierSpectrum and_sp = transform(make_gate("AND"), u);
  for (double rho : {-1.0, -0.4, 0.0, 0.3, 1.0}) {
    CHECK(stability(xor_sp, rho) == doctest::Approx(rho * rho));
    CHECK(stability(and_sp, rho) ==
          doctest::Approx(0.25 + rho / 2.0 + rho * rho / 4.0));
  }
  // rho = 1 is Parseval
  for (const TruthTable& tt : enumerate_gates(2)) {
    CHECK(stability(transform(tt, u), 1.0) == doctest::Approx(1.0));
  }
  // rho = -1 equals E[f(X)f(-X)] by direct enumeration
  for (const TruthTable& tt : enumerate_gates(3)) {
    double direct = 0.0;
    for (int x = 0; x < 8; ++x) {
      direct += 0.125 * tt.value(x) * tt.value(~x & 7);
    }
    CHECK(stability(transform(tt, u), -1.0) ==
          doctest::Approx(direct).epsilon(1e-12));
  }
  CHECK_THROWS_AS(stability(xor_sp, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(stability(transform(make_gate("XOR"),
                                      InputMeasure::p_biased(0.6)), 0.5),
                  std::domain_error);
}

TEST_CASE("noise sensitivity") {
  const InputMeasure u = InputMeasure::uniform();
  const FourierSpectrum xor_sp = transform(make_gate("XOR"), u);
  for (double d : {0.0, 0.1, 0.5, 1.0}) {
    CHECK(noise_sensitivity(xor_sp, d) ==
          doctest::Approx(2.0 * d * (1.0 - d)));
  }
  CHECK(noise_sensitivity(transform(make_gate("CONST_-1"), u), 0.3) ==
        doctest::Approx(0.0));
  for (const TruthTable& tt : enumerate_gates(2)) {
    CHECK(noise_sensitivity(transform(tt, u), 0.0) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
  // direct pair-enumeration oracle at arity 3
  for (const TruthTable& tt : enumerate_gates(3)) {
    const FourierSpectrum sp = transform(tt, u);
    for (double delta : {0.1, 0.35}) {
      double direct = 0.0;
      for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
          const int flips = std::popcount(unsigned(x ^ y));
          const double pair_prob = 0.125 * std::pow(delta, flips) *
                                   std::pow(1.0 - delta, 3 - flips);
          if (tt.value(x) != tt.value(y)) direct += pair_prob;
        }
      }
      CHECK(noise_sensitivity(sp, delta) ==
            doctest::Approx(direct).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(noise_sensitivity(xor_sp, -0.1), std::invalid_argument);
}

TEST_CASE("monotone and unate first-order coefficients") {
  for (const TruthTable& tt : enumerate_gates(3)) {
    const GateClass cls = classify(tt);
    for (double p : kPGrid) {
      const InputMeasure m = InputMeasure::p_biased(p);
      const FourierSpectrum sp = transform(tt, m);
      if (cls.monotone) {
        for (int i = 0; i < 3; ++i) {
          CHECK(sp.at(1u << i) ==
                doctest::Approx(m.sigma() * influence(sp, i)).epsilon(1e-12));
        }
      }
      if (cls.unate) {
        for (int i = 0; i < 3; ++i) {
          CHECK(sp.at(1u << i) ==
                doctest::Approx(cls.unate_signs[i] * m.sigma() *
                                influence(sp, i))
                    .epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("classical bounds") {
  const InputMeasure u = InputMeasure::uniform();
  const TruthTable andg = make_gate("AND");
  const BoundReport and_report = classical_bounds(transform(andg, u), andg);
  // alpha = 1/4: the entropy bound is tight, 2·(1/4)·log2(4) = 1 = Inf
  CHECK(and_report.entropy_bound.lhs == doctest::Approx(1.0));
  CHECK(and_report.entropy_bound.rhs == doctest::Approx(1.0));
  CHECK(and_report.entropy_bound.pass);
  CHECK(and_report.poincare.lhs == doctest::Approx(0.75));
  CHECK(and_report.poincare.pass);

  const TruthTable maj = make_gate("MAJ3");
  const BoundReport maj_report = classical_bounds(transform(maj, u), maj);
  CHECK(maj_report.symmetric_bound.checked);
  CHECK(maj_report.symmetric_bound.lhs == doctest::Approx(0.5));
  CHECK(maj_report.symmetric_bound.rhs == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(maj_report.symmetric_bound.pass);

  // XOR is transitive symmetric but not monotone: bound not applicable
  const TruthTable xorg = make_gate("XOR");
  CHECK_FALSE(classical_bounds(transform(xorg, u), xorg).symmetric_bound.checked);

  for (const TruthTable& tt : enumerate_gates(3)) {
    const BoundReport rep = classical_bounds(transform(tt, u), tt);
    CHECK(rep.poincare.pass);
    CHECK(rep.entropy_bound.pass);
  }
}
