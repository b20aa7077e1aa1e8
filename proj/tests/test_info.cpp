#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "boolfour/info.hpp"

using namespace boolfour;

namespace {

const std::array<double, 5> kPGrid = {0.1, 0.25, 0.5, 0.75, 0.9};

double h2(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

}  // namespace

TEST_CASE("joint distribution atoms") {
  const JointDistribution xj(make_gate("XOR"), InputMeasure::uniform());
  for (int x = 0; x < 4; ++x) CHECK(xj.point_prob(x) == 0.25);
  CHECK(xj.target_prob(1) == doctest::Approx(0.5));

  const JointDistribution aj(make_gate("AND"), InputMeasure::uniform());
  CHECK(aj.target_prob(-1) == doctest::Approx(0.25));

  // biased AND: output is -1 only when both inputs are -1
  const JointDistribution ab(make_gate("AND"), InputMeasure::p_biased(0.9));
  CHECK(ab.target_prob(-1) == doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("conditional entropy, direct") {
  const JointDistribution xj(make_gate("XOR"), InputMeasure::uniform());
  CHECK(cond_entropy_direct(xj, 0b01) == doctest::Approx(1.0));
  CHECK(cond_entropy_direct(xj, 0b11) == doctest::Approx(0.0));
  const JointDistribution aj(make_gate("AND"), InputMeasure::uniform());
  CHECK(cond_entropy_direct(aj, 0) == doctest::Approx(h2(0.25)));
}

TEST_CASE("conditional entropy, spectral route") {
  const InputMeasure u = InputMeasure::uniform();
  const TruthTable andg = make_gate("AND");
  const FourierSpectrum and_sp = transform(andg, u);
  // empty conditioning: h((1 + f̂(∅))/2)
  CHECK(cond_entropy_fourier(and_sp, 0) == doctest::Approx(h2(0.75)));
  CHECK(h2(0.75) == doctest::Approx(0.811278).epsilon(1e-6));
  // full conditioning: deterministic
  CHECK(cond_entropy_fourier(and_sp, 0b11) == doctest::Approx(0.0));
  const FourierSpectrum xor_sp = transform(make_gate("XOR"), u);
  CHECK(cond_entropy_fourier(xor_sp, 0b01) == doctest::Approx(1.0));

  // agreement with the direct route for every gate, subset, and measure
  for (int arity : {1, 2, 3}) {
    for (const TruthTable& tt : enumerate_gates(arity)) {
      for (double p : kPGrid) {
        const InputMeasure m = InputMeasure::p_biased(p);
        const FourierSpectrum sp = transform(tt, m);
        const JointDistribution jd(tt, m);
        for (int mask = 0; mask < tt.points(); ++mask) {
          CHECK(std::abs(cond_entropy_fourier(sp, mask) -
                         cond_entropy_direct(jd, mask)) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("mutual information") {
  const InputMeasure u = InputMeasure::uniform();
  const JointDistribution xj(make_gate("XOR"), u);
  const FourierSpectrum xsp = transform(make_gate("XOR"), u);
  CHECK(mutual_information(xj, xsp, 0b11) == doctest::Approx(1.0));
  CHECK(mutual_information(xj, xsp, 0b01) == doctest::Approx(0.0));

  const JointDistribution aj(make_gate("AND"), u);
  const FourierSpectrum asp = transform(make_gate("AND"), u);
  CHECK(mutual_information(aj, asp, 0b01) ==
        doctest::Approx(h2(0.25) - 0.5).epsilon(1e-9));

  CHECK_THROWS_AS(mutual_information(aj, xsp, 0b01), std::runtime_error);

  // deterministic mechanism: I(T; all) = H(T); monotone in the source set
  for (const TruthTable& tt : enumerate_gates(3)) {
    const JointDistribution jd(tt, InputMeasure::p_biased(0.75));
    CHECK(mutual_information_direct(jd, 0b111) ==
          doctest::Approx(jd.target_entropy()).epsilon(1e-12));
    for (int mask = 0; mask < 8; ++mask) {
      for (int sup = mask; sup < 8; ++sup) {
        if ((mask & sup) != mask) continue;
        CHECK(mutual_information_direct(jd, mask) <=
              mutual_information_direct(jd, sup) + 1e-12);
      }
    }
  }
}

TEST_CASE("chain rule consistency") {
  for (const TruthTable& tt : enumerate_gates(2)) {
    for (double p : kPGrid) {
      const JointDistribution jd(tt, InputMeasure::p_biased(p));
      const double lhs = mutual_information_direct(jd, 0b11);
      const double rhs = mutual_information_direct(jd, 0b01) +
                         (cond_entropy_direct(jd, 0b01) -
                          cond_entropy_direct(jd, 0b11));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("conditional mutual information and influence") {
  const InputMeasure u = InputMeasure::uniform();
  CHECK(conditional_mi(JointDistribution(make_gate("XOR"), u), 0) ==
        doctest::Approx(1.0));
  CHECK(conditional_mi(JointDistribution(make_gate("MAJ3"), u), 0) ==
        doctest::Approx(0.5));

  // h(p)·Inf_i = I(T;X_i|rest), both measures, all bivariate gates
  for (const TruthTable& tt : enumerate_gates(2)) {
    for (double p : kPGrid) {
      const InputMeasure m = InputMeasure::p_biased(p);
      const FourierSpectrum sp = transform(tt, m);
      const JointDistribution jd(tt, m);
      for (int i = 0; i < 2; ++i) {
        CHECK(std::abs(m.entropy_bits() * influence(sp, i) -
                       conditional_mi(jd, i)) < 1e-9);
      }
    }
  }
}

TEST_CASE("co-information") {
  const InputMeasure u = InputMeasure::uniform();
  CHECK(co_information(JointDistribution(make_gate("XOR"), u)) ==
        doctest::Approx(-1.0));
  CHECK(co_information(JointDistribution(make_gate("AND"), u)) ==
        doctest::Approx(h2(0.25) - 0.5 - 0.5).epsilon(1e-9));
  CHECK(co_information(JointDistribution(make_gate("DICT_1"), u)) ==
        doctest::Approx(0.0));
  CHECK_THROWS_AS(co_information(JointDistribution(make_gate("MAJ3"), u)),
                  std::domain_error);
}

TEST_CASE("info report") {
  const InfoReport rep =
      info_report(JointDistribution(make_gate("AND"), InputMeasure::uniform()));
  CHECK(rep.n == 2);
  CHECK(rep.target_entropy == doctest::Approx(h2(0.25)));
  CHECK(rep.mutual_information[0b11] == doctest::Approx(h2(0.25)));
  CHECK(rep.conditional_mi[0] == doctest::Approx(0.5));
  CHECK(rep.has_co_information);
  for (double h : rep.cond_entropy) CHECK(h >= 0.0);
}
