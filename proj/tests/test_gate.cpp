#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "boolfour/gate.hpp"

using namespace boolfour;

namespace {

// Independent majority oracle: evaluate sign(x+y+z) pointwise.
int maj3_oracle(int point) {
  int sum = 0;
  for (int j = 0; j < 3; ++j) sum += (point >> j & 1) ? -1 : 1;
  return sum > 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("make_gate named gates") {
  const TruthTable xorg = make_gate("XOR");
  CHECK(xorg.arity() == 2);
  CHECK(xorg.value(0) == 1);
  CHECK(xorg.value(1) == -1);
  CHECK(xorg.value(2) == -1);
  CHECK(xorg.value(3) == 1);

  const TruthTable dict = make_gate("DICT_1");
  for (int x = 0; x < 4; ++x) {
    const int x1 = (x & 1) ? -1 : 1;
    CHECK(dict.value(x) == x1);
  }

  const TruthTable maj = make_gate("MAJ3");
  for (int x = 0; x < 8; ++x) CHECK(maj.value(x) == maj3_oracle(x));
}

TEST_CASE("make_gate text forms") {
  CHECK(make_gate("2:0001") == make_gate("AND"));
  CHECK(make_gate("0001") == make_gate("AND"));
  CHECK(make_gate("AND").spec() == "2:0001");

  CHECK_THROWS_AS(make_gate("FROB"), std::invalid_argument);
  CHECK_THROWS_AS(make_gate("010"), std::invalid_argument);   // not a power of two
  CHECK_THROWS_AS(make_gate("2:01"), std::invalid_argument);  // length mismatch
  CHECK_THROWS_AS(make_gate("0"), std::invalid_argument);     // arity zero
  CHECK_THROWS_AS(make_gate("0002"), std::invalid_argument);  // bad digit
}

TEST_CASE("bit-string round trip for all bivariate gates") {
  for (const TruthTable& tt : enumerate_gates(2)) {
    CHECK(make_gate(tt.spec()) == tt);
    CHECK(TruthTable::from_bits(tt.bits()) == tt);
  }
}

TEST_CASE("enumerate_gates counts and order") {
  CHECK(gate_count(1) == 4);
  CHECK(gate_count(2) == 16);
  CHECK(gate_count(3) == 256);
  CHECK(gate_count(4) == 65536);
  CHECK_THROWS_AS(gate_count(5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_gates(5), std::invalid_argument);

  const std::vector<TruthTable> gates = enumerate_gates(2);
  REQUIRE(gates.size() == 16);
  for (size_t i = 0; i < gates.size(); ++i) CHECK(gates[i].index() == i);
  // first gate is the +1 constant, last the -1 constant
  CHECK(gates.front() == make_gate("CONST_+1"));
  CHECK(gates.back() == make_gate("CONST_-1"));
  CHECK(enumerate_gates(3).size() == 256);
}

TEST_CASE("classify named gates") {
  const GateClass and_cls = classify(make_gate("AND"));
  CHECK(and_cls.monotone);
  CHECK_FALSE(and_cls.antitone);
  CHECK(and_cls.unate);
  CHECK(and_cls.unate_signs == std::vector<int8_t>{1, 1});

  const GateClass xor_cls = classify(make_gate("XOR"));
  CHECK_FALSE(xor_cls.monotone);
  CHECK_FALSE(xor_cls.unate);
  CHECK(xor_cls.unate_signs.empty());

  const GateClass nand_cls = classify(make_gate("NAND"));
  CHECK(nand_cls.antitone);
  CHECK_FALSE(nand_cls.monotone);
  CHECK(nand_cls.unate);
  CHECK(nand_cls.unate_signs == std::vector<int8_t>{-1, -1});

  // constants: irrelevant coordinates tie-break to +1
  const GateClass const_cls = classify(make_gate("CONST_+1"));
  CHECK(const_cls.monotone);
  CHECK(const_cls.antitone);
  CHECK(const_cls.unate_signs == std::vector<int8_t>{1, 1});

  CHECK(classify(make_gate("MAJ3")).transitive_symmetric == true);
  CHECK(classify(make_gate("DICT_1")).transitive_symmetric == false);
  CHECK_FALSE(classify(make_gate("3:01010101")).transitive_symmetric.has_value());
}

TEST_CASE("classify negation symmetry") {
  for (int arity : {2, 3}) {
    for (const TruthTable& tt : enumerate_gates(arity)) {
      const GateClass cls = classify(tt);
      const GateClass neg = classify(tt.negated());
      CHECK(cls.unate == neg.unate);
      CHECK(cls.monotone == neg.antitone);
      CHECK(cls.antitone == neg.monotone);
    }
  }
}

TEST_CASE("monotone gate counts (Dedekind)") {
  int m2 = 0, m3 = 0;
  for (const TruthTable& tt : enumerate_gates(2)) {
    if (classify(tt).monotone) ++m2;
  }
  for (const TruthTable& tt : enumerate_gates(3)) {
    if (classify(tt).monotone) ++m3;
  }
  CHECK(m2 == 6);
  CHECK(m3 == 20);
}

TEST_CASE("sensitivity") {
  const TruthTable xorg = make_gate("XOR");
  for (int x = 0; x < 4; ++x) CHECK(sensitivity_at(xorg, x) == 2);
  const TruthTable c1 = make_gate("CONST_+1");
  for (int x = 0; x < 4; ++x) CHECK(sensitivity_at(c1, x) == 0);
  // MAJ3 at (+1,+1,-1): flipping either +1 input flips the output
  const TruthTable maj = make_gate("MAJ3");
  CHECK(sensitivity_at(maj, 0b100) == 2);
  CHECK_THROWS_AS(sensitivity_at(maj, 8), std::out_of_range);
  CHECK_THROWS_AS(sensitivity_at(maj, -1), std::out_of_range);

  for (const TruthTable& tt : enumerate_gates(3)) {
    for (int x = 0; x < 8; ++x) {
      const int s = sensitivity_at(tt, x);
      CHECK(s >= 0);
      CHECK(s <= 3);
    }
  }
}

TEST_CASE("expectation") {
  const InputMeasure uniform = InputMeasure::uniform();
  CHECK(expectation(make_gate("XOR"), uniform) == doctest::Approx(0.0));
  CHECK(expectation(make_gate("AND"), uniform) == doctest::Approx(0.5));
  // p = 1/2 behaves identically to uniform
  CHECK(expectation(make_gate("AND"), InputMeasure::p_biased(0.5)) ==
        expectation(make_gate("AND"), uniform));
  // AND at p: E[f] = 1 - 2(1-p)^2
  const double p = 0.9;
  CHECK(expectation(make_gate("AND"), InputMeasure::p_biased(p)) ==
        doctest::Approx(1.0 - 2.0 * (1 - p) * (1 - p)).epsilon(1e-12));
}

TEST_CASE("input measure") {
  CHECK_THROWS_AS(InputMeasure::p_biased(0.0), std::invalid_argument);
  CHECK_THROWS_AS(InputMeasure::p_biased(1.0), std::invalid_argument);
  const InputMeasure m = InputMeasure::p_biased(0.75);
  CHECK(m.mu() == doctest::Approx(0.5));
  CHECK(m.sigma_sq() == doctest::Approx(1.0 - m.mu() * m.mu()).epsilon(1e-15));
  CHECK(InputMeasure::p_biased(0.5).entropy_bits() == 1.0);
  CHECK(InputMeasure::uniform().prob_of(0b10, 2) == 0.25);
  // P(x = -1) carries mass 1-p per set bit
  CHECK(m.prob_of(0b01, 2) == doctest::Approx(0.25 * 0.75));
}

TEST_CASE("arity limits") {
  CHECK_THROWS_AS(TruthTable(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(TruthTable(17, std::vector<int8_t>(1u << 17, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(TruthTable(2, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(TruthTable(2, {1, 1, 1, 2}), std::invalid_argument);
}
