// Truth tables, input measures, and pointwise gate analysis.
//
// Encoding contract (used by every module in this library):
//   * A gate is f : {-1,+1}^n -> {-1,+1}. Outputs are stored as a flat
//     vector indexed by "point": bit j of the point index carries input j,
//     with bit value 0 -> x_j = +1 and bit value 1 -> x_j = -1.
//   * The text form is "n:bits" (e.g. "2:0001"); bits[i] is the output at
//     point i, again with 0 -> +1 and 1 -> -1. Named gates (AND, XOR, ...)
//     apply the usual bit semantics and then encode, so AND is "2:0001".
//   * A p-biased measure sets P[X_j = +1] = p independently per input,
//     so mu = 2p-1 and sigma = 2*sqrt(p(1-p)). The uniform measure behaves
//     identically to p = 1/2 (and shares the same code path).

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boolfour {

inline constexpr int kMaxArity = 16;           // single-gate analysis
inline constexpr int kMaxExhaustiveArity = 4;  // whole-space enumeration

/// Product distribution on the inputs: uniform, or p-biased with a single
/// p shared by all inputs.
class InputMeasure {
 public:
  enum class Kind { Uniform, PBiased };

  static InputMeasure uniform() { return InputMeasure(Kind::Uniform, 0.5); }
  static InputMeasure p_biased(double p);  // requires 0 < p < 1

  Kind kind() const { return kind_; }
  bool is_uniform_kind() const { return kind_ == Kind::Uniform; }
  double p() const { return p_; }

  double mu() const { return 2.0 * p_ - 1.0; }
  double sigma() const;
  double sigma_sq() const { return 4.0 * p_ * (1.0 - p_); }
  /// Binary entropy h(p) in bits; exactly 1 at p = 1/2.
  double entropy_bits() const;

  /// Orthonormal character values phi(x) = (x - mu)/sigma.
  double char_plus() const { return (1.0 - mu()) / sigma(); }
  double char_minus() const { return (-1.0 - mu()) / sigma(); }

  /// Mass of one input assignment (point encoding as above).
  double prob_of(int point, int arity) const;

  std::string label() const;  // "uniform" or "p=0.75"

  friend bool operator==(const InputMeasure& a, const InputMeasure& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  InputMeasure(Kind kind, double p) : kind_(kind), p_(p) {}
  Kind kind_;
  double p_;
};

/// A Boolean gate as an output vector over the hypercube.
class TruthTable {
 public:
  TruthTable(int arity, std::vector<int8_t> outputs);

  static TruthTable from_bits(std::string_view bits);  // arity inferred
  static TruthTable from_bits(int arity, std::string_view bits);
  /// Gate number `index`: bit i of index is the output bit at point i.
  static TruthTable from_index(int arity, uint64_t index);

  int arity() const { return n_; }
  int points() const { return 1 << n_; }
  int value(int point) const;  // +1 or -1
  std::span<const int8_t> values() const { return out_; }

  uint64_t index() const;    // arity <= 6 only
  std::string bits() const;  // "0001"
  std::string spec() const;  // "2:0001"

  /// Set for gates built by name; does not participate in equality.
  const std::optional<std::string>& name() const { return name_; }

  TruthTable negated() const;

  friend bool operator==(const TruthTable& a, const TruthTable& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  friend TruthTable make_gate(std::string_view);
  int n_;
  std::vector<int8_t> out_;
  std::optional<std::string> name_;
};

/// Parse a gate spec: a known name (AND, OR, XOR, NAND, NOR, XNOR, DICT_1,
/// DICT_2, CONST_+1, CONST_-1, XOR3, MAJ3, AND3, OR3, NAND3, NOR3,
/// DICT3_1..3), a bare bit-string, or "n:bits".
TruthTable make_gate(std::string_view spec);

/// Number of gates of the given arity, 2^(2^n). Requires arity <= 4.
uint64_t gate_count(int arity);

/// All gates of the given arity in ascending index order. Requires arity <= 4.
std::vector<TruthTable> enumerate_gates(int arity);

struct GateClass {
  bool monotone = false;  // nondecreasing along every coordinate
  bool antitone = false;
  bool unate = false;
  /// Orientation per coordinate when unate; irrelevant coordinates get +1.
  std::vector<int8_t> unate_signs;
  /// Curated flag, set only for named gates.
  std::optional<bool> transitive_symmetric;
};

GateClass classify(const TruthTable& tt);

/// Number of pivotal coordinates at the given point.
int sensitivity_at(const TruthTable& tt, int point);

/// E_m[f]; equals the empty-set Fourier coefficient under the same measure.
double expectation(const TruthTable& tt, const InputMeasure& m);

}  // namespace boolfour
