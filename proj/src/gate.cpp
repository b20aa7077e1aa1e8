#include "boolfour/gate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace boolfour {

namespace {

void check_arity(int n, int max) {
  if (n < 1 || n > max) {
    throw std::invalid_argument("arity " + std::to_string(n) +
                                " outside supported range [1, " +
                                std::to_string(max) + "]");
  }
}

// Named gates as (arity, output bit-string, transitive-symmetric flag).
struct NamedGate {
  int arity;
  const char* bits;
  bool transitive_symmetric;
};

const std::unordered_map<std::string, NamedGate>& named_gates() {
  static const std::unordered_map<std::string, NamedGate> table = {
      {"AND", {2, "0001", true}},      {"OR", {2, "0111", true}},
      {"XOR", {2, "0110", true}},      {"NAND", {2, "1110", true}},
      {"NOR", {2, "1000", true}},     {"XNOR", {2, "1001", true}},
      {"DICT_1", {2, "0101", false}},  {"DICT_2", {2, "0011", false}},
      {"CONST_+1", {2, "0000", true}}, {"CONST_-1", {2, "1111", true}},
      {"XOR3", {3, "01101001", true}}, {"MAJ3", {3, "00010111", true}},
      {"AND3", {3, "00000001", true}}, {"OR3", {3, "01111111", true}},
      {"NAND3", {3, "11111110", true}},
      {"NOR3", {3, "10000000", true}},
      {"DICT3_1", {3, "01010101", false}},
      {"DICT3_2", {3, "00110011", false}},
      {"DICT3_3", {3, "00001111", false}},
  };
  return table;
}

}  // namespace

InputMeasure InputMeasure::p_biased(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("bias p must lie strictly in (0, 1)");
  }
  return InputMeasure(Kind::PBiased, p);
}

double InputMeasure::sigma() const { return 2.0 * std::sqrt(p_ * (1.0 - p_)); }

double InputMeasure::entropy_bits() const {
  if (p_ == 0.5) return 1.0;
  return -p_ * std::log2(p_) - (1.0 - p_) * std::log2(1.0 - p_);
}

double InputMeasure::prob_of(int point, int arity) const {
  // Point bit 0 means x = +1, which has mass p.
  double prob = 1.0;
  for (int j = 0; j < arity; ++j) {
    prob *= ((point >> j) & 1) ? (1.0 - p_) : p_;
  }
  return prob;
}

std::string InputMeasure::label() const {
  if (is_uniform_kind()) return "uniform";
  std::string s = "p=" + std::to_string(p_);
  // Trim trailing zeros from to_string's fixed six decimals.
  while (s.size() > 3 && s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

TruthTable::TruthTable(int arity, std::vector<int8_t> outputs)
    : n_(arity), out_(std::move(outputs)) {
  check_arity(n_, kMaxArity);
  if (out_.size() != static_cast<size_t>(1) << n_) {
    throw std::invalid_argument("truth table needs exactly 2^arity outputs");
  }
  for (int8_t v : out_) {
    if (v != 1 && v != -1) {
      throw std::invalid_argument("truth table outputs must be +1 or -1");
    }
  }
}

TruthTable TruthTable::from_bits(std::string_view bits) {
  if (bits.empty() || std::popcount(bits.size()) != 1) {
    throw std::invalid_argument("bit-string length must be a power of two");
  }
  int n = std::countr_zero(bits.size());
  if (n == 0) throw std::invalid_argument("bit-string is too short");
  return from_bits(n, bits);
}

TruthTable TruthTable::from_bits(int arity, std::string_view bits) {
  check_arity(arity, kMaxArity);
  if (bits.size() != static_cast<size_t>(1) << arity) {
    throw std::invalid_argument("bit-string length does not match arity");
  }
  std::vector<int8_t> out(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '0') {
      out[i] = 1;
    } else if (bits[i] == '1') {
      out[i] = -1;
    } else {
      throw std::invalid_argument("bit-string may contain only 0 and 1");
    }
  }
  return TruthTable(arity, std::move(out));
}

TruthTable TruthTable::from_index(int arity, uint64_t index) {
  check_arity(arity, 6);
  const int pts = 1 << arity;
  if (arity < 6 && index >> pts) {
    throw std::invalid_argument("gate index out of range");
  }
  std::vector<int8_t> out(pts);
  for (int i = 0; i < pts; ++i) {
    out[i] = ((index >> i) & 1) ? -1 : 1;
  }
  return TruthTable(arity, std::move(out));
}

int TruthTable::value(int point) const {
  if (point < 0 || point >= points()) {
    throw std::out_of_range("point index out of range");
  }
  return out_[point];
}

uint64_t TruthTable::index() const {
  if (n_ > 6) throw std::domain_error("gate index only defined for arity <= 6");
  uint64_t idx = 0;
  for (int i = 0; i < points(); ++i) {
    if (out_[i] == -1) idx |= uint64_t(1) << i;
  }
  return idx;
}

std::string TruthTable::bits() const {
  std::string s(out_.size(), '0');
  for (size_t i = 0; i < out_.size(); ++i) {
    if (out_[i] == -1) s[i] = '1';
  }
  return s;
}

std::string TruthTable::spec() const {
  return std::to_string(n_) + ":" + bits();
}

TruthTable TruthTable::negated() const {
  std::vector<int8_t> out(out_.size());
  for (size_t i = 0; i < out_.size(); ++i) out[i] = static_cast<int8_t>(-out_[i]);
  return TruthTable(n_, std::move(out));
}

TruthTable make_gate(std::string_view spec) {
  std::string key(spec);
  if (auto it = named_gates().find(key); it != named_gates().end()) {
    TruthTable tt = TruthTable::from_bits(it->second.arity, it->second.bits);
    tt.name_ = key;
    return tt;
  }
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    int arity = 0;
    try {
      size_t used = 0;
      arity = std::stoi(std::string(spec.substr(0, colon)), &used);
      if (used != colon) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad arity in gate spec '" + key + "'");
    }
    return TruthTable::from_bits(arity, spec.substr(colon + 1));
  }
  if (!spec.empty() &&
      spec.find_first_not_of("01") == std::string_view::npos) {
    return TruthTable::from_bits(spec);
  }
  throw std::invalid_argument("unknown gate name '" + key + "'");
}

uint64_t gate_count(int arity) {
  check_arity(arity, kMaxExhaustiveArity);
  return uint64_t(1) << (1 << arity);
}

std::vector<TruthTable> enumerate_gates(int arity) {
  const uint64_t count = gate_count(arity);
  std::vector<TruthTable> gates;
  gates.reserve(count);
  for (uint64_t idx = 0; idx < count; ++idx) {
    gates.push_back(TruthTable::from_index(arity, idx));
  }
  return gates;
}

GateClass classify(const TruthTable& tt) {
  const int n = tt.arity();
  const int pts = tt.points();
  GateClass cls;
  cls.unate = true;
  cls.unate_signs.assign(n, 0);
  bool all_up = true, all_down = true;
  for (int i = 0; i < n; ++i) {
    const int bit = 1 << i;
    bool up_ok = true;    // flipping x_i from -1 to +1 never decreases f
    bool down_ok = true;  // the reverse orientation
    for (int x = 0; x < pts; ++x) {
      if (x & bit) continue;  // visit each pair once, from the x_i=+1 side
      const int plus = tt.value(x);
      const int minus = tt.value(x | bit);
      if (plus < minus) up_ok = false;
      if (minus < plus) down_ok = false;
    }
    if (!up_ok && !down_ok) cls.unate = false;
    all_up &= up_ok;
    all_down &= down_ok;
    // Tie-break: an irrelevant coordinate (both orientations valid) is +1.
    cls.unate_signs[i] = up_ok ? int8_t(1) : int8_t(-1);
  }
  cls.monotone = all_up;
  cls.antitone = all_down;
  if (!cls.unate) cls.unate_signs.clear();
  if (tt.name()) {
    // Curated knowledge; never derived algorithmically.
    static const std::unordered_map<std::string, bool> curated = [] {
      std::unordered_map<std::string, bool> m;
      for (const char* s : {"AND", "OR", "XOR", "NAND", "NOR", "XNOR",
                            "CONST_+1", "CONST_-1", "XOR3", "MAJ3", "AND3",
                            "OR3", "NAND3", "NOR3"}) {
        m[s] = true;  // fully symmetric gates
      }
      for (const char* s :
           {"DICT_1", "DICT_2", "DICT3_1", "DICT3_2", "DICT3_3"}) {
        m[s] = false;
      }
      return m;
    }();
    if (auto it = curated.find(*tt.name()); it != curated.end()) {
      cls.transitive_symmetric = it->second;
    }
  }
  return cls;
}

int sensitivity_at(const TruthTable& tt, int point) {
  if (point < 0 || point >= tt.points()) {
    throw std::out_of_range("point index out of range");
  }
  int pivotal = 0;
  for (int i = 0; i < tt.arity(); ++i) {
    if (tt.value(point) != tt.value(point ^ (1 << i))) ++pivotal;
  }
  return pivotal;
}

double expectation(const TruthTable& tt, const InputMeasure& m) {
  double e = 0.0;
  for (int x = 0; x < tt.points(); ++x) {
    e += m.prob_of(x, tt.arity()) * tt.value(x);
  }
  return e;
}

}  // namespace boolfour
