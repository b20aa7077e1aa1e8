// Partial information decomposition on the Williams–Beer redundancy
// lattice, computed with the closed-form I_min measure, for two and three
// sources. Every output is labeled with the measure ("imin"): atom values
// are measure-specific, while the combinations consumed by the spectral
// mappings (conditional mutual informations) are measure-independent.

#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "boolfour/info.hpp"

namespace boolfour {

inline constexpr const char* kPidMeasure = "imin";

/// Antichains of nonempty source subsets, ordered by
/// alpha ⪯ beta  iff  every member of beta contains some member of alpha.
/// Nodes are stored in a deterministic linear extension (bottom first).
class RedundancyLattice {
 public:
  struct Node {
    std::vector<unsigned> sources;  // sorted subset bitmasks
    std::string key;                // canonical form, e.g. "[[0,1],[0,2]]"
  };

  static const RedundancyLattice& for_arity(int n);  // n in {2, 3}, memoized

  int arity() const { return n_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int index_of(const std::vector<unsigned>& sources) const;

  bool below(int a, int b) const;  // node a ⪯ node b
  const std::vector<int>& strictly_below(int idx) const {
    return strictly_below_[idx];
  }

 private:
  explicit RedundancyLattice(int n);
  int n_;
  std::vector<Node> nodes_;
  std::vector<std::vector<bool>> below_;
  std::vector<std::vector<int>> strictly_below_;
};

/// Information source X_A provides about the outcome T = t:
/// Σ_a P(a|t)·(log2 P(t|a) - log2 P(t)). Throws if P(t) = 0.
double specific_information(const JointDistribution& jd, int t,
                            unsigned subset_mask);

/// Williams–Beer redundancy: Σ_t P(t)·min over the collection of
/// specific_information. The collection must be nonempty.
double imin(const JointDistribution& jd, std::span<const unsigned> sources);

struct PIDBivariate {
  double si = 0.0;    // redundancy
  double ui_x = 0.0;  // unique to X
  double ui_y = 0.0;  // unique to Y
  double ci = 0.0;    // synergy
};

PIDBivariate pid_bivariate(const JointDistribution& jd);

/// The ten PID combinations the trivariate mappings consume, read off the
/// lattice nodes {{XYZ}}, {{XY}}, {{XZ}}, {{YZ}}, {{XY},{XZ}},
/// {{XY},{YZ}}, {{XZ},{YZ}}, {{X}}, {{Y}}, {{Z}} in that order.
struct DVector {
  double ci_xyz = 0.0;
  double ci_xy = 0.0, ci_xz = 0.0, ci_yz = 0.0;
  double ci_xy_xz = 0.0, ci_xy_yz = 0.0, ci_xz_yz = 0.0;
  double ui_x = 0.0, ui_y = 0.0, ui_z = 0.0;

  std::array<double, 10> as_array() const {
    return {ci_xyz, ci_xy, ci_xz, ci_yz,    ci_xy_xz,
            ci_xy_yz, ci_xz_yz, ui_x, ui_y, ui_z};
  }
};

struct PIDTrivariate {
  std::vector<double> atoms;  // by lattice node index (18 entries)
  DVector d;
  double joint_mi = 0.0;  // I(T;X,Y,Z)

  /// Five-atom sums: d applied to the per-source incidence rows; equals
  /// I(T;X_i|rest) by lattice consistency.
  std::array<double, 3> five_atom_sums() const;
};

/// Cumulative I_min at every lattice node, atoms by Möbius inversion.
/// Atom values within 1e-12 below zero are clamped; anything below -1e-9
/// throws (I_min atoms are nonnegative, so that signals a lattice bug).
PIDTrivariate pid_trivariate(const JointDistribution& jd);

/// psi_i = I(T;X_i|rest) in bits, computed directly from conditional
/// entropies (never from atoms).
struct PsiVector {
  std::array<double, 3> values{};
};

PsiVector psi_sums(const JointDistribution& jd);

}  // namespace boolfour
