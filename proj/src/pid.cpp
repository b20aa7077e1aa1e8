#include "boolfour/pid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace boolfour {

namespace {

// Canonical form: sorted list of sorted index lists, e.g. "[[0,1],[0,2]]".
std::string node_key(const std::vector<unsigned>& sources) {
  std::vector<std::vector<int>> lists;
  lists.reserve(sources.size());
  for (unsigned mask : sources) {
    std::vector<int> indices;
    for (int j = 0; j < 8; ++j) {
      if (mask >> j & 1u) indices.push_back(j);
    }
    lists.push_back(std::move(indices));
  }
  std::sort(lists.begin(), lists.end());
  std::string key = "[";
  for (size_t i = 0; i < lists.size(); ++i) {
    if (i) key += ",";
    key += "[";
    for (size_t j = 0; j < lists[i].size(); ++j) {
      if (j) key += ",";
      key += std::to_string(lists[i][j]);
    }
    key += "]";
  }
  key += "]";
  return key;
}

// alpha ⪯ beta iff every member of beta contains some member of alpha.
bool node_below(const std::vector<unsigned>& alpha,
                const std::vector<unsigned>& beta) {
  for (unsigned b : beta) {
    bool covered = false;
    for (unsigned a : alpha) {
      if ((a & b) == a) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

// Atoms are nonnegative under imin; values within 1e-12 below zero are
// floating-point dust, anything worse signals a real inconsistency.
double clamp_atom(double atom, const std::string& where) {
  if (atom >= 0.0) return atom;
  if (atom < -1e-9) {
    throw std::runtime_error("negative PID atom at " + where +
                             "; lattice or measure inconsistency");
  }
  return atom >= -1e-12 ? 0.0 : atom;
}

}  // namespace

RedundancyLattice::RedundancyLattice(int n) : n_(n) {
  if (n != 2 && n != 3) {
    throw std::domain_error("redundancy lattice built for arity 2 or 3 only");
  }
  const unsigned subset_count = (1u << n) - 1;  // nonempty source subsets
  // Antichains: subsets of the subset family with pairwise incomparable
  // members, nonempty.
  std::vector<std::vector<unsigned>> antichains;
  for (unsigned pick = 1; pick < (1u << subset_count); ++pick) {
    std::vector<unsigned> members;
    for (unsigned s = 1; s <= subset_count; ++s) {
      if (pick >> (s - 1) & 1u) members.push_back(s);
    }
    bool antichain = true;
    for (size_t i = 0; i < members.size() && antichain; ++i) {
      for (size_t j = 0; j < members.size(); ++j) {
        if (i == j) continue;
        if ((members[i] & members[j]) == members[i]) {
          antichain = false;
          break;
        }
      }
    }
    if (antichain) antichains.push_back(std::move(members));
  }

  // Deterministic linear extension: sort by down-set size, then by key.
  std::vector<int> downset_size(antichains.size(), 0);
  for (size_t i = 0; i < antichains.size(); ++i) {
    for (size_t j = 0; j < antichains.size(); ++j) {
      if (node_below(antichains[j], antichains[i])) ++downset_size[i];
    }
  }
  std::vector<size_t> order(antichains.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (downset_size[a] != downset_size[b]) {
      return downset_size[a] < downset_size[b];
    }
    return node_key(antichains[a]) < node_key(antichains[b]);
  });

  nodes_.reserve(antichains.size());
  for (size_t idx : order) {
    Node node;
    node.sources = antichains[idx];
    node.key = node_key(node.sources);
    nodes_.push_back(std::move(node));
  }
  const int count = node_count();
  below_.assign(count, std::vector<bool>(count, false));
  strictly_below_.assign(count, {});
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      below_[a][b] = node_below(nodes_[a].sources, nodes_[b].sources);
      if (below_[a][b] && a != b) strictly_below_[b].push_back(a);
    }
  }
}

const RedundancyLattice& RedundancyLattice::for_arity(int n) {
  static const RedundancyLattice bivariate(2);
  static const RedundancyLattice trivariate(3);
  if (n == 2) return bivariate;
  if (n == 3) return trivariate;
  throw std::domain_error("redundancy lattice built for arity 2 or 3 only");
}

int RedundancyLattice::index_of(const std::vector<unsigned>& sources) const {
  const std::string key = node_key(sources);
  for (int i = 0; i < node_count(); ++i) {
    if (nodes_[i].key == key) return i;
  }
  throw std::invalid_argument("no lattice node " + key);
}

bool RedundancyLattice::below(int a, int b) const { return below_[a][b]; }

double specific_information(const JointDistribution& jd, int t,
                            unsigned subset_mask) {
  const int pts = 1 << jd.arity();
  if (subset_mask >= static_cast<unsigned>(pts)) {
    throw std::out_of_range("subset mask out of range");
  }
  const double pt = jd.target_prob(t);
  if (pt <= 0.0) throw std::domain_error("specific information needs P(t) > 0");
  // Joint mass of (X_A = a, T = t) and the marginal of X_A, per assignment.
  std::vector<double> joint(pts, 0.0), marginal(pts, 0.0);
  for (int x = 0; x < pts; ++x) {
    const unsigned key = static_cast<unsigned>(x) & subset_mask;
    marginal[key] += jd.point_prob(x);
    if (jd.target_value(x) == t) joint[key] += jd.point_prob(x);
  }
  double si = 0.0;
  for (int key = 0; key < pts; ++key) {
    if (joint[key] <= 0.0) continue;
    const double p_a_given_t = joint[key] / pt;
    const double p_t_given_a = joint[key] / marginal[key];
    si += p_a_given_t * (std::log2(p_t_given_a) - std::log2(pt));
  }
  return si;
}

double imin(const JointDistribution& jd, std::span<const unsigned> sources) {
  if (sources.empty()) {
    throw std::invalid_argument("imin needs a nonempty source collection");
  }
  double total = 0.0;
  for (int t : {-1, 1}) {
    const double pt = jd.target_prob(t);
    if (pt <= 0.0) continue;
    double least = specific_information(jd, t, sources[0]);
    for (size_t i = 1; i < sources.size(); ++i) {
      least = std::min(least, specific_information(jd, t, sources[i]));
    }
    total += pt * least;
  }
  return total;
}

PIDBivariate pid_bivariate(const JointDistribution& jd) {
  if (jd.arity() != 2) {
    throw std::domain_error("bivariate PID needs an arity-2 gate");
  }
  const unsigned kX = 0b01, kY = 0b10, kXY = 0b11;
  const std::array<unsigned, 2> both{kX, kY};
  PIDBivariate pid;
  pid.si = clamp_atom(imin(jd, both), "[[0],[1]]");
  pid.ui_x = clamp_atom(mutual_information_direct(jd, kX) - pid.si, "[[0]]");
  pid.ui_y = clamp_atom(mutual_information_direct(jd, kY) - pid.si, "[[1]]");
  pid.ci = clamp_atom(
      mutual_information_direct(jd, kXY) - pid.si - pid.ui_x - pid.ui_y,
      "[[0,1]]");
  return pid;
}

std::array<double, 3> PIDTrivariate::five_atom_sums() const {
  const auto dv = d.as_array();
  // Incidence of the ten combinations in I(T;X_i|rest), per source.
  static constexpr int rows[3][10] = {
      {1, 1, 1, 0, 1, 0, 0, 1, 0, 0},
      {1, 1, 0, 1, 0, 1, 0, 0, 1, 0},
      {1, 0, 1, 1, 0, 0, 1, 0, 0, 1},
  };
  std::array<double, 3> sums{};
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    for (int k = 0; k < 10; ++k) {
      if (rows[i][k]) s += dv[k];
    }
    sums[i] = s;
  }
  return sums;
}

PIDTrivariate pid_trivariate(const JointDistribution& jd) {
  if (jd.arity() != 3) {
    throw std::domain_error("trivariate PID needs an arity-3 gate");
  }
  const RedundancyLattice& lattice = RedundancyLattice::for_arity(3);
  const int count = lattice.node_count();

  std::vector<double> cumulative(count);
  for (int i = 0; i < count; ++i) {
    cumulative[i] = imin(jd, lattice.nodes()[i].sources);
  }

  // Möbius inversion along the linear extension (nodes are bottom-first).
  PIDTrivariate pid;
  pid.atoms.assign(count, 0.0);
  for (int i = 0; i < count; ++i) {
    double sum_below = 0.0;
    for (int j : lattice.strictly_below(i)) sum_below += pid.atoms[j];
    pid.atoms[i] =
        clamp_atom(cumulative[i] - sum_below, lattice.nodes()[i].key);
  }
  pid.joint_mi = mutual_information_direct(jd, 0b111);

  const auto at = [&](std::vector<unsigned> sources) {
    return pid.atoms[lattice.index_of(sources)];
  };
  pid.d.ci_xyz = at({0b111});
  pid.d.ci_xy = at({0b011});
  pid.d.ci_xz = at({0b101});
  pid.d.ci_yz = at({0b110});
  pid.d.ci_xy_xz = at({0b011, 0b101});
  pid.d.ci_xy_yz = at({0b011, 0b110});
  pid.d.ci_xz_yz = at({0b101, 0b110});
  pid.d.ui_x = at({0b001});
  pid.d.ui_y = at({0b010});
  pid.d.ui_z = at({0b100});
  return pid;
}

PsiVector psi_sums(const JointDistribution& jd) {
  if (jd.arity() != 3) {
    throw std::domain_error("psi sums need an arity-3 gate");
  }
  PsiVector psi;
  for (int i = 0; i < 3; ++i) psi.values[i] = conditional_mi(jd, i);
  return psi;
}

}  // namespace boolfour
