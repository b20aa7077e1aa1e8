#include "boolfour/json_io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace boolfour {

namespace {

using bjson = nlohmann::ordered_json;

// Non-finite residuals (exception sentinels) are not representable in JSON
// numbers; keep them readable.
bjson num(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? bjson("nan") : bjson(v > 0 ? "inf" : "-inf");
}

std::string csv_double(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bjson measure_json(const InputMeasure& m) {
  if (m.is_uniform_kind()) return bjson("uniform");
  return bjson{{"p", m.p()}};
}

bjson class_json(const GateClass& cls) {
  bjson j;
  j["monotone"] = cls.monotone;
  j["antitone"] = cls.antitone;
  j["unate"] = cls.unate;
  if (cls.unate) {
    j["unate_signs"] = bjson::array();
    for (int8_t s : cls.unate_signs) j["unate_signs"].push_back(int(s));
  }
  if (cls.transitive_symmetric) {
    j["transitive_symmetric"] = *cls.transitive_symmetric;
  }
  return j;
}

bjson spectrum_jobj(const FourierSpectrum& sp) {
  bjson j;
  j["n"] = sp.n;
  j["basis"] = measure_json(sp.measure);
  bjson coeffs = bjson::object();
  for (size_t s = 0; s < sp.coeff.size(); ++s) {
    coeffs[std::to_string(s)] = sp.coeff[s];
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

bjson info_jobj(const InfoReport& rep) {
  bjson j;
  j["target_entropy"] = rep.target_entropy;
  bjson ce = bjson::object(), mi = bjson::object();
  for (size_t mask = 0; mask < rep.cond_entropy.size(); ++mask) {
    ce[std::to_string(mask)] = rep.cond_entropy[mask];
    mi[std::to_string(mask)] = rep.mutual_information[mask];
  }
  j["cond_entropy"] = std::move(ce);
  j["mutual_information"] = std::move(mi);
  j["conditional_mi"] = rep.conditional_mi;
  if (rep.has_co_information) j["co_information"] = rep.co_information;
  return j;
}

bjson pid_bivariate_jobj(const PIDBivariate& pid) {
  bjson j;
  j["measure"] = kPidMeasure;
  j["si"] = pid.si;
  j["ui_x"] = pid.ui_x;
  j["ui_y"] = pid.ui_y;
  j["ci"] = pid.ci;
  j["atoms"] = bjson{{"[[0],[1]]", pid.si},
                     {"[[0]]", pid.ui_x},
                     {"[[1]]", pid.ui_y},
                     {"[[0,1]]", pid.ci}};
  return j;
}

// psi defaults to the five-atom sums; callers holding the joint
// distribution pass the directly computed conditional MIs instead.
bjson pid_trivariate_jobj(const PIDTrivariate& pid,
                          const std::array<double, 3>* psi_direct = nullptr) {
  const RedundancyLattice& lattice = RedundancyLattice::for_arity(3);
  bjson j;
  j["measure"] = kPidMeasure;
  bjson atoms = bjson::object();
  for (int i = 0; i < lattice.node_count(); ++i) {
    atoms[lattice.nodes()[i].key] = pid.atoms[i];
  }
  j["atoms"] = std::move(atoms);
  j["d_vector"] = bjson{
      {"ci_xyz", pid.d.ci_xyz},       {"ci_xy", pid.d.ci_xy},
      {"ci_xz", pid.d.ci_xz},         {"ci_yz", pid.d.ci_yz},
      {"ci_xy_xz", pid.d.ci_xy_xz},   {"ci_xy_yz", pid.d.ci_xy_yz},
      {"ci_xz_yz", pid.d.ci_xz_yz},   {"ui_x", pid.d.ui_x},
      {"ui_y", pid.d.ui_y},           {"ui_z", pid.d.ui_z}};
  const std::array<double, 3> psi =
      psi_direct ? *psi_direct : pid.five_atom_sums();
  j["psi"] = std::vector<double>(psi.begin(), psi.end());
  j["joint_mi"] = pid.joint_mi;
  return j;
}

bjson bound_check_json(const BoundCheck& b) {
  bjson j;
  j["checked"] = b.checked;
  if (b.checked) {
    j["lhs"] = b.lhs;
    j["rhs"] = b.rhs;
    j["pass"] = b.pass;
  }
  return j;
}

bjson record_json(const MappingRecord& rec) {
  bjson j;
  j["gate"] = rec.gate;
  j["measure"] = rec.measure;
  j["check"] = rec.check;
  if (!rec.predicted.empty()) j["predicted"] = rec.predicted;
  if (!rec.actual.empty()) j["actual"] = rec.actual;
  j["residual"] = num(rec.residual);
  j["pass"] = rec.pass;
  if (rec.printed_formula_discrepancy) j["printed_formula_discrepancy"] = true;
  if (!rec.flags.empty()) j["flags"] = rec.flags;
  return j;
}

// Mapping residual records for one analyzed gate.
bjson mapping_jobj(const TruthTable& tt, const InputMeasure& m,
                   const FourierSpectrum& sp, const JointDistribution& jd,
                   double tol) {
  const GateClass cls = classify(tt);
  bjson j = bjson::array();
  const std::string gate = tt.spec();
  const std::string measure = m.label();
  const double ef = sp.empty_coefficient();
  const double ef_sq = ef * ef;

  const auto push = [&](MappingRecord rec) { j.push_back(record_json(rec)); };

  if (tt.arity() == 2) {
    const PIDBivariate pid = pid_bivariate(jd);
    const double ax = sp.at(1), ay = sp.at(2), axy = sp.at(3);
    {
      MappingRecord rec{gate, measure, "squared-map", {}, {}, 0.0, false, false, {}};
      const BivariateSquared pred = p_biased_bivariate(pid, ef_sq, m);
      rec.predicted = {pred.xy, pred.x, pred.y};
      rec.actual = {axy * axy, ax * ax, ay * ay};
      rec.residual = std::max({std::abs(pred.xy - axy * axy),
                               std::abs(pred.x - ax * ax),
                               std::abs(pred.y - ay * ay)});
      rec.pass = rec.residual <= tol;
      push(rec);
    }
    if (m.is_uniform_kind()) {
      MappingRecord rec{gate, measure, "squared-map-stab", {}, {}, 0.0, false, false, {}};
      const BivariateSquared pred = phi_bivariate_stab(pid, stability(sp, -1.0));
      rec.predicted = {pred.xy, pred.x, pred.y};
      rec.actual = {axy * axy, ax * ax, ay * ay};
      rec.residual = std::max({std::abs(pred.xy - axy * axy),
                               std::abs(pred.x - ax * ax),
                               std::abs(pred.y - ay * ay)});
      rec.pass = rec.residual <= tol;
      push(rec);
    }
    if (cls.monotone || cls.antitone) {
      const Direction dir =
          cls.monotone ? Direction::Increasing : Direction::Decreasing;
      const MonotoneBivariateMap map = p_biased_bivariate_monotone(pid, m, dir);
      MappingRecord rec{gate, measure, "monotone-map", {}, {}, 0.0, false, false, {}};
      rec.predicted = {map.coeff_x, map.coeff_y, map.sq_xy};
      rec.actual = {ax, ay, axy * axy};
      rec.residual = std::max({std::abs(map.coeff_x - ax),
                               std::abs(map.coeff_y - ay),
                               std::abs(map.sq_xy - axy * axy),
                               std::abs(map.consistency_residual)});
      rec.pass = rec.residual <= tol;
      push(rec);
    }
    if (cls.unate) {
      const MonotoneBivariateMap map = p_biased_bivariate_unate(
          pid, m, cls.unate_signs[0], cls.unate_signs[1]);
      MappingRecord rec{gate, measure, "unate-sign", {}, {}, 0.0, false, false, {}};
      rec.predicted = {map.coeff_x, map.coeff_y};
      rec.actual = {ax, ay};
      rec.residual =
          std::max(std::abs(map.coeff_x - ax), std::abs(map.coeff_y - ay));
      rec.pass = rec.residual <= tol;
      push(rec);
    }
    if (m.is_uniform_kind()) {
      const double alpha = std::min(jd.target_prob(1), jd.target_prob(-1));
      const FunctionalsReport fn = functionals_from_pid(
          pid, ef_sq, alpha, mutual_information_direct(jd, 0b11),
          co_information(jd), 0.5, 0.25);
      MappingRecord rec{gate, measure, "influence-from-pid", {}, {}, 0.0, false, false, {}};
      rec.predicted = {fn.influence};
      rec.actual = {total_influence(sp)};
      rec.residual = std::abs(fn.influence - total_influence(sp));
      rec.pass = rec.residual <= tol;
      rec.printed_formula_discrepancy = fn.printed_formula_discrepancy;
      push(rec);
    }
  } else if (tt.arity() == 3) {
    const PIDTrivariate pid = pid_trivariate(jd);
    const PsiVector psi = psi_sums(jd);
    {
      const CoefficientBounds bounds = phi_trivariate_bounds(pid, m);
      MappingRecord rec{gate, measure, "interval-bounds", {}, {}, 0.0, false, false, {}};
      double violation = 0.0;
      for (const CoefficientBounds::Entry& e : bounds.entries) {
        const double actual = sp.at(e.mask) * sp.at(e.mask);
        rec.predicted.push_back(e.lo);
        rec.predicted.push_back(e.hi);
        rec.actual.push_back(actual);
        violation = std::max({violation, e.lo - actual, actual - e.hi});
        if (e.reconstructed) rec.flags.push_back("reconstructed");
      }
      rec.residual = std::max(0.0, violation);
      rec.pass = violation <= 1e-12;
      push(rec);
    }
    if (cls.monotone || cls.antitone) {
      const Direction dir =
          cls.monotone ? Direction::Increasing : Direction::Decreasing;
      const TrivariateSolution sol = solve_trivariate_monotone(psi, ef, m, dir);
      MappingRecord rec{gate, measure, "monotone-system", {}, {}, 0.0, false, false, {}};
      rec.predicted = {sol.first_order[0], sol.first_order[1],
                       sol.first_order[2], sol.sq_xyz,
                       sol.sq_xy,          sol.sq_xz,
                       sol.sq_yz};
      rec.actual = {sp.at(1),          sp.at(2),          sp.at(4),
                    sp.at(7) * sp.at(7), sp.at(3) * sp.at(3),
                    sp.at(5) * sp.at(5), sp.at(6) * sp.at(6)};
      double r = 0.0;
      for (size_t i = 0; i < rec.predicted.size(); ++i) {
        r = std::max(r, std::abs(rec.predicted[i] - rec.actual[i]));
      }
      rec.residual = r;
      rec.pass = r <= tol;
      push(rec);

      const PrintedFormulaReport printed =
          check_printed_trivariate_formulas(psi, ef, m, dir);
      MappingRecord prec{gate, measure, "printed-closed-forms", {}, {}, 0.0, true, false, {}};
      prec.predicted.assign(printed.printed.begin(), printed.printed.end());
      prec.actual = {printed.solver.sq_xyz, printed.solver.sq_xy,
                     printed.solver.sq_xz, printed.solver.sq_yz};
      double worst = 0.0;
      for (double d : printed.residual_vs_solver) {
        worst = std::max(worst, std::abs(d));
      }
      prec.residual = worst;
      prec.printed_formula_discrepancy = printed.printed_formula_discrepancy;
      push(prec);
    }
    if (cls.unate) {
      const TrivariateSolution sol = phi_trivariate_unate(
          psi, {cls.unate_signs[0], cls.unate_signs[1], cls.unate_signs[2]},
          ef, m);
      MappingRecord rec{gate, measure, "unate-sign", {}, {}, 0.0, false, false, {}};
      rec.predicted = {sol.first_order[0], sol.first_order[1],
                       sol.first_order[2]};
      rec.actual = {sp.at(1), sp.at(2), sp.at(4)};
      double r = 0.0;
      for (size_t i = 0; i < rec.predicted.size(); ++i) {
        r = std::max(r, std::abs(rec.predicted[i] - rec.actual[i]));
      }
      rec.residual = r;
      rec.pass = r <= tol;
      push(rec);
    }
  }
  return j;
}

bjson check_stat_json(const CheckStat& s) {
  bjson j;
  j["id"] = s.id;
  j["pass"] = s.pass;
  j["fail"] = s.fail;
  j["worst_residual"] = num(s.worst_residual);
  j["worst_gate"] = s.worst_gate;
  return j;
}

}  // namespace

std::string spectrum_json(const FourierSpectrum& sp) {
  return spectrum_jobj(sp).dump(2);
}

std::string info_json(const InfoReport& report) {
  return info_jobj(report).dump(2);
}

std::string pid_bivariate_json(const PIDBivariate& pid) {
  return pid_bivariate_jobj(pid).dump(2);
}

std::string pid_trivariate_json(const PIDTrivariate& pid) {
  return pid_trivariate_jobj(pid).dump(2);
}

std::string analyze_json(const TruthTable& tt, const InputMeasure& m,
                         double tol) {
  const FourierSpectrum sp = transform(tt, m);
  const JointDistribution jd(tt, m);

  bjson j;
  j["schema"] = 1;
  bjson gate;
  gate["spec"] = tt.spec();
  if (tt.name()) gate["name"] = *tt.name();
  gate["arity"] = tt.arity();
  gate["class"] = class_json(classify(tt));
  j["gate"] = std::move(gate);
  j["measure"] = measure_json(m);
  j["expectation"] = sp.empty_coefficient();
  j["variance"] = variance(sp);
  j["spectrum"] = spectrum_jobj(sp);

  bjson infl;
  infl["per_variable"] = bjson::array();
  for (int i = 0; i < tt.arity(); ++i) {
    infl["per_variable"].push_back(influence(sp, i));
  }
  infl["total"] = total_influence(sp);
  j["influence"] = std::move(infl);

  if (m.is_uniform_kind()) {
    bjson stab;
    stab["rho"] = bjson::array();
    stab["value"] = bjson::array();
    for (double rho : {-1.0, -0.5, 0.0, 0.25, 0.5, 0.75, 1.0}) {
      stab["rho"].push_back(rho);
      stab["value"].push_back(stability(sp, rho));
    }
    j["stability"] = std::move(stab);
    bjson ns;
    ns["delta"] = bjson::array();
    ns["value"] = bjson::array();
    for (double delta : {0.0, 0.1, 0.25, 0.5}) {
      ns["delta"].push_back(delta);
      ns["value"].push_back(noise_sensitivity(sp, delta));
    }
    j["noise_sensitivity"] = std::move(ns);
  }

  const BoundReport bounds = classical_bounds(sp, tt);
  j["classical_bounds"] = bjson{{"poincare", bound_check_json(bounds.poincare)},
                                {"entropy_bound", bound_check_json(bounds.entropy_bound)},
                                {"symmetric_bound", bound_check_json(bounds.symmetric_bound)}};

  if (tt.arity() <= 8) {
    j["info"] = info_jobj(info_report(jd));
  } else {
    bjson small;
    small["target_entropy"] = jd.target_entropy();
    bjson cmi = bjson::array();
    for (int i = 0; i < tt.arity(); ++i) cmi.push_back(conditional_mi(jd, i));
    small["conditional_mi"] = std::move(cmi);
    j["info"] = std::move(small);
  }

  if (tt.arity() == 2) {
    j["pid"] = pid_bivariate_jobj(pid_bivariate(jd));
  } else if (tt.arity() == 3) {
    const PsiVector psi = psi_sums(jd);
    j["pid"] = pid_trivariate_jobj(pid_trivariate(jd), &psi.values);
  }
  if (tt.arity() == 2 || tt.arity() == 3) {
    j["mapping"] = mapping_jobj(tt, m, sp, jd, tol);
  }
  return j.dump(2);
}

std::string verification_json(const VerificationReport& report) {
  bjson j;
  j["schema"] = 1;
  j["suite"] = report.suite;
  j["gate_count"] = report.gate_count;
  j["measures"] = report.measures;
  j["tolerance"] = report.tolerance;
  j["all_passed"] = report.all_passed;
  j["checks"] = bjson::array();
  for (const CheckStat& s : report.checks) j["checks"].push_back(check_stat_json(s));
  j["failures"] = bjson::array();
  for (const MappingRecord& rec : report.failures) {
    j["failures"].push_back(record_json(rec));
  }
  j["discrepancies"] = bjson::array();
  for (const DiscrepancyStat& d : report.discrepancies) {
    j["discrepancies"].push_back(bjson{{"id", d.id},
                                       {"flagged", d.flagged},
                                       {"worst_gap", num(d.worst_gap)},
                                       {"worst_gate", d.worst_gate}});
  }
  if (report.has_tightest) {
    j["tightest_constants"] = bjson{
        {"lower", std::vector<double>(report.tightest_lower.begin(),
                                      report.tightest_lower.end())},
        {"upper", std::vector<double>(report.tightest_upper.begin(),
                                      report.tightest_upper.end())}};
  }
  j["duration_seconds"] = report.duration_seconds;
  return j.dump(2);
}

std::string verification_csv(const VerificationReport& report) {
  std::string csv = "gate,measure,check,residual,pass\n";
  for (const MappingRecord& rec : report.records) {
    csv += rec.gate;
    csv += ',';
    csv += rec.measure;
    csv += ',';
    csv += rec.check;
    csv += ',';
    csv += csv_double(rec.residual);
    csv += ',';
    csv += rec.pass ? "1" : "0";
    csv += '\n';
  }
  return csv;
}

std::string conjecture_json(const ConjectureScanResult& result) {
  bjson j;
  j["schema"] = 1;
  j["measure"] = result.measure;
  j["epsilon"] = result.epsilon;
  j["gate_count"] = result.gate_count;
  j["pid_group_count"] = result.pid_group_count;
  j["collision_groups"] = bjson::array();
  for (const CollisionGroup& g : result.collisions) {
    j["collision_groups"].push_back(
        bjson{{"gates", g.gates}, {"max_spectrum_gap", g.max_spectrum_gap}});
  }
  j["collision_free"] = result.collisions.empty();
  j["note"] = result.note;
  j["duration_seconds"] = result.duration_seconds;
  return j.dump(2);
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string csv =
      "p,gate_count,max_equality_residual,min_lower_slack,min_upper_slack,"
      "all_pass\n";
  for (const SweepRow& row : rows) {
    csv += csv_double(row.p);
    csv += ',';
    csv += std::to_string(row.gate_count);
    csv += ',';
    csv += csv_double(row.max_equality_residual);
    csv += ',';
    csv += csv_double(row.min_lower_slack);
    csv += ',';
    csv += csv_double(row.min_upper_slack);
    csv += ',';
    csv += row.all_pass ? "1" : "0";
    csv += '\n';
  }
  return csv;
}

}  // namespace boolfour
