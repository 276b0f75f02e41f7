// Copyright 2026 The qcontrol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcontrol_cli/reports.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "qcontrol/channel_maps.hpp"
#include "qcontrol/decay.hpp"
#include "qcontrol/density_matrix.hpp"
#include "qcontrol/dynamics.hpp"
#include "qcontrol/eigen.hpp"
#include "qcontrol/entanglement.hpp"

namespace qcontrol::cli {
namespace {

double grid_point(double lo, double hi, int steps, int i) {
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
}

const char* sign_name(BellSign s) { return s == BellSign::Plus ? "plus" : "minus"; }

std::string axis_string(RotationAxis a) { return std::string(1, axis_name(a)); }

Json matrix_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) {
      row.push_back(Json::array({json_number(m(r, c).real()),
                                 json_number(m(r, c).imag())}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json weights_json(const SeparableDecomposition& d) {
  Json out = Json::array();
  for (const ProductTerm& term : d.terms) out.push_back(json_number(term.weight));
  return out;
}

DensityMatrix three_qubit_state(BellSign sign, double phi,
                                const SweepConfig& c, double phi_b) {
  DensityMatrix rho = full_correlated_state(sign, phi);
  if (c.second_axis) {
    rho = local_dephasing(rho, QubitLabel::B, *c.second_axis, phi_b);
  }
  return rho;
}

Json sweep_record(const SweepConfig& c, double phi, double phi_b) {
  const DensityMatrix pair =
      c.second_axis ? two_interaction_state(c.sign, phi, phi_b, *c.second_axis)
                    : reduced_dynamics(bell_state(c.sign),
                                       {QubitLabel::A, QubitLabel::C,
                                        RotationAxis::Z, phi});
  const DensityMatrix triple = three_qubit_state(c.sign, phi, c, phi_b);

  Json rec;
  rec["phi"] = json_number(phi);
  if (c.second_axis) rec["phi_b"] = json_number(phi_b);
  rec["concurrence"] = json_number(concurrence(pair).value);
  Json eig = Json::array();
  for (double v : hermitian_eigenvalues(pair.matrix())) eig.push_back(json_number(v));
  rec["eigenvalues"] = std::move(eig);
  rec["w_fidelity_plus"] =
      json_number(w_fidelity(three_qubit_state(BellSign::Plus, phi, c, phi_b)));
  rec["w_fidelity_minus"] = json_number(
      w_fidelity(three_qubit_state(BellSign::Minus, phi, c, phi_b)));
  rec["ghz_fidelity"] = json_number(ghz_fidelity(triple));
  rec["mermin_max_abs"] = json_number(mermin_max_abs(triple));
  rec["ppt_separable"] = ppt_separable(pair);
  Json corr = Json::array();
  for (const Correlator& k : nonzero_correlators(three_point_correlators(triple))) {
    corr.push_back({{"label", k.label()}, {"value", json_number(k.value)}});
  }
  rec["nonzero_three_point"] = std::move(corr);
  return rec;
}

}  // namespace

Json json_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json config_json(const RunConfig& run) {
  Json out;
  out["command"] = run.command_name();
  struct Params {
    Json& out;
    void operator()(const SweepConfig& c) const {
      out["sign"] = sign_name(c.sign);
      out["phi_start"] = c.phi_start;
      out["phi_end"] = c.phi_end;
      out["steps"] = c.steps;
      if (c.second_axis) {
        out["second_axis"] = axis_string(*c.second_axis);
        out["phi_b_start"] = c.phi_b_start;
        out["phi_b_end"] = c.phi_b_end;
      }
    }
    void operator()(const DecayConfig& c) const {
      out["gamma_a"] = c.gamma_a;
      out["gamma_b"] = c.gamma_b;
      out["axis"] = axis_string(c.axis);
      out["sign"] = sign_name(c.sign);
      out["t_max"] = c.t_max;
      out["steps"] = c.steps;
    }
    void operator()(const MapAnalysisConfig& c) const {
      out["qubit"] = std::string(1, qubit_name(c.qubit));
      out["axis"] = axis_string(c.axis);
      out["phi_i"] = c.phi_i;
      out["phi_f"] = c.phi_f;
      out["seed"] = c.seed;
    }
    void operator()(const VerifyConfig& c) const { out["seed"] = c.seed; }
  };
  std::visit(Params{out}, run.command);
  out["format"] = run.format == OutputFormat::Csv ? "csv" : "json";
  return out;
}

Report sweep_report(const SweepConfig& c) {
  Report r;
  const int b_steps = c.second_axis ? c.steps : 1;
  r.records.reserve(static_cast<std::size_t>(c.steps) * b_steps);
  for (int i = 0; i < c.steps; ++i) {
    const double phi = grid_point(c.phi_start, c.phi_end, c.steps, i);
    for (int j = 0; j < b_steps; ++j) {
      const double phi_b =
          c.second_axis ? grid_point(c.phi_b_start, c.phi_b_end, c.steps, j)
                        : 0.0;
      r.records.push_back(sweep_record(c, phi, phi_b));
    }
  }
  r.summary["records"] = r.records.size();
  return r;
}

Report decay_report(const DecayConfig& c) {
  DecayScenario scenario{c.gamma_a, c.gamma_b, c.axis, c.sign, {}};
  for (int i = 0; i < c.steps; ++i) {
    scenario.times.push_back(grid_point(0.0, c.t_max, c.steps, i));
  }
  scenario.validate();

  const std::optional<double> death =
      c.axis == RotationAxis::X ? sudden_death_time(c.gamma_a, c.gamma_b)
                                : std::nullopt;

  const double death_time =
      death.value_or(std::numeric_limits<double>::infinity());
  Report r;
  for (double t : scenario.times) {
    const DensityMatrix rho = decay_state(scenario, t);
    Json rec;
    rec["t"] = json_number(t);
    rec["concurrence"] = json_number(concurrence_decay(scenario, t));
    rec["concurrence_dynamics"] = json_number(concurrence(rho).value);
    rec["death_sum"] =
        json_number(death_condition_sum(c.gamma_a, c.gamma_b, t));
    rec["ppt_separable"] = ppt_separable(rho);
    rec["decomposition_weights"] =
        t >= death_time ? weights_json(separable_mixture_at(scenario, t))
                             : Json::array();
    r.records.push_back(std::move(rec));
  }

  r.summary["has_finite_death_time"] = death.has_value();
  if (death) {
    const SeparableDecomposition at_death =
        separable_mixture_at(scenario, death_time);
    r.summary["sudden_death_time"] = json_number(death_time);
    r.summary["death_decomposition_weights"] = weights_json(at_death);
    r.summary["death_decomposition_verified"] =
        verify_decomposition(decay_state(scenario, death_time), at_death);
  } else {
    r.summary["sudden_death_time"] = nullptr;
  }
  return r;
}

Report map_analysis_report(const MapAnalysisConfig& c) {
  const PauliScalingMap m = interval_map(c.qubit, c.axis, c.phi_i, c.phi_f);
  const auto& factors = c.qubit == QubitLabel::A ? m.factor_a : m.factor_b;
  const double factor = factors[c.axis == RotationAxis::X ? 1 : 0];
  const bool cp = is_completely_positive(m);

  const DensityMatrix image = reduced_dynamics(
      bell_state(BellSign::Plus), {c.qubit, QubitLabel::C, c.axis, c.phi_i});
  const MapOutcome mapped = apply_map(m, image);

  Json rec;
  rec["qubit"] = std::string(1, qubit_name(c.qubit));
  rec["axis"] = axis_string(c.axis);
  rec["phi_i"] = json_number(c.phi_i);
  rec["phi_f"] = json_number(c.phi_f);
  rec["factor"] = json_number(factor);
  rec["choi_min_eigenvalue"] =
      json_number(local_choi_min_eigenvalue(m, c.qubit));
  rec["full_choi_min_eigenvalue"] =
      json_number(choi_matrix(m).min_eigenvalue());
  rec["completely_positive"] = cp;

  std::optional<PositivityWitness> witness;
  if (!cp) witness = find_positivity_witness(m, c.seed);
  rec["has_witness"] = witness.has_value();
  rec["witness_label"] = witness ? witness->label : std::string();
  rec["domain_image_concurrence"] = json_number(concurrence(image).value);
  rec["domain_mapped_valid"] = mapped.positive();
  rec["domain_mapped_concurrence"] = json_number(
      mapped.positive() ? concurrence(mapped.state()).value : 0.0);

  Report r;
  r.records.push_back(std::move(rec));
  r.summary["factors"] = Json::array(
      {json_number(factors[0]), json_number(factors[1]), json_number(factors[2])});
  if (witness) {
    r.summary["witness_state"] = matrix_json(witness->state.matrix());
    r.summary["witness_image_min_eigenvalue"] =
        json_number(witness->image.min_eigenvalue);
    r.summary["witness_image"] = matrix_json(witness->image.matrix);
  }
  return r;
}

}  // namespace qcontrol::cli
