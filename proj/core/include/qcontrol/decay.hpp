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

#pragma once

#include <optional>
#include <vector>

#include "qcontrol/density_matrix.hpp"
#include "qcontrol/dynamics.hpp"
#include "qcontrol/entanglement.hpp"

namespace qcontrol {

/// Exponential loss of the interaction factors, cos(phi_A) = exp(-gamma_a t)
/// and cos(phi_B) = exp(-gamma_b t), starting from a Bell state.
struct DecayScenario {
  double gamma_a = 0.0;
  double gamma_b = 0.0;
  RotationAxis axis_b = RotationAxis::X;
  BellSign sign = BellSign::Plus;
  std::vector<double> times;

  /// Throws DomainError when a rate is negative or non-finite. Axes other
  /// than x and z are rejected too, as are unsorted or negative time grids.
  void validate() const;
};

/// phi = arccos(exp(-gamma t)), in [0, pi/2).
double decay_angles(double gamma, double t);

/// d phi / dt = gamma exp(-gamma t) / sqrt(1 - exp(-2 gamma t)), which is
/// gamma cot(phi). Throws SingularityError for t <= 0, where the rate
/// diverges.
double hamiltonian_coefficient(double gamma, double t);

/// exp(-a t) + exp(-a t) exp(-b t) + exp(-b t). Concurrence for the x-axis
/// scenario vanishes where this reaches 1.
double death_condition_sum(double gamma_a, double gamma_b, double t);

/// Closed-form concurrence: for axis x, max(0, death_condition_sum - 1) / 2;
/// for axis z, exp(-(gamma_a + gamma_b) t).
double concurrence_decay(const DecayScenario& s, double t);

/// Two-qubit state of the scenario at time t, built by the dynamics.
DensityMatrix decay_state(const DecayScenario& s, double t);

/// Unique positive root of death_condition_sum(gamma_a, gamma_b, t) = 1, by
/// bisection on a bracket grown by doubling. Returns std::nullopt when a
/// rate is zero: the sum then stays above 1 for every finite t.
std::optional<double> sudden_death_time(double gamma_a, double gamma_b);

/// Explicit mixture of product states for the x-axis scenario at or after
/// the death time: six pure product terms weighted by exp(-a t) / 2,
/// exp(-a t) exp(-b t) / 2 and exp(-b t) / 2 (twice each), plus a
/// completely mixed remainder once the sum drops below 1. Throws
/// DomainError before the death time, or if the scenario does not use the
/// x axis with two positive rates.
SeparableDecomposition separable_mixture_at(const DecayScenario& s, double t);

}  // namespace qcontrol
