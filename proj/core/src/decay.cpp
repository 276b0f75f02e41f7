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

#include "qcontrol/decay.hpp"

#include <cmath>
#include <string>

#include "qcontrol/errors.hpp"
#include "qcontrol/pauli.hpp"

namespace qcontrol {

namespace {

constexpr int kMaxBracketDoublings = 2000;
constexpr int kMaxBisections = 400;
// A time counts as "at or past death" when the factor sum exceeds 1 by no
// more than this.
constexpr double kDeathSumTolerance = 1e-12;

void require_rate(double gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0) {
    throw DomainError("decay rate must be finite and nonnegative");
  }
}

void require_time(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError("time must be finite and nonnegative");
  }
}

// (1 + sign * P) / 2 for a Pauli index.
DensityMatrix pauli_eigenstate(int index, double sign) {
  return DensityMatrix(0.5 * (pauli(0) + sign * pauli(index)));
}

}  // namespace

void DecayScenario::validate() const {
  require_rate(gamma_a);
  require_rate(gamma_b);
  if (axis_b != RotationAxis::X && axis_b != RotationAxis::Z) {
    throw DomainError("decay scenario: axis for B must be z or x");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    require_time(times[i]);
    if (i > 0 && times[i] < times[i - 1]) {
      throw DomainError("decay scenario: times must be sorted");
    }
  }
}

double decay_angles(double gamma, double t) {
  require_rate(gamma);
  require_time(t);
  return std::acos(std::exp(-gamma * t));
}

double hamiltonian_coefficient(double gamma, double t) {
  require_rate(gamma);
  if (!(t > 0.0)) {
    throw SingularityError("interaction rate diverges at t <= 0");
  }
  if (!std::isfinite(t)) throw DomainError("time must be finite");
  if (gamma == 0.0) return 0.0;
  // 1 - exp(-2 gamma t) through expm1 keeps precision for small gamma t.
  return gamma * std::exp(-gamma * t) / std::sqrt(-std::expm1(-2.0 * gamma * t));
}

double death_condition_sum(double gamma_a, double gamma_b, double t) {
  const double a = std::exp(-gamma_a * t);
  const double b = std::exp(-gamma_b * t);
  return a + a * b + b;
}

double concurrence_decay(const DecayScenario& s, double t) {
  require_rate(s.gamma_a);
  require_rate(s.gamma_b);
  require_time(t);
  if (s.axis_b == RotationAxis::Z) {
    return std::exp(-(s.gamma_a + s.gamma_b) * t);
  }
  if (s.axis_b != RotationAxis::X) {
    throw DomainError("concurrence_decay: axis for B must be z or x");
  }
  return 0.5 * std::max(0.0, death_condition_sum(s.gamma_a, s.gamma_b, t) - 1.0);
}

DensityMatrix decay_state(const DecayScenario& s, double t) {
  return two_interaction_state(s.sign, decay_angles(s.gamma_a, t),
                               decay_angles(s.gamma_b, t), s.axis_b);
}

std::optional<double> sudden_death_time(double gamma_a, double gamma_b) {
  require_rate(gamma_a);
  require_rate(gamma_b);
  if (gamma_a == 0.0 || gamma_b == 0.0) return std::nullopt;

  const auto excess = [&](double t) {
    return death_condition_sum(gamma_a, gamma_b, t) - 1.0;
  };
  double lo = 0.0;
  double hi = 1.0 / (gamma_a + gamma_b);
  int doublings = 0;
  while (excess(hi) >= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > kMaxBracketDoublings || !std::isfinite(hi)) {
      throw ConvergenceError("sudden_death_time: could not bracket the root");
    }
  }
  // Bisect until the bracket can no longer shrink in double precision.
  for (int i = 0; i < kMaxBisections; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    (excess(mid) >= 0.0 ? lo : hi) = mid;
  }
  const double root = std::abs(excess(lo)) <= std::abs(excess(hi)) ? lo : hi;
  return root;
}

SeparableDecomposition separable_mixture_at(const DecayScenario& s, double t) {
  require_rate(s.gamma_a);
  require_rate(s.gamma_b);
  require_time(t);
  if (s.axis_b != RotationAxis::X) {
    throw DomainError("separable_mixture_at: only the x-axis scenario decays "
                      "to a separable state");
  }
  if (s.gamma_a <= 0.0 || s.gamma_b <= 0.0) {
    throw DomainError("separable_mixture_at: both rates must be positive");
  }
  const double a = std::exp(-s.gamma_a * t);
  const double b = std::exp(-s.gamma_b * t);
  const double sum = a + a * b + b;
  if (sum > 1.0 + kDeathSumTolerance) {
    throw DomainError("separable_mixture_at: t = " + std::to_string(t) +
                      " is before the death time; the state is entangled");
  }
  const double pm = s.sign == BellSign::Plus ? 1.0 : -1.0;

  SeparableDecomposition d;
  d.terms.reserve(7);
  d.terms.push_back({0.5 * a, pauli_eigenstate(1, 1.0), pauli_eigenstate(1, pm)});
  d.terms.push_back({0.5 * a, pauli_eigenstate(1, -1.0), pauli_eigenstate(1, -pm)});
  d.terms.push_back({0.5 * a * b, pauli_eigenstate(2, 1.0), pauli_eigenstate(2, pm)});
  d.terms.push_back({0.5 * a * b, pauli_eigenstate(2, -1.0), pauli_eigenstate(2, -pm)});
  d.terms.push_back({0.5 * b, pauli_eigenstate(3, 1.0), pauli_eigenstate(3, -1.0)});
  d.terms.push_back({0.5 * b, pauli_eigenstate(3, -1.0), pauli_eigenstate(3, 1.0)});
  const double remainder = 1.0 - sum;
  if (remainder > kDeathSumTolerance) {
    d.terms.push_back({remainder, DensityMatrix::maximally_mixed(1),
                       DensityMatrix::maximally_mixed(1)});
  }
  return d;
}

}  // namespace qcontrol
