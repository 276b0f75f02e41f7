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

#include "qcontrol/channel_maps.hpp"

#include <cmath>
#include <string>

#include "qcontrol/eigen.hpp"
#include "qcontrol/errors.hpp"
#include "qcontrol/random_states.hpp"

namespace qcontrol {

namespace {

std::array<double, 3> axis_factors(RotationAxis axis, double f) {
  switch (axis) {
    case RotationAxis::X:
      return {1.0, f, f};
    case RotationAxis::Y:
      return {f, 1.0, f};
    case RotationAxis::Z:
      break;
  }
  return {f, f, 1.0};
}

double factor_or_one(const std::array<double, 3>& factors, int index) {
  return index == 0 ? 1.0 : factors[static_cast<std::size_t>(index - 1)];
}

// Scales the complex Pauli coefficients tr(P_s x) of an n-qubit matrix by
// scale(indices of s) and resums.
template <typename ScaleFn>
ComplexMatrix scale_pauli_terms(const ComplexMatrix& x, int n_qubits,
                                ScaleFn scale) {
  const std::size_t dim = x.dim();
  const PauliDecomposition layout(n_qubits);
  ComplexMatrix out(dim);
  for (std::size_t flat = 0; flat < layout.size(); ++flat) {
    const std::vector<int> idx = layout.indices_of(flat);
    const double factor = scale(idx);
    if (factor == 0.0) continue;
    const ComplexMatrix p = pauli_string(n_qubits, idx);
    Complex tr{};
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) tr += x(r, c) * p(c, r);
    if (tr == Complex{}) continue;
    out += (factor * tr) * p;
  }
  out *= 1.0 / static_cast<double>(dim);
  return out;
}

template <typename MapFn>
ComplexMatrix choi_of(std::size_t in_dim, MapFn map) {
  ComplexMatrix choi(in_dim * in_dim);
  for (std::size_t i = 0; i < in_dim; ++i)
    for (std::size_t j = 0; j < in_dim; ++j) {
      ComplexMatrix unit(in_dim);
      unit(i, j) = 1.0;
      const ComplexMatrix image = map(unit);
      for (std::size_t r = 0; r < in_dim; ++r)
        for (std::size_t c = 0; c < in_dim; ++c)
          choi(i * in_dim + r, j * in_dim + c) = image(r, c);
    }
  return choi;
}

}  // namespace

double PauliScalingMap::scale(int j, int k) const {
  if (j < 0 || j > 3 || k < 0 || k > 3) {
    throw DomainError("PauliScalingMap::scale: indices must lie in 0..3");
  }
  return factor_or_one(factor_a, j) * factor_or_one(factor_b, k);
}

PauliScalingMap map_from_interaction(QubitLabel qubit, RotationAxis axis,
                                     double factor) {
  if (!std::isfinite(factor)) {
    throw DomainError("map_from_interaction: factor is not finite");
  }
  PauliScalingMap m;
  switch (qubit) {
    case QubitLabel::A:
      m.factor_a = axis_factors(axis, factor);
      break;
    case QubitLabel::B:
      m.factor_b = axis_factors(axis, factor);
      break;
    default:
      throw DomainError(
          "map_from_interaction: two-qubit maps act on qubit A or B only");
  }
  return m;
}

PauliScalingMap interval_map(QubitLabel qubit, RotationAxis axis, double phi_i,
                             double phi_f) {
  if (!std::isfinite(phi_i) || !std::isfinite(phi_f)) {
    throw DomainError("interval_map: angles must be finite");
  }
  const double start = std::cos(phi_i);
  if (std::abs(start) <= kSingularIntervalTolerance) {
    throw SingularIntervalError(
        "interval_map: cos(phi_i) is zero; the map is undefined there");
  }
  return map_from_interaction(qubit, axis, std::cos(phi_f) / start);
}

PauliScalingMap compose(const PauliScalingMap& m1, const PauliScalingMap& m2) {
  PauliScalingMap out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.factor_a[i] = m1.factor_a[i] * m2.factor_a[i];
    out.factor_b[i] = m1.factor_b[i] * m2.factor_b[i];
  }
  return out;
}

ComplexMatrix apply_linear(const PauliScalingMap& m, const ComplexMatrix& x) {
  if (x.dim() != 4) throw DimensionError("apply_linear expects a 4x4 matrix");
  return scale_pauli_terms(x, 2, [&](const std::vector<int>& idx) {
    return m.scale(idx[0], idx[1]);
  });
}

const DensityMatrix& MapOutcome::state() const {
  if (const auto* s = std::get_if<DensityMatrix>(&value_)) return *s;
  throw DomainError("map output is not a valid density matrix");
}

const NotPositive& MapOutcome::failure() const {
  if (const auto* f = std::get_if<NotPositive>(&value_)) return *f;
  throw DomainError("map output is a valid density matrix");
}

const ComplexMatrix& MapOutcome::matrix() const {
  return positive() ? state().matrix() : failure().matrix;
}

MapOutcome apply_map(const PauliScalingMap& m, const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) {
    throw DomainError("apply_map expects a two-qubit state");
  }
  PauliDecomposition d = decompose(rho);
  for (std::size_t flat = 0; flat < d.size(); ++flat) {
    const std::vector<int> idx = d.indices_of(flat);
    d.coeffs()[flat] *= m.scale(idx[0], idx[1]);
  }
  ComplexMatrix out = reconstruct(d);
  const StateDiagnostics diag = diagnose_state(out);
  if (diag.valid()) return MapOutcome(DensityMatrix(std::move(out)));
  return MapOutcome(NotPositive{std::move(out), diag.min_eigenvalue, std::move(d)});
}

double ChoiMatrix::min_eigenvalue() const {
  return qcontrol::min_eigenvalue(matrix);
}

ChoiMatrix choi_matrix(const PauliScalingMap& m) {
  return {choi_of(4, [&](const ComplexMatrix& unit) {
            return apply_linear(m, unit);
          }),
          m};
}

ComplexMatrix single_qubit_choi(const std::array<double, 3>& factors) {
  return choi_of(2, [&](const ComplexMatrix& unit) {
    return scale_pauli_terms(unit, 1, [&](const std::vector<int>& idx) {
      return factor_or_one(factors, idx[0]);
    });
  });
}

double local_choi_min_eigenvalue(const PauliScalingMap& m, QubitLabel qubit) {
  switch (qubit) {
    case QubitLabel::A:
      return min_eigenvalue(single_qubit_choi(m.factor_a));
    case QubitLabel::B:
      return min_eigenvalue(single_qubit_choi(m.factor_b));
    default:
      throw DomainError("local Choi matrix exists for qubit A or B only");
  }
}

bool is_completely_positive(const PauliScalingMap& m) {
  return choi_matrix(m).min_eigenvalue() >= -kCompletePositivityTolerance;
}

std::optional<PositivityWitness> find_positivity_witness(
    const PauliScalingMap& m, std::uint64_t seed, int random_trials) {
  const auto bell_pair = [](double xx, double yy, double zz) {
    ComplexMatrix rho = ComplexMatrix::identity(4);
    rho += xx * pauli_string(2, {1, 1});
    rho += yy * pauli_string(2, {2, 2});
    rho += zz * pauli_string(2, {3, 3});
    rho *= 0.25;
    return DensityMatrix(std::move(rho));
  };
  const std::pair<const char*, DensityMatrix> candidates[] = {
      {"rho_plus", bell_state(BellSign::Plus)},
      {"rho_minus", bell_state(BellSign::Minus)},
      {"phi_plus", bell_pair(1.0, -1.0, 1.0)},
      {"phi_minus", bell_pair(-1.0, 1.0, 1.0)},
  };
  for (const auto& [label, state] : candidates) {
    MapOutcome out = apply_map(m, state);
    if (!out.positive()) return PositivityWitness{label, state, out.failure()};
  }
  Rng rng(seed);
  for (int trial = 0; trial < random_trials; ++trial) {
    DensityMatrix state = random_pure_state(2, rng);
    MapOutcome out = apply_map(m, state);
    if (!out.positive()) {
      return PositivityWitness{"random_pure[" + std::to_string(trial) + "]",
                               std::move(state), out.failure()};
    }
  }
  return std::nullopt;
}

}  // namespace qcontrol
