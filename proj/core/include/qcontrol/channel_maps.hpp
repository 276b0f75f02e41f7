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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "qcontrol/complex_matrix.hpp"
#include "qcontrol/density_matrix.hpp"
#include "qcontrol/dynamics.hpp"
#include "qcontrol/pauli.hpp"

namespace qcontrol {

/// A two-qubit map that multiplies Pauli-expansion coefficients.
///
/// With rho = (1 + sum a_j S_j + sum b_k X_k + sum c_jk S_j X_k) / 4, the map
/// sends a_j -> factor_a[j-1] a_j, b_k -> factor_b[k-1] b_k and
/// c_jk -> factor_a[j-1] factor_b[k-1] c_jk. The identity coefficient is
/// never touched, so every such map preserves trace and Hermiticity.
struct PauliScalingMap {
  std::array<double, 3> factor_a{1.0, 1.0, 1.0};
  std::array<double, 3> factor_b{1.0, 1.0, 1.0};

  static PauliScalingMap identity() { return {}; }

  /// Multiplier of the (j, k) coefficient, j, k in 0..3 (0 = identity).
  double scale(int j, int k) const;

  bool operator==(const PauliScalingMap&) const = default;
};

/// Map left by an interaction with an uncorrelated control, with `factor`
/// in place of cos(phi). The two Pauli components orthogonal to the axis
/// are scaled, the one along it is kept: z -> (f, f, 1), x -> (1, f, f),
/// y -> (f, 1, f). Throws DomainError unless qubit is A or B and factor is
/// finite.
PauliScalingMap map_from_interaction(QubitLabel qubit, RotationAxis axis,
                                     double factor);

/// cos(phi_i) below this magnitude makes an interval map singular.
inline constexpr double kSingularIntervalTolerance = 1e-12;

/// Map carrying the dynamics from phi_i to phi_f: factor
/// cos(phi_f) / cos(phi_i). Throws SingularIntervalError when
/// |cos(phi_i)| <= kSingularIntervalTolerance.
PauliScalingMap interval_map(QubitLabel qubit, RotationAxis axis, double phi_i,
                             double phi_f);

/// Apply m1 first, then m2 (factors multiply componentwise).
PauliScalingMap compose(const PauliScalingMap& m1, const PauliScalingMap& m2);

/// The map extended linearly to an arbitrary 4x4 matrix.
ComplexMatrix apply_linear(const PauliScalingMap& m, const ComplexMatrix& x);

/// Output of a map that left the state space.
struct NotPositive {
  ComplexMatrix matrix;
  double min_eigenvalue = 0.0;
  PauliDecomposition coefficients;
};

/// Either a valid density matrix or a NotPositive diagnostic. A map that
/// is not completely positive only applies to part of the state space, so
/// a NotPositive outcome is a result, not an error.
class MapOutcome {
 public:
  explicit MapOutcome(DensityMatrix state) : value_(std::move(state)) {}
  explicit MapOutcome(NotPositive failure) : value_(std::move(failure)) {}

  bool positive() const noexcept {
    return std::holds_alternative<DensityMatrix>(value_);
  }
  /// Throws DomainError when the outcome is NotPositive.
  const DensityMatrix& state() const;
  /// Throws DomainError when the outcome is a valid state.
  const NotPositive& failure() const;
  /// The output matrix in either case.
  const ComplexMatrix& matrix() const;

 private:
  std::variant<DensityMatrix, NotPositive> value_;
};

/// decompose -> scale -> reconstruct, then validate.
MapOutcome apply_map(const PauliScalingMap& m, const DensityMatrix& rho);

/// Choi matrix C = sum_ij |i><j| (x) m(|i><j|) of a two-qubit map
/// (16 x 16, unnormalized: trace 4).
struct ChoiMatrix {
  ComplexMatrix matrix;
  PauliScalingMap source;

  double min_eigenvalue() const;
};

ChoiMatrix choi_matrix(const PauliScalingMap& m);

/// 4x4 Choi matrix (trace 2) of the one-qubit map scaling (X, Y, Z) by
/// `factors`.
ComplexMatrix single_qubit_choi(const std::array<double, 3>& factors);

/// Minimum eigenvalue of the one-qubit Choi matrix of the factors acting
/// on `qubit` (A or B). A scaling map is the tensor product of its two
/// one-qubit factors, so the two-qubit Choi spectrum is the pairwise
/// product of the two local spectra.
double local_choi_min_eigenvalue(const PauliScalingMap& m, QubitLabel qubit);

/// Threshold on the Choi spectrum for complete positivity.
inline constexpr double kCompletePositivityTolerance = 1e-10;

bool is_completely_positive(const PauliScalingMap& m);

/// A valid input that the map sends outside the state space.
struct PositivityWitness {
  std::string label;
  DensityMatrix state;
  NotPositive image;
};

/// Searches the four Bell states (rho_+, rho_-, then the two
/// parallel-spin ones) and then `random_trials` seeded random pure states
/// for an input mapped to NotPositive.
std::optional<PositivityWitness> find_positivity_witness(
    const PauliScalingMap& m, std::uint64_t seed, int random_trials = 256);

}  // namespace qcontrol
