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

#include <cstdint>

#include "qcontrol/complex_matrix.hpp"
#include "qcontrol/density_matrix.hpp"
#include "qcontrol/pauli.hpp"

namespace qcontrol {

enum class BellSign : std::uint8_t { Plus, Minus };
enum class RotationAxis : std::uint8_t { X, Y, Z };

/// Pauli index (1, 2, 3) of a rotation axis.
int axis_index(RotationAxis axis) noexcept;
char axis_name(RotationAxis axis) noexcept;

/// A control-conditioned rotation of `target` by +angle when `control` is
/// in |0> and by -angle when it is in |1>. The control basis is the
/// computational basis, so |0><0| = (1 + Z_control) / 2.
struct InteractionSpec {
  QubitLabel target = QubitLabel::A;
  QubitLabel control = QubitLabel::C;
  RotationAxis axis = RotationAxis::Z;
  double angle = 0.0;  // radians
};

/// rho_+ = (1 + XX + YY - ZZ) / 4, rho_- = (1 - XX - YY - ZZ) / 4.
DensityMatrix bell_state(BellSign sign);

/// rho (x) 1/2 on a fresh, uncorrelated control qubit C.
DensityMatrix attach_control(const DensityMatrix& rho);

/// D = exp(-i angle/2 sigma_axis). Conjugating a state, D rho D^dagger,
/// turns the Pauli vector by +angle about the axis: for z,
/// X -> X cos(angle) + Y sin(angle).
ComplexMatrix single_qubit_rotation(RotationAxis axis, double angle);

/// `op` acting on qubit `q` of an n-qubit register, identity elsewhere.
ComplexMatrix embed(const ComplexMatrix& op, QubitLabel q, int n_qubits);

/// U = D(angle) (x) |0><0| + D(-angle) (x) |1><1| on three qubits. Throws
/// DomainError when target == control or the angle is not finite.
ComplexMatrix controlled_rotation_unitary(const InteractionSpec& spec);

/// H with U = exp(-i angle H): sigma_axis(target) (x) Z(control) / 2.
ComplexMatrix interaction_hamiltonian(const InteractionSpec& spec);

/// u rho u^dagger, re-validated.
DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& u);

/// Equal mixture of +angle and -angle rotations about `axis` on qubit
/// `target` of any 1- to 3-qubit state. This is what an uncorrelated,
/// maximally mixed control leaves behind once it is traced out.
DensityMatrix local_dephasing(const DensityMatrix& rho, QubitLabel target,
                              RotationAxis axis, double angle);

/// Two-qubit state after the interaction in `spec` with an uncorrelated
/// control, control traced out:
///   rho' = D(phi) rho D(phi)^dagger / 2 + D(-phi) rho D(-phi)^dagger / 2.
/// spec.target must be A or B and spec.control must be C.
DensityMatrix reduced_dynamics(const DensityMatrix& rho,
                               const InteractionSpec& spec);

/// Bell state after a z interaction on A (angle phi_a) and an independent
/// interaction on B about axis_b (angle phi_b). axis_b must be z or x.
DensityMatrix two_interaction_state(BellSign sign, double phi_a, double phi_b,
                                    RotationAxis axis_b);

/// Three-qubit state U (rho_+- (x) 1/2) U^dagger for the A-C interaction.
DensityMatrix full_correlated_state(BellSign sign, double phi);

/// Permutation unitary exchanging two of the three qubits.
ComplexMatrix swap_unitary(QubitLabel q1, QubitLabel q2);

}  // namespace qcontrol
