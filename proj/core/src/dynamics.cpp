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

#include "qcontrol/dynamics.hpp"

#include <cmath>
#include <string>

#include "qcontrol/errors.hpp"

namespace qcontrol {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr int kControlledRegister = 3;

void require_finite(double angle) {
  if (!std::isfinite(angle)) throw DomainError("rotation angle is not finite");
}

ComplexMatrix control_projector(int outcome) {
  return outcome == 0 ? ComplexMatrix(2, {1.0, 0.0, 0.0, 0.0})
                      : ComplexMatrix(2, {0.0, 0.0, 0.0, 1.0});
}

// Operator product over the three qubits with one factor per position.
ComplexMatrix product_operator(const ComplexMatrix& a, const ComplexMatrix& b,
                               const ComplexMatrix& c) {
  return kron(kron(a, b), c);
}

ComplexMatrix place_two(const ComplexMatrix& op1, QubitLabel q1,
                        const ComplexMatrix& op2, QubitLabel q2) {
  ComplexMatrix factors[kControlledRegister] = {pauli(0), pauli(0), pauli(0)};
  factors[qubit_position(q1)] = op1;
  factors[qubit_position(q2)] = op2;
  return product_operator(factors[0], factors[1], factors[2]);
}

}  // namespace

int axis_index(RotationAxis axis) noexcept {
  switch (axis) {
    case RotationAxis::X:
      return 1;
    case RotationAxis::Y:
      return 2;
    case RotationAxis::Z:
      break;
  }
  return 3;
}

char axis_name(RotationAxis axis) noexcept {
  return static_cast<char>('x' + axis_index(axis) - 1);
}

DensityMatrix bell_state(BellSign sign) {
  const double s = sign == BellSign::Plus ? 1.0 : -1.0;
  ComplexMatrix m = ComplexMatrix::identity(4);
  m += s * pauli_string(2, {1, 1});
  m += s * pauli_string(2, {2, 2});
  m -= pauli_string(2, {3, 3});
  m *= 0.25;
  return DensityMatrix(std::move(m));
}

DensityMatrix attach_control(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) {
    throw DomainError("attach_control expects a two-qubit state");
  }
  return DensityMatrix(kron(rho.matrix(), 0.5 * pauli(0)));
}

ComplexMatrix single_qubit_rotation(RotationAxis axis, double angle) {
  require_finite(angle);
  ComplexMatrix d = std::cos(angle / 2.0) * pauli(0);
  d -= (kI * std::sin(angle / 2.0)) * pauli(axis_index(axis));
  return d;
}

ComplexMatrix embed(const ComplexMatrix& op, QubitLabel q, int n_qubits) {
  if (op.dim() != 2) throw DimensionError("embed expects a 2x2 operator");
  if (qubit_position(q) >= n_qubits) {
    throw DomainError(std::string("embed: qubit ") + qubit_name(q) +
                      " is outside the register");
  }
  ComplexMatrix out = qubit_position(q) == 0 ? op : pauli(0);
  for (int pos = 1; pos < n_qubits; ++pos)
    out = kron(out, pos == qubit_position(q) ? op : pauli(0));
  return out;
}

ComplexMatrix controlled_rotation_unitary(const InteractionSpec& spec) {
  if (spec.target == spec.control) {
    throw DomainError("controlled rotation: target and control coincide");
  }
  require_finite(spec.angle);
  const ComplexMatrix forward = single_qubit_rotation(spec.axis, spec.angle);
  const ComplexMatrix backward = single_qubit_rotation(spec.axis, -spec.angle);
  return place_two(forward, spec.target, control_projector(0), spec.control) +
         place_two(backward, spec.target, control_projector(1), spec.control);
}

ComplexMatrix interaction_hamiltonian(const InteractionSpec& spec) {
  if (spec.target == spec.control) {
    throw DomainError("interaction hamiltonian: target and control coincide");
  }
  return 0.5 * place_two(pauli(axis_index(spec.axis)), spec.target, pauli(3),
                         spec.control);
}

DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& u) {
  return DensityMatrix(conjugate_by(u, rho.matrix()));
}

DensityMatrix local_dephasing(const DensityMatrix& rho, QubitLabel target,
                              RotationAxis axis, double angle) {
  const int n = rho.n_qubits();
  const ComplexMatrix forward =
      embed(single_qubit_rotation(axis, angle), target, n);
  const ComplexMatrix backward =
      embed(single_qubit_rotation(axis, -angle), target, n);
  ComplexMatrix mixed = conjugate_by(forward, rho.matrix());
  mixed += conjugate_by(backward, rho.matrix());
  mixed *= 0.5;
  return DensityMatrix(std::move(mixed));
}

DensityMatrix reduced_dynamics(const DensityMatrix& rho,
                               const InteractionSpec& spec) {
  if (rho.n_qubits() != 2) {
    throw DomainError("reduced_dynamics expects a two-qubit state");
  }
  if (spec.target == spec.control) {
    throw DomainError("reduced_dynamics: target and control coincide");
  }
  if (spec.control != QubitLabel::C || spec.target == QubitLabel::C) {
    throw DomainError("reduced_dynamics: target must be A or B with control C");
  }
  return local_dephasing(rho, spec.target, spec.axis, spec.angle);
}

DensityMatrix two_interaction_state(BellSign sign, double phi_a, double phi_b,
                                    RotationAxis axis_b) {
  if (axis_b != RotationAxis::Z && axis_b != RotationAxis::X) {
    throw DomainError("two_interaction_state: axis for B must be z or x");
  }
  const DensityMatrix after_a = reduced_dynamics(
      bell_state(sign), {QubitLabel::A, QubitLabel::C, RotationAxis::Z, phi_a});
  return reduced_dynamics(after_a,
                          {QubitLabel::B, QubitLabel::C, axis_b, phi_b});
}

DensityMatrix full_correlated_state(BellSign sign, double phi) {
  const ComplexMatrix u = controlled_rotation_unitary(
      {QubitLabel::A, QubitLabel::C, RotationAxis::Z, phi});
  return evolve(attach_control(bell_state(sign)), u);
}

ComplexMatrix swap_unitary(QubitLabel q1, QubitLabel q2) {
  if (q1 == q2) throw DomainError("swap_unitary: qubits coincide");
  constexpr int n = kControlledRegister;
  const std::size_t b1 = std::size_t{1} << (n - 1 - qubit_position(q1));
  const std::size_t b2 = std::size_t{1} << (n - 1 - qubit_position(q2));
  ComplexMatrix u(std::size_t{1} << n);
  for (std::size_t in = 0; in < u.dim(); ++in) {
    std::size_t out = in & ~(b1 | b2);
    if (in & b1) out |= b2;
    if (in & b2) out |= b1;
    u(out, in) = 1.0;
  }
  return u;
}

}  // namespace qcontrol
