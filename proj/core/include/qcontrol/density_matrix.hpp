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

#include "qcontrol/complex_matrix.hpp"
#include "qcontrol/pauli.hpp"

namespace qcontrol {

inline constexpr double kStateHermitianTolerance = 1e-12;
inline constexpr double kStateTraceTolerance = 1e-12;
/// Eigenvalues at or above -kPsdTolerance count as zero.
inline constexpr double kPsdTolerance = 1e-10;

/// Measured deviations of a candidate matrix from the state invariants.
struct StateDiagnostics {
  double hermiticity_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;

  bool valid() const noexcept {
    return hermiticity_error <= kStateHermitianTolerance &&
           trace_error <= kStateTraceTolerance &&
           min_eigenvalue >= -kPsdTolerance;
  }
};

StateDiagnostics diagnose_state(const ComplexMatrix& m);

/// A validated quantum state on 1 to 3 qubits: Hermitian, unit trace and
/// positive semidefinite (up to the tolerances above).
class DensityMatrix {
 public:
  /// Throws InvalidStateError if `m` fails validation and DimensionError
  /// if it is not 2x2, 4x4 or 8x8.
  explicit DensityMatrix(ComplexMatrix m);

  /// Returns std::nullopt instead of throwing on a failed validation.
  static std::optional<DensityMatrix> try_from(ComplexMatrix m);

  static DensityMatrix maximally_mixed(int n_qubits);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

  bool operator==(const DensityMatrix&) const = default;

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix m, int n_qubits, Unchecked);

  ComplexMatrix matrix_;
  int n_qubits_;
};

/// Number of qubits of a 2^n x 2^n matrix, n in [1, 4]; DimensionError
/// otherwise.
int qubit_count(const ComplexMatrix& m);

/// Traces out every qubit not in `keep`. The kept qubits stay in A, B, C
/// order. Throws DomainError if `keep` is empty, names a qubit the state
/// does not have, or keeps every qubit.
DensityMatrix partial_trace(const DensityMatrix& rho, QubitSet keep);

/// Transposes the indices of the qubits in `on`. The result is Hermitian
/// with the same trace but may have negative eigenvalues.
ComplexMatrix partial_transpose(const DensityMatrix& rho, QubitSet on);
ComplexMatrix partial_transpose(const ComplexMatrix& m, int n_qubits,
                                QubitSet on);

/// -sum p ln p over the spectrum (natural log).
double von_neumann_entropy(const DensityMatrix& rho);

/// Re tr(rho * observable).
double expectation(const DensityMatrix& rho, const ComplexMatrix& observable);

}  // namespace qcontrol
