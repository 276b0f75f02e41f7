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

#include <vector>

#include "qcontrol/complex_matrix.hpp"

namespace qcontrol {

/// Spectrum of a Hermitian matrix: eigenvalues in descending order and the
/// matching orthonormal eigenvectors as the columns of `vectors`.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Inputs may deviate from Hermitian by at most this much (entrywise).
inline constexpr double kHermitianInputTolerance = 1e-10;

/// Cyclic complex Jacobi iteration stops once the off-diagonal Frobenius
/// norm is at most this times max(1, ||m||_F).
inline constexpr double kJacobiOffDiagonalTolerance = 1e-13;

/// Full eigendecomposition by cyclic complex Jacobi rotations.
///
/// Throws DomainError when `m` is not Hermitian within
/// kHermitianInputTolerance and ConvergenceError if the sweep limit is hit.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Smallest eigenvalue.
double min_eigenvalue(const ComplexMatrix& m);

}  // namespace qcontrol
