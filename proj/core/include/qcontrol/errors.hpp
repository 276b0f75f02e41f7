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

#include <stdexcept>
#include <string>

namespace qcontrol {

/// An argument lies outside the mathematical domain of an operation
/// (bad Pauli index, unknown subsystem, j == k in a witness, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A matrix has an unsupported or mismatched dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix failed DensityMatrix validation (Hermiticity, trace or PSD).
class InvalidStateError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An interval map with cos(phi_i) == 0 has no finite scaling factor.
class SingularIntervalError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The interaction-strength coefficient diverges at t <= 0.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Iterative numerics (Jacobi sweeps, bracket growth) did not converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcontrol
