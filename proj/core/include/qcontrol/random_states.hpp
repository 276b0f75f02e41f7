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
#include <random>
#include <vector>

#include "qcontrol/complex_matrix.hpp"
#include "qcontrol/density_matrix.hpp"

namespace qcontrol {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20070521;

/// Ginibre construction: M with independent unit-normal complex entries,
/// rho = M M^dagger / tr(M M^dagger). Always a valid full-rank state.
DensityMatrix random_density_matrix(int n_qubits, Rng& rng);

/// Normalized vector with independent unit-normal complex entries.
std::vector<Complex> random_pure_vector(int n_qubits, Rng& rng);

DensityMatrix random_pure_state(int n_qubits, Rng& rng);

/// Haar-distributed unitary from Gram-Schmidt on a Ginibre matrix.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

}  // namespace qcontrol
