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
#include <span>
#include <string>
#include <vector>

#include "qcontrol/complex_matrix.hpp"
#include "qcontrol/density_matrix.hpp"

namespace qcontrol {

/// Wootters concurrence of a two-qubit state.
///
/// `sqrt_lambdas` are the square roots of the eigenvalues of
/// rho * (Y(x)Y) * conj(rho) * (Y(x)Y), descending, and
/// value = max(0, s1 - s2 - s3 - s4).
struct ConcurrenceResult {
  double value = 0.0;
  std::array<double, 4> sqrt_lambdas{};
};

/// Spectral weights of rho at or below this are treated as exact zeros when
/// building the concurrence; they are Jacobi round-off for rank-deficient
/// states, and their square roots would otherwise leak ~1e-8 into the
/// result.
inline constexpr double kConcurrenceRankFloor = 1e-14;

/// Product-matrix eigenvalues in (-kLambdaClip, 0) are clipped to zero.
inline constexpr double kLambdaClip = 1e-10;

/// Minimum partial-transpose eigenvalue accepted as nonnegative.
inline constexpr double kPptTolerance = 1e-10;

/// Entrywise tolerance of verify_decomposition.
inline constexpr double kDecompositionTolerance = 1e-10;

/// Computes sqrt(lambda_i) as the singular values of
/// tau_ij = <v_i| (Y(x)Y) |conj(v_j)>, v_i = sqrt(p_i) e_i over the
/// eigenpairs of rho. Throws DomainError for a non-two-qubit state.
ConcurrenceResult concurrence(const DensityMatrix& rho);

/// rho * (Y(x)Y) * conj(rho) * (Y(x)Y). Not Hermitian in general.
ComplexMatrix spin_flip_product(const DensityMatrix& rho);

/// Eigenvalues of spin_flip_product, descending, via the similar Hermitian
/// matrix sqrt(rho) rho~ sqrt(rho); values in (-kLambdaClip, 0) clipped.
std::array<double, 4> concurrence_lambdas(const DensityMatrix& rho);

/// |cos phi|.
double concurrence_one_interaction(double phi);

/// max(0, |cos a| + |cos a cos b| + |cos b| - 1) / 2.
double concurrence_two_interactions(double phi_a, double phi_b);

/// Smallest eigenvalue of the partial transpose on `on`.
double min_partial_transpose_eigenvalue(const DensityMatrix& rho, QubitSet on);

/// True iff the partial transpose on `on` is PSD within kPptTolerance. For
/// a 2x2 cut this decides separability; for larger cuts it is only
/// consistent with separability.
bool ppt_holds(const DensityMatrix& rho, QubitSet on);

/// Peres-Horodecki test of a two-qubit state (transpose on B).
bool ppt_separable(const DensityMatrix& rho);

struct ProductTerm {
  double weight = 0.0;
  DensityMatrix state_a;
  DensityMatrix state_b;
};

/// sum_i weight_i * state_a_i (x) state_b_i.
struct SeparableDecomposition {
  std::vector<ProductTerm> terms;

  double total_weight() const;
  ComplexMatrix assemble() const;
};

/// True iff every weight is nonnegative, every factor is a one-qubit
/// state, and the assembled mixture matches rho entrywise within
/// kDecompositionTolerance.
bool verify_decomposition(const DensityMatrix& rho,
                          const SeparableDecomposition& d);

/// <S_j X_j P_j - S_j X_k P_k - S_k X_j P_k - S_k X_k P_j> with Pauli
/// indices j != k in 1..3 on qubits A, B, C.
double mermin_value(const DensityMatrix& rho, int j, int k);

/// Largest |mermin_value| over the six ordered (j, k) pairs.
double mermin_max_abs(const DensityMatrix& rho);

/// |GHZ> = (|000> + |111>) / sqrt(2).
ComplexMatrix ghz_projector();

/// |W> = (|100> + |010> + |001>) / sqrt(3).
ComplexMatrix w_projector();

double ghz_fidelity(const DensityMatrix& rho);
double w_fidelity(const DensityMatrix& rho);

/// Mean value of one three-qubit Pauli string with indices in 1..3.
struct Correlator {
  std::array<int, 3> indices{};
  double value = 0.0;

  /// "XYZ" style label, qubit A first.
  std::string label() const;
};

/// All 27 strings, evaluated by brute force, in lexicographic order.
std::vector<Correlator> three_point_correlators(const DensityMatrix& rho);

/// Entries with |value| > tolerance.
std::vector<Correlator> nonzero_correlators(std::span<const Correlator> table,
                                            double tolerance = 1e-10);

}  // namespace qcontrol
