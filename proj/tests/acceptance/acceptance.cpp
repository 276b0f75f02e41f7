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

// Acceptance run: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qcontrol/qcontrol.hpp"

using namespace qcontrol;
using std::numbers::pi;

namespace {

struct Verdict {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // <= 0 means no runtime bound
  std::function<Verdict()> run;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
  return out;
}

DensityMatrix one_interaction(BellSign s, double phi) {
  return reduced_dynamics(bell_state(s), {QubitLabel::A, QubitLabel::C, RotationAxis::Z, phi});
}

DensityMatrix basis_qubit(int bit) {
  ComplexMatrix m(2);
  m(bit, bit) = 1.0;
  return DensityMatrix(m);
}

Verdict concurrence_curve() {
  double worst = 0.0;
  for (BellSign s : {BellSign::Plus, BellSign::Minus}) {
    for (double phi : grid(0.0, pi, 181)) {
      worst = std::max(worst, std::abs(concurrence(one_interaction(s, phi)).value -
                                       std::abs(std::cos(phi))));
    }
  }
  return {worst <= 1e-9, fmt("max |C - |cos phi|| = %.3g", worst)};
}

Verdict eigenvalue_law() {
  double worst = 0.0;
  for (BellSign s : {BellSign::Plus, BellSign::Minus}) {
    for (double phi : grid(0.0, pi, 181)) {
      const double c = std::cos(phi);
      std::vector<double> expected{0.5 * (1 + c), 0.5 * (1 - c), 0.0, 0.0};
      std::sort(expected.rbegin(), expected.rend());
      const std::vector<double> got = hermitian_eigenvalues(one_interaction(s, phi).matrix());
      for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(got[k] - expected[k]));
    }
  }
  return {worst <= 1e-9, fmt("max eigenvalue error = %.3g", worst)};
}

Verdict separability_round_trip() {
  SeparableDecomposition two;
  two.terms.push_back({0.5, basis_qubit(1), basis_qubit(0)});
  two.terms.push_back({0.5, basis_qubit(0), basis_qubit(1)});
  bool ok = true;
  double back = 0.0;
  for (BellSign s : {BellSign::Plus, BellSign::Minus}) {
    const DensityMatrix mid = one_interaction(s, pi / 2);
    ok = ok && ppt_separable(mid) && verify_decomposition(mid, two);
    const BellSign other = s == BellSign::Plus ? BellSign::Minus : BellSign::Plus;
    back = std::max(back, max_abs_diff(one_interaction(s, pi).matrix(),
                                       bell_state(other).matrix()));
  }
  ok = ok && back <= 1e-12;
  return {ok, fmt("separable at pi/2 with two product terms; |rho(pi) - rho_-+| = %.3g", back)};
}

Verdict swap_comparison() {
  const DensityMatrix start = attach_control(bell_state(BellSign::Plus));
  const ComplexMatrix w = swap_unitary(QubitLabel::A, QubitLabel::C);
  const DensityMatrix once = evolve(start, w);
  const double c_ab = concurrence(partial_trace(once, {QubitLabel::A, QubitLabel::B})).value;
  const double c_bc = concurrence(partial_trace(once, {QubitLabel::B, QubitLabel::C})).value;
  const double restored = max_abs_diff(evolve(once, w).matrix(), start.matrix());
  const bool ok = std::abs(c_ab) <= 1e-10 && std::abs(c_bc - 1.0) <= 1e-10 && restored <= 1e-12;
  return {ok, "C(AB) = " + fmt("%.3g", c_ab) + ", C(BC) = " + fmt("%.17g", c_bc) +
                  ", restore error " + fmt("%.3g", restored)};
}

Verdict control_isolation() {
  double worst = 0.0;
  const ComplexMatrix i2 = DensityMatrix::maximally_mixed(1).matrix();
  const ComplexMatrix i4 = DensityMatrix::maximally_mixed(2).matrix();
  for (BellSign s : {BellSign::Plus, BellSign::Minus}) {
    for (double phi : grid(0.0, 2 * pi, 25)) {
      const DensityMatrix full = full_correlated_state(s, phi);
      worst = std::max(worst, max_abs_diff(partial_trace(full, {QubitLabel::A, QubitLabel::C}).matrix(), i4));
      worst = std::max(worst, max_abs_diff(partial_trace(full, {QubitLabel::B, QubitLabel::C}).matrix(), i4));
      for (QubitLabel q : {QubitLabel::A, QubitLabel::B, QubitLabel::C}) {
        worst = std::max(worst, max_abs_diff(partial_trace(full, {q}).matrix(), i2));
      }
    }
  }
  return {worst <= 1e-12, fmt("max deviation from maximally mixed = %.3g", worst)};
}

Verdict witness_suite() {
  double mermin = 0.0, ghz = 0.0, w = 0.0, corr = 0.0, other = 0.0;
  for (BellSign s : {BellSign::Plus, BellSign::Minus}) {
    const double sv = s == BellSign::Plus ? 1.0 : -1.0;
    for (double phi : grid(0.0, 2 * pi, 25)) {
      const DensityMatrix full = full_correlated_state(s, phi);
      mermin = std::max(mermin, mermin_max_abs(full));
      ghz = std::max(ghz, std::abs(ghz_fidelity(full)));
      w = std::max(w, std::abs(w_fidelity(full) - (1 + sv * std::cos(phi)) / 6));
      // Every Pauli string with a non-identity factor on C.
      const PauliDecomposition d = decompose(full);
      for (std::size_t flat = 0; flat < d.size(); ++flat) {
        const std::vector<int> idx = d.indices_of(flat);
        if (idx[2] == 0) continue;
        const double v = d.coeffs()[flat];
        if (idx == std::vector<int>{1, 2, 3}) {
          corr = std::max(corr, std::abs(v + sv * std::sin(phi)));
        } else if (idx == std::vector<int>{2, 1, 3}) {
          corr = std::max(corr, std::abs(v - sv * std::sin(phi)));
        } else {
          other = std::max(other, std::abs(v));
        }
      }
    }
  }
  const bool ok = mermin <= 1e-10 && ghz <= 1e-10 && w <= 1e-10 && corr <= 1e-10 && other <= 1e-10;
  return {ok, "mermin " + fmt("%.2g", mermin) + ", ghz " + fmt("%.2g", ghz) + ", W " +
                  fmt("%.2g", w) + ", XYZ/YXZ " + fmt("%.2g", corr) + ", other C strings " +
                  fmt("%.2g", other)};
}

Verdict two_interaction_concurrence() {
  double worst = 0.0, worst_oracle = 0.0;
  for (double pa : grid(0.0, pi, 20)) {
    for (double pb : grid(0.0, pi, 20)) {
      for (BellSign s : {BellSign::Plus, BellSign::Minus}) {
        const DensityMatrix rho = two_interaction_state(s, pa, pb, RotationAxis::X);
        const double c = concurrence(rho).value;
        worst = std::max(worst, std::abs(c - concurrence_two_interactions(pa, pb)));
        worst_oracle = std::max(worst_oracle, std::abs(c - oracle::wootters(oracle::to_eigen(rho.matrix()))));
      }
    }
  }
  return {worst <= 1e-9, fmt("max |C - closed form| = %.3g", worst) +
                             fmt(" (independent sqrt route differs by <= %.2g)", worst_oracle)};
}

Verdict ncp_classification() {
  bool ok = true;
  double choi_err = 0.0;
  int witnesses = 0, ncp_maps = 0;
  for (double phi_i : {0.3, 0.7, 1.0, pi / 3, 1.3, 1.5}) {
    for (auto [q, ax] : {std::pair{QubitLabel::A, RotationAxis::Z},
                         std::pair{QubitLabel::B, RotationAxis::X}}) {
      const PauliScalingMap m = interval_map(q, ax, phi_i, 0.0);
      const double factor = 1.0 / std::cos(phi_i);
      const double oracle_min =
          oracle::eigenvalues_desc(ax == RotationAxis::Z ? oracle::single_qubit_choi(factor, factor, 1)
                                                         : oracle::single_qubit_choi(1, factor, factor))
              .back();
      const double got = local_choi_min_eigenvalue(m, q);
      choi_err = std::max({choi_err, std::abs(got - (1 - factor)), std::abs(oracle_min - (1 - factor))});
      ok = ok && got < 0.0 && !is_completely_positive(m);
      ++ncp_maps;
      if (auto w = find_positivity_witness(m, kDefaultSeed)) {
        ++witnesses;
        ok = ok && !apply_map(m, w->state).positive();
      }
    }
  }
  ok = ok && witnesses == ncp_maps && choi_err <= 1e-12;

  Rng rng(kDefaultSeed);
  int cp_maps = 0, invalid_images = 0;
  for (double f : grid(0.0, 1.0, 11)) {
    for (auto [q, ax] : {std::pair{QubitLabel::A, RotationAxis::Z},
                         std::pair{QubitLabel::B, RotationAxis::X}}) {
      const PauliScalingMap m = map_from_interaction(q, ax, f);
      ++cp_maps;
      ok = ok && is_completely_positive(m);
      for (int i = 0; i < 1000; ++i) {
        if (!apply_map(m, random_density_matrix(2, rng)).positive()) ++invalid_images;
      }
    }
  }
  ok = ok && invalid_images == 0;
  return {ok, std::to_string(ncp_maps) + " NCP maps with witnesses " + std::to_string(witnesses) +
                  fmt(", Choi error %.2g; ", choi_err) + std::to_string(cp_maps) +
                  " CP maps, invalid images " + std::to_string(invalid_images) + "/" +
                  std::to_string(cp_maps * 1000)};
}

Verdict entanglement_increase() {
  const DensityMatrix image = one_interaction(BellSign::Plus, pi / 3);
  const MapOutcome out = apply_map(interval_map(QubitLabel::A, RotationAxis::Z, pi / 3, 0.0), image);
  if (!out.positive()) return {false, "mapped image is not a state"};
  const double before = concurrence(image).value;
  const double after = concurrence(out.state()).value;
  const double diff = max_abs_diff(out.state().matrix(), bell_state(BellSign::Plus).matrix());
  const bool ok = std::abs(before - 0.5) <= 1e-10 && std::abs(after - 1.0) <= 1e-10 && diff <= 1e-12;
  return {ok, fmt("concurrence %.12f", before) + fmt(" -> %.12f", after) + fmt(", |out - rho_+| = %.2g", diff)};
}

Verdict sudden_death() {
  const auto ts = sudden_death_time(1.0, 1.0);
  if (!ts) return {false, "no death time found"};
  const double expected = oracle::equal_rate_death_time(1.0);
  bool ok = std::abs(*ts - expected) <= 1e-9;
  const DecayScenario s{1.0, 1.0, RotationAxis::X, BellSign::Plus, {}};
  for (double t : grid(0.0, 3.0, 301)) {
    const double c = concurrence_decay(s, t);
    const double numeric = concurrence(decay_state(s, t)).value;
    if (t >= *ts) {
      ok = ok && c == 0.0 && numeric <= 1e-9;
    } else {
      ok = ok && c > 0.0;
    }
  }
  const SeparableDecomposition at = separable_mixture_at(s, *ts);
  ok = ok && at.terms.size() == 6 && verify_decomposition(decay_state(s, *ts), at);
  for (double t : {1.0, 1.5, 3.0}) {
    const SeparableDecomposition later = separable_mixture_at(s, t);
    ok = ok && later.terms.size() == 7 && verify_decomposition(decay_state(s, t), later);
  }
  return {ok, fmt("t* = %.15f", *ts) + fmt(", ln(1+sqrt 2) = %.15f", expected)};
}

Verdict map_dynamics_equivalence() {
  Rng rng(kDefaultSeed + 1);
  double worst = 0.0;
  const std::vector<double> angles = grid(0.0, 2 * pi, 10);
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = random_density_matrix(2, rng);
    for (double phi : angles) {
      const InteractionSpec spec{i % 2 == 0 ? QubitLabel::A : QubitLabel::B, QubitLabel::C,
                                 i % 2 == 0 ? RotationAxis::Z : RotationAxis::X, phi};
      const MapOutcome out = apply_map(map_from_interaction(spec.target, spec.axis, std::cos(phi)), rho);
      worst = std::max(worst, max_abs_diff(out.matrix(), reduced_dynamics(rho, spec).matrix()));
    }
  }
  return {worst <= 1e-12, fmt("max |map - dynamics| = %.3g over 10000 cases", worst)};
}

Verdict invariant_suite() {
  const SuiteOptions options;
  const auto first = run_invariant_suite(options);
  const auto second = run_invariant_suite(options);
  bool ok = first.size() == second.size();
  int passed = 0;
  std::string first_failure;
  for (std::size_t i = 0; ok && i < first.size(); ++i) {
    ok = first[i].passed == second[i].passed && first[i].cases == second[i].cases &&
         first[i].counterexample == second[i].counterexample;
    if (first[i].passed) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = first[i].module + "/" + first[i].name;
    }
  }
  ok = ok && passed == static_cast<int>(first.size());
  return {ok, std::to_string(passed) + "/" + std::to_string(first.size()) +
                  " invariants pass, repeat run identical" +
                  (first_failure.empty() ? "" : "; first failure " + first_failure)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "concurrence curve", 1.0, concurrence_curve},
      {2, "eigenvalue law", 0.0, eigenvalue_law},
      {3, "separability round trip", 0.0, separability_round_trip},
      {4, "swap comparison", 0.0, swap_comparison},
      {5, "control isolation", 0.0, control_isolation},
      {6, "witness suite", 0.0, witness_suite},
      {7, "two-interaction concurrence", 5.0, two_interaction_concurrence},
      {8, "NCP classification", 0.0, ncp_classification},
      {9, "entanglement increase by an NCP map", 0.0, entanglement_increase},
      {10, "sudden death", 0.0, sudden_death},
      {11, "map/dynamics equivalence", 0.0, map_dynamics_equivalence},
      {12, "full invariant suite", 60.0, invariant_suite},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0.0 && secs >= c.time_limit_s) {
      v.passed = false;
      v.detail += fmt("; runtime over %.0f s limit", c.time_limit_s);
    }
    if (!v.passed) ++failures;
    std::printf("%s  criterion %2d  %-38s %s [%.3f s]\n", v.passed ? "PASS" : "FAIL", c.id,
                c.title, v.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
