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

#include "qcontrol/invariants.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qcontrol/channel_maps.hpp"
#include "qcontrol/decay.hpp"
#include "qcontrol/density_matrix.hpp"
#include "qcontrol/dynamics.hpp"
#include "qcontrol/eigen.hpp"
#include "qcontrol/entanglement.hpp"
#include "qcontrol/errors.hpp"
#include "qcontrol/pauli.hpp"

namespace qcontrol {
namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

std::string matrix_text(const ComplexMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    out += r == 0 ? "[" : ",[";
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c != 0) out += ',';
      out += '(' + num(m(r, c).real()) + ',' + num(m(r, c).imag()) + ')';
    }
    out += ']';
  }
  return out + ']';
}

std::string state_text(const DensityMatrix& rho) {
  return "rho=" + matrix_text(rho.matrix());
}

std::string map_text(const PauliScalingMap& m) {
  return "map=A(" + num(m.factor_a[0]) + ',' + num(m.factor_a[1]) + ',' +
         num(m.factor_a[2]) + ")B(" + num(m.factor_b[0]) + ',' +
         num(m.factor_b[1]) + ',' + num(m.factor_b[2]) + ')';
}

std::string spec_text(const InteractionSpec& s) {
  return std::string("target=") + qubit_name(s.target) +
         " axis=" + axis_name(s.axis) + " phi=" + num(s.angle);
}

const char* sign_text(BellSign s) { return s == BellSign::Plus ? "+" : "-"; }

// Accumulates the cases of a single invariant and keeps the first failure.
class Check {
 public:
  Check(std::string module, std::string name, double scale)
      : scale_(scale) {
    out_.module = std::move(module);
    out_.name = std::move(name);
  }

  bool failed() const { return !out_.passed; }

  template <class Describe>
  void within(double error, double tolerance, Describe&& describe) {
    ++out_.cases;
    if (out_.passed && !(error <= tolerance * scale_)) {
      out_.passed = false;
      out_.counterexample = describe() + " error=" + num(error) +
                            " tolerance=" + num(tolerance * scale_);
    }
  }

  template <class Describe>
  void holds(bool condition, Describe&& describe) {
    ++out_.cases;
    if (out_.passed && !condition) {
      out_.passed = false;
      out_.counterexample = describe();
    }
  }

  double tol(double t) const { return t * scale_; }

  InvariantOutcome finish() { return std::move(out_); }

 private:
  double scale_;
  InvariantOutcome out_;
};

// Runs body and converts an escaping library exception into a failure.
template <class Body>
InvariantOutcome run_check(std::string module, std::string name,
                           double scale, Body&& body) {
  Check check(std::move(module), std::move(name), scale);
  try {
    body(check);
  } catch (const std::exception& e) {
    check.holds(false, [&] { return std::string("exception: ") + e.what(); });
  }
  return check.finish();
}

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  }
  return out;
}

ComplexMatrix hamiltonian_propagator(const InteractionSpec& spec) {
  InteractionSpec unit = spec;
  unit.angle = 1.0;
  EigenSystem es = hermitian_eigensystem(interaction_hamiltonian(unit));
  const std::size_t d = es.values.size();
  ComplexMatrix out(d);
  for (std::size_t k = 0; k < d; ++k) {
    Complex phase = std::polar(1.0, -spec.angle * es.values[k]);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        out(r, c) += es.vectors(r, k) * phase * std::conj(es.vectors(c, k));
      }
    }
  }
  return out;
}

ComplexMatrix local_unitary_pair(Rng& rng) {
  return kron(random_unitary(2, rng), random_unitary(2, rng));
}

const std::vector<InteractionSpec>& reduction_specs() {
  static const std::vector<InteractionSpec> specs = {
      {QubitLabel::A, QubitLabel::C, RotationAxis::Z, 0.0},
      {QubitLabel::B, QubitLabel::C, RotationAxis::X, 0.0},
      {QubitLabel::B, QubitLabel::C, RotationAxis::Z, 0.0},
      {QubitLabel::A, QubitLabel::C, RotationAxis::Y, 0.0},
  };
  return specs;
}

// ---------------------------------------------------------------- pauli_core

void pauli_core_checks(const SuiteOptions& o, Rng& rng,
                       std::vector<InvariantOutcome>& out) {
  const double s = o.tolerance_scale;
  const int per_n = std::max(1, o.random_states / 3);

  out.push_back(run_check("pauli_core", "decompose_reconstruct_roundtrip", s,
                          [&](Check& c) {
    for (int n = 1; n <= 3; ++n) {
      for (int i = 0; i < per_n; ++i) {
        DensityMatrix rho = random_density_matrix(n, rng);
        double err = max_abs_diff(reconstruct(decompose(rho)), rho.matrix());
        c.within(err, 1e-12, [&] { return state_text(rho); });
      }
    }
  }));

  out.push_back(run_check("pauli_core", "pauli_coefficients_bounded", s,
                          [&](Check& c) {
    for (int n = 1; n <= 3; ++n) {
      for (int i = 0; i < per_n; ++i) {
        DensityMatrix rho = random_density_matrix(n, rng);
        PauliDecomposition d = decompose(rho);
        double worst = 0.0;
        for (double v : d.coeffs()) worst = std::max(worst, std::abs(v));
        c.within(std::max(0.0, worst - 1.0), 1e-12,
                 [&] { return state_text(rho); });
      }
    }
  }));

  out.push_back(run_check("pauli_core", "partial_trace_yields_state", s,
                          [&](Check& c) {
    const QubitSet keeps[] = {
        {QubitLabel::A},  {QubitLabel::B},  {QubitLabel::C},
        {QubitLabel::A, QubitLabel::B}, {QubitLabel::A, QubitLabel::C},
        {QubitLabel::B, QubitLabel::C}};
    for (int i = 0; i < per_n; ++i) {
      DensityMatrix rho = random_density_matrix(3, rng);
      for (QubitSet keep : keeps) {
        // partial_trace validates its output; inspect the raw numbers too.
        DensityMatrix red = partial_trace(rho, keep);
        StateDiagnostics diag = diagnose_state(red.matrix());
        double err = std::max({std::abs(diag.trace_error),
                               diag.hermiticity_error,
                               std::max(0.0, -diag.min_eigenvalue) * 1e-2});
        c.within(err, 1e-12, [&] {
          return state_text(rho) + " keep_mask=" + std::to_string(keep.mask());
        });
      }
    }
  }));

  out.push_back(run_check("pauli_core", "spectrum_sum_and_unitary_invariance",
                          s, [&](Check& c) {
    for (int i = 0; i < per_n; ++i) {
      const int n = 1 + i % 3;
      DensityMatrix rho = random_density_matrix(n, rng);
      ComplexMatrix u = random_unitary(rho.dim(), rng);
      std::vector<double> ev = hermitian_eigenvalues(rho.matrix());
      std::vector<double> ev_u =
          hermitian_eigenvalues(conjugate_by(u, rho.matrix()));
      double sum = 0.0;
      double drift = 0.0;
      for (std::size_t k = 0; k < ev.size(); ++k) {
        sum += ev[k];
        drift = std::max(drift, std::abs(ev[k] - ev_u[k]));
      }
      double err = std::max(std::abs(sum - rho.matrix().trace().real()), drift);
      c.within(err, 1e-9, [&] {
        return state_text(rho) + " u=" + matrix_text(u);
      });
    }
  }));

  out.push_back(run_check("pauli_core", "partial_transpose_involution", s,
                          [&](Check& c) {
    for (int i = 0; i < per_n; ++i) {
      DensityMatrix rho = random_density_matrix(3, rng);
      for (std::uint8_t mask = 1; mask < 8; ++mask) {
        const QubitSet on = QubitSet::from_mask(mask);
        ComplexMatrix twice =
            partial_transpose(partial_transpose(rho, on), 3, on);
        c.holds(twice == rho.matrix(), [&] {
          return state_text(rho) + " mask=" + std::to_string(mask);
        });
      }
    }
  }));
}

// ------------------------------------------------------------------ dynamics

void dynamics_checks(const SuiteOptions& o, Rng& rng,
                     std::vector<InvariantOutcome>& out) {
  const double s = o.tolerance_scale;
  const std::vector<double> phis = grid(0.0, 2.0 * kPi, 25);
  const int sample = std::max(1, o.random_states / 5);

  out.push_back(run_check("dynamics", "unitaries_are_unitary", s,
                          [&](Check& c) {
    const auto id8 = ComplexMatrix::identity(8);
    for (double phi : phis) {
      for (QubitLabel t : {QubitLabel::A, QubitLabel::B}) {
        for (RotationAxis ax :
             {RotationAxis::X, RotationAxis::Y, RotationAxis::Z}) {
          InteractionSpec spec{t, QubitLabel::C, ax, phi};
          ComplexMatrix u = controlled_rotation_unitary(spec);
          c.within(max_abs_diff(u * u.adjoint(), id8), 1e-12,
                   [&] { return spec_text(spec); });
        }
      }
    }
    const std::pair<QubitLabel, QubitLabel> pairs[] = {
        {QubitLabel::A, QubitLabel::B},
        {QubitLabel::A, QubitLabel::C},
        {QubitLabel::B, QubitLabel::C}};
    for (auto [p, q] : pairs) {
      ComplexMatrix w = swap_unitary(p, q);
      c.within(max_abs_diff(w * w.adjoint(), id8), 1e-12, [&] {
        return std::string("swap ") + qubit_name(p) + qubit_name(q);
      });
    }
  }));

  out.push_back(run_check("dynamics", "unitary_matches_hamiltonian", s,
                          [&](Check& c) {
    for (double phi : phis) {
      for (const InteractionSpec& base : reduction_specs()) {
        InteractionSpec spec = base;
        spec.angle = phi;
        double err = max_abs_diff(controlled_rotation_unitary(spec),
                                  hamiltonian_propagator(spec));
        c.within(err, 1e-10, [&] { return spec_text(spec); });
      }
    }
  }));

  out.push_back(run_check("dynamics", "reduction_consistency", s,
                          [&](Check& c) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < sample; ++i) {
      DensityMatrix rho = random_density_matrix(2, rng);
      InteractionSpec spec = reduction_specs()[i % reduction_specs().size()];
      spec.angle = angle(rng);
      DensityMatrix full =
          evolve(attach_control(rho), controlled_rotation_unitary(spec));
      DensityMatrix traced =
          partial_trace(full, {QubitLabel::A, QubitLabel::B});
      double err =
          max_abs_diff(reduced_dynamics(rho, spec).matrix(), traced.matrix());
      c.within(err, 1e-12,
               [&] { return state_text(rho) + ' ' + spec_text(spec); });
    }
  }));

  out.push_back(run_check("dynamics", "control_isolation", s, [&](Check& c) {
    const auto mixed1 = DensityMatrix::maximally_mixed(1);
    const auto mixed2 = DensityMatrix::maximally_mixed(2);
    for (BellSign sign : {BellSign::Plus, BellSign::Minus}) {
      for (double phi : phis) {
        DensityMatrix rho = full_correlated_state(sign, phi);
        double err = 0.0;
        for (QubitSet pair : {QubitSet{QubitLabel::A, QubitLabel::C},
                              QubitSet{QubitLabel::B, QubitLabel::C}}) {
          err = std::max(err, max_abs_diff(partial_trace(rho, pair).matrix(),
                                           mixed2.matrix()));
        }
        for (QubitLabel q : {QubitLabel::A, QubitLabel::B, QubitLabel::C}) {
          err = std::max(err, max_abs_diff(partial_trace(rho, {q}).matrix(),
                                           mixed1.matrix()));
        }
        c.within(err, 1e-12, [&] {
          return std::string("sign=") + sign_text(sign) + " phi=" + num(phi);
        });
      }
    }
  }));

  out.push_back(run_check("dynamics", "control_entropy_ln2", s,
                          [&](Check& c) {
    for (BellSign sign : {BellSign::Plus, BellSign::Minus}) {
      for (double phi : phis) {
        DensityMatrix ctrl =
            partial_trace(full_correlated_state(sign, phi), {QubitLabel::C});
        double err = std::abs(von_neumann_entropy(ctrl) - std::log(2.0));
        c.within(err, 1e-9, [&] {
          return std::string("sign=") + sign_text(sign) + " phi=" + num(phi);
        });
      }
    }
  }));

  out.push_back(run_check("dynamics", "two_pi_periodicity", s, [&](Check& c) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < sample; ++i) {
      DensityMatrix rho = random_density_matrix(2, rng);
      InteractionSpec spec = reduction_specs()[i % reduction_specs().size()];
      spec.angle = angle(rng);
      InteractionSpec shifted = spec;
      shifted.angle += 2.0 * kPi;
      double err = max_abs_diff(reduced_dynamics(rho, spec).matrix(),
                                reduced_dynamics(rho, shifted).matrix());
      c.within(err, 1e-12,
               [&] { return state_text(rho) + ' ' + spec_text(spec); });
    }
  }));
}

// -------------------------------------------------------------- entanglement

void entanglement_checks(const SuiteOptions& o, Rng& rng,
                         std::vector<InvariantOutcome>& out) {
  const double s = o.tolerance_scale;
  const std::vector<double> phis = grid(0.0, kPi, 25);

  out.push_back(run_check("entanglement", "concurrence_matches_cosine", s,
                          [&](Check& c) {
    for (BellSign sign : {BellSign::Plus, BellSign::Minus}) {
      for (double phi : phis) {
        InteractionSpec spec{QubitLabel::A, QubitLabel::C, RotationAxis::Z,
                             phi};
        double value = concurrence(reduced_dynamics(bell_state(sign), spec)).value;
        c.within(std::abs(value - std::abs(std::cos(phi))), 1e-9, [&] {
          return std::string("sign=") + sign_text(sign) + " phi=" + num(phi);
        });
      }
    }
  }));

  out.push_back(run_check("entanglement", "concurrence_zero_iff_ppt", s,
                          [&](Check& c) {
    auto check_state = [&](const DensityMatrix& rho, const std::string& tag) {
      double conc = concurrence(rho).value;
      bool zero = conc <= 2.0 * kPptTolerance;
      c.holds(zero == ppt_separable(rho), [&] {
        return tag + ' ' + state_text(rho) + " concurrence=" + num(conc) +
               " min_pt_eigenvalue=" +
               num(min_partial_transpose_eigenvalue(rho, {QubitLabel::B}));
      });
    };
    for (BellSign sign : {BellSign::Plus, BellSign::Minus}) {
      for (double phi : phis) {
        InteractionSpec spec{QubitLabel::A, QubitLabel::C, RotationAxis::Z,
                             phi};
        check_state(reduced_dynamics(bell_state(sign), spec),
                    "phi=" + num(phi));
      }
    }
    const std::vector<double> coarse = grid(0.0, kPi, 10);
    for (RotationAxis ax : {RotationAxis::Z, RotationAxis::X}) {
      for (double pa : coarse) {
        for (double pb : coarse) {
          check_state(two_interaction_state(BellSign::Plus, pa, pb, ax),
                      "phi_a=" + num(pa) + " phi_b=" + num(pb));
        }
      }
    }
    for (int i = 0; i < o.random_states; ++i) {
      check_state(random_density_matrix(2, rng), "random");
    }
  }));

  out.push_back(run_check("entanglement", "local_unitary_invariance", s,
                          [&](Check& c) {
    const int sample = std::max(1, o.random_states / 5);
    for (int i = 0; i < sample; ++i) {
      DensityMatrix rho = random_density_matrix(2, rng);
      ComplexMatrix u = local_unitary_pair(rng);
      DensityMatrix moved = evolve(rho, u);
      double err =
          std::abs(concurrence(rho).value - concurrence(moved).value);
      c.within(err, 1e-10,
               [&] { return state_text(rho) + " u=" + matrix_text(u); });
    }
  }));

  out.push_back(run_check("entanglement", "spin_flip_product_is_square", s,
                          [&](Check& c) {
    for (BellSign sign : {BellSign::Plus, BellSign::Minus}) {
      for (double phi : phis) {
        InteractionSpec spec{QubitLabel::A, QubitLabel::C, RotationAxis::Z,
                             phi};
        DensityMatrix rho = reduced_dynamics(bell_state(sign), spec);
        double err = max_abs_diff(spin_flip_product(rho),
                                  rho.matrix() * rho.matrix());
        c.within(err, 1e-12, [&] {
          return std::string("sign=") + sign_text(sign) + " phi=" + num(phi);
        });
      }
    }
  }));

  out.push_back(run_check("entanglement", "witness_nullity", s,
                          [&](Check& c) {
    const std::vector<double> full = grid(0.0, 2.0 * kPi, 25);
    for (BellSign sign : {BellSign::Plus, BellSign::Minus}) {
      for (double phi : full) {
        DensityMatrix rho = full_correlated_state(sign, phi);
        double err = std::max(mermin_max_abs(rho), ghz_fidelity(rho));
        c.within(err, 1e-10, [&] {
          return std::string("sign=") + sign_text(sign) + " phi=" + num(phi);
        });
      }
    }
  }));

  out.push_back(run_check("entanglement", "w_fidelity_opposite_drift", s,
                          [&](Check& c) {
    const double h = 1e-4;
    for (double phi : grid(0.1, kPi - 0.1, 23)) {
      auto slope = [&](BellSign sign) {
        return (w_fidelity(full_correlated_state(sign, phi + h)) -
                w_fidelity(full_correlated_state(sign, phi - h))) /
               (2.0 * h);
      };
      double dp = slope(BellSign::Plus);
      double dm = slope(BellSign::Minus);
      c.holds(dp * dm < 0.0, [&] {
        return "phi=" + num(phi) + " slope_plus=" + num(dp) +
               " slope_minus=" + num(dm);
      });
    }
  }));
}

// -------------------------------------------------------------- channel_maps

PauliScalingMap random_map(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> f(lo, hi);
  PauliScalingMap m;
  for (int k = 0; k < 3; ++k) {
    m.factor_a[k] = f(rng);
    m.factor_b[k] = f(rng);
  }
  return m;
}

void channel_map_checks(const SuiteOptions& o, Rng& rng,
                        std::vector<InvariantOutcome>& out) {
  const double s = o.tolerance_scale;
  const std::vector<double> phis = grid(0.0, 2.0 * kPi, 25);

  out.push_back(run_check("channel_maps", "map_agrees_with_dynamics", s,
                          [&](Check& c) {
    const int sample = std::max(1, o.random_states / 50);
    for (int i = 0; i < sample; ++i) {
      DensityMatrix rho = random_density_matrix(2, rng);
      for (const InteractionSpec& base : reduction_specs()) {
        for (double phi : phis) {
          InteractionSpec spec = base;
          spec.angle = phi;
          PauliScalingMap m =
              map_from_interaction(spec.target, spec.axis, std::cos(phi));
          MapOutcome res = apply_map(m, rho);
          double err = max_abs_diff(res.matrix(),
                                    reduced_dynamics(rho, spec).matrix());
          c.within(err, 1e-12,
                   [&] { return state_text(rho) + ' ' + spec_text(spec); });
        }
      }
    }
  }));

  out.push_back(run_check("channel_maps", "trace_and_hermiticity_preserved", s,
                          [&](Check& c) {
    for (int i = 0; i < o.random_states; ++i) {
      PauliScalingMap m = random_map(rng, -3.0, 3.0);
      DensityMatrix rho = random_density_matrix(2, rng);
      const MapOutcome res = apply_map(m, rho);
      const ComplexMatrix& img = res.matrix();
      double err = std::max(std::abs(img.trace() - Complex(1.0, 0.0)),
                            hermiticity_error(img));
      c.within(err, 1e-12,
               [&] { return map_text(m) + ' ' + state_text(rho); });
    }
  }));

  out.push_back(run_check("channel_maps", "cp_maps_are_positive", s,
                          [&](Check& c) {
    std::vector<PauliScalingMap> maps = {
        PauliScalingMap::identity(),
        map_from_interaction(QubitLabel::A, RotationAxis::Z, 0.3),
        map_from_interaction(QubitLabel::B, RotationAxis::X, -0.7),
        compose(map_from_interaction(QubitLabel::A, RotationAxis::Y, 0.0),
                map_from_interaction(QubitLabel::B, RotationAxis::Z, 0.5)),
    };
    const int per_map = std::max(1, o.random_states / 4);
    for (const PauliScalingMap& m : maps) {
      c.holds(is_completely_positive(m),
              [&] { return map_text(m) + " not completely positive"; });
      for (int i = 0; i < per_map; ++i) {
        DensityMatrix rho = random_density_matrix(2, rng);
        MapOutcome res = apply_map(m, rho);
        c.holds(res.positive(), [&] {
          return map_text(m) + ' ' + state_text(rho) + " min_eigenvalue=" +
                 num(res.failure().min_eigenvalue);
        });
      }
    }
  }));

  out.push_back(run_check("channel_maps", "ncp_maps_have_witness", s,
                          [&](Check& c) {
    std::vector<PauliScalingMap> maps;
    for (double phi_i : {0.3, 0.8, 1.2, 1.5, 1.9, 2.4}) {
      maps.push_back(interval_map(QubitLabel::A, RotationAxis::Z, phi_i, 0.0));
      maps.push_back(interval_map(QubitLabel::B, RotationAxis::X, phi_i, 0.0));
    }
    maps.push_back(compose(maps[0], maps[3]));
    std::uint64_t local_seed = o.seed;
    for (const PauliScalingMap& m : maps) {
      bool cp = is_completely_positive(m);
      c.holds(!cp, [&] { return map_text(m) + " unexpectedly CP"; });
      if (!cp) {
        c.holds(find_positivity_witness(m, local_seed++).has_value(),
                [&] { return map_text(m) + " no witness found"; });
      }
    }
  }));

  out.push_back(run_check("channel_maps", "cp_maps_do_not_raise_concurrence",
                          s, [&](Check& c) {
    const int sample = std::max(1, o.random_states / 5);
    for (int i = 0; i < sample; ++i) {
      std::uniform_real_distribution<double> f(-1.0, 1.0);
      PauliScalingMap m = compose(
          map_from_interaction(QubitLabel::A, RotationAxis::Z, f(rng)),
          map_from_interaction(QubitLabel::B, RotationAxis::X, f(rng)));
      DensityMatrix rho = random_density_matrix(2, rng);
      MapOutcome res = apply_map(m, rho);
      if (!res.positive()) {
        c.holds(false, [&] { return map_text(m) + ' ' + state_text(rho); });
        continue;
      }
      double gain = concurrence(res.state()).value - concurrence(rho).value;
      c.within(std::max(0.0, gain), 1e-9,
               [&] { return map_text(m) + ' ' + state_text(rho); });
    }
  }));

  out.push_back(run_check("channel_maps", "ncp_map_restores_entanglement", s,
                          [&](Check& c) {
    for (double eps : {0.01, 0.1, 0.3, 0.5, 1.0}) {
      const double phi_i = kPi / 2.0 - eps;
      InteractionSpec spec{QubitLabel::A, QubitLabel::C, RotationAxis::Z,
                           phi_i};
      DensityMatrix image = reduced_dynamics(bell_state(BellSign::Plus), spec);
      MapOutcome res = apply_map(
          interval_map(QubitLabel::A, RotationAxis::Z, phi_i, 0.0), image);
      if (!res.positive()) {
        c.holds(false, [&] { return "eps=" + num(eps) + " image not positive"; });
        continue;
      }
      double before = concurrence(image).value;
      double after = concurrence(res.state()).value;
      double err = std::max(std::abs(before - std::cos(phi_i)),
                            std::abs(after - 1.0));
      c.within(err, 1e-9, [&] {
        return "eps=" + num(eps) + " before=" + num(before) +
               " after=" + num(after);
      });
    }
  }));

  out.push_back(run_check("channel_maps", "cross_qubit_composition_commutes",
                          s, [&](Check& c) {
    const int sample = std::max(1, o.random_states / 5);
    for (int i = 0; i < sample; ++i) {
      PauliScalingMap ma = random_map(rng, -2.0, 2.0);
      ma.factor_b = {1.0, 1.0, 1.0};
      PauliScalingMap mb = random_map(rng, -2.0, 2.0);
      mb.factor_a = {1.0, 1.0, 1.0};
      DensityMatrix rho = random_density_matrix(2, rng);
      ComplexMatrix ab = apply_linear(compose(ma, mb), rho.matrix());
      ComplexMatrix ba = apply_linear(compose(mb, ma), rho.matrix());
      ComplexMatrix seq = apply_linear(mb, apply_linear(ma, rho.matrix()));
      double err = std::max(max_abs_diff(ab, ba), max_abs_diff(ab, seq));
      c.within(err, 1e-12, [&] {
        return map_text(ma) + ' ' + map_text(mb) + ' ' + state_text(rho);
      });
    }
  }));
}

// --------------------------------------------------------------------- decay

void decay_checks(const SuiteOptions& o, std::vector<InvariantOutcome>& out) {
  const double s = o.tolerance_scale;
  const double rates[] = {0.0, 0.5, 1.0, 2.0};
  const double positive_rates[] = {0.25, 0.5, 1.0, 2.0, 5.0};
  const std::vector<double> times = grid(0.0, 3.0, 8);

  auto scenario_text = [](const DecayScenario& sc, double t) {
    return "gamma_a=" + num(sc.gamma_a) + " gamma_b=" + num(sc.gamma_b) +
           " axis_b=" + axis_name(sc.axis_b) + " t=" + num(t);
  };

  out.push_back(run_check("decay", "closed_form_matches_dynamics", s,
                          [&](Check& c) {
    for (RotationAxis ax : {RotationAxis::X, RotationAxis::Z}) {
      for (double ga : rates) {
        for (double gb : rates) {
          DecayScenario sc{ga, gb, ax, BellSign::Plus, {}};
          for (double t : times) {
            double err = std::abs(concurrence_decay(sc, t) -
                                  concurrence(decay_state(sc, t)).value);
            c.within(err, 1e-9, [&] { return scenario_text(sc, t); });
          }
        }
      }
    }
  }));

  out.push_back(run_check("decay", "death_time_brackets_zero", s,
                          [&](Check& c) {
    for (double ga : positive_rates) {
      for (double gb : positive_rates) {
        std::optional<double> ts = sudden_death_time(ga, gb);
        if (!ts) {
          c.holds(false, [&] {
            return "gamma_a=" + num(ga) + " gamma_b=" + num(gb) +
                   " no death time";
          });
          continue;
        }
        DecayScenario sc{ga, gb, RotationAxis::X, BellSign::Plus, {}};
        double before = concurrence_decay(sc, *ts * (1.0 - 1e-6));
        double after = concurrence_decay(sc, *ts * (1.0 + 1e-6));
        c.holds(before > 0.0 && after == 0.0, [&] {
          return scenario_text(sc, *ts) + " before=" + num(before) +
                 " after=" + num(after);
        });
      }
    }
  }));

  out.push_back(run_check("decay", "concurrence_nonincreasing", s,
                          [&](Check& c) {
    const std::vector<double> fine = grid(0.0, 5.0, 200);
    for (RotationAxis ax : {RotationAxis::X, RotationAxis::Z}) {
      for (double ga : positive_rates) {
        for (double gb : positive_rates) {
          DecayScenario sc{ga, gb, ax, BellSign::Plus, {}};
          double prev = concurrence_decay(sc, fine.front());
          for (std::size_t k = 1; k < fine.size(); ++k) {
            double cur = concurrence_decay(sc, fine[k]);
            c.within(std::max(0.0, cur - prev), 1e-14,
                     [&] { return scenario_text(sc, fine[k]); });
            prev = cur;
          }
        }
      }
    }
  }));

  out.push_back(run_check("decay", "separable_after_death", s,
                          [&](Check& c) {
    for (double ga : positive_rates) {
      for (double gb : positive_rates) {
        std::optional<double> ts = sudden_death_time(ga, gb);
        if (!ts) continue;
        DecayScenario sc{ga, gb, RotationAxis::X, BellSign::Plus, {}};
        for (double factor : {1.0, 1.01, 1.5, 3.0}) {
          const double t = *ts * factor;
          DensityMatrix rho = decay_state(sc, t);
          c.holds(ppt_separable(rho) &&
                      verify_decomposition(rho, separable_mixture_at(sc, t)),
                  [&] { return scenario_text(sc, t); });
        }
      }
    }
  }));

  out.push_back(run_check("decay", "same_axis_never_dies", s, [&](Check& c) {
    const std::vector<double> long_times = grid(0.0, 10.0, 21);
    for (double ga : positive_rates) {
      for (double gb : positive_rates) {
        DecayScenario sc{ga, gb, RotationAxis::Z, BellSign::Plus, {}};
        for (double t : long_times) {
          double closed = concurrence_decay(sc, t);
          double numeric = concurrence(decay_state(sc, t)).value;
          double expected = std::exp(-(ga + gb) * t);
          c.holds(closed > 0.0, [&] { return scenario_text(sc, t); });
          c.within(std::max(std::abs(closed - expected),
                            std::abs(numeric - expected)),
                   1e-9, [&] { return scenario_text(sc, t); });
        }
      }
    }
  }));
}

}  // namespace

std::vector<InvariantOutcome> run_invariant_suite(const SuiteOptions& options) {
  if (options.random_states < 1) {
    throw DomainError("random_states must be positive");
  }
  if (!(options.tolerance_scale >= 0.0) ||
      !std::isfinite(options.tolerance_scale)) {
    throw DomainError("tolerance_scale must be finite and non-negative");
  }
  Rng rng(options.seed);
  std::vector<InvariantOutcome> out;
  pauli_core_checks(options, rng, out);
  dynamics_checks(options, rng, out);
  entanglement_checks(options, rng, out);
  channel_map_checks(options, rng, out);
  decay_checks(options, out);
  return out;
}

}  // namespace qcontrol
