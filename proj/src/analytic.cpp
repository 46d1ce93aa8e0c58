// Copyright 2026 The emqa-sim authors
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

#include "emqa/analytic.hpp"

#include <cmath>
#include <numbers>

#include "emqa/evolve.hpp"

namespace emqa {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;

Real r_of(Real t) { return std::sqrt(kPi * kPi + 16.0 * t * t); }

}  // namespace

Matrix trig_rqa_hamiltonian(Real t, Real t_anneal) {
  if (!(t_anneal > 0)) {
    throw ContractViolation("trig_rqa_hamiltonian: need T > 0");
  }
  if (t < -1e-12 || t > 2.0 * t_anneal + 1e-12) {
    throw ContractViolation("trig_rqa_hamiltonian: t outside [0, 2T]");
  }
  const Matrix sx = pauli_matrix(PauliAxis::X);
  const Matrix sz = pauli_matrix(PauliAxis::Z);
  if (t <= t_anneal) {
    const Real th = kPi * t / (2.0 * t_anneal);
    return Matrix(-std::sin(th) * sz - std::cos(th) * sx);
  }
  const Real th = kPi * (t - t_anneal) / (2.0 * t_anneal);
  return Matrix(-std::cos(th) * sz - std::sin(th) * sx);
}

Eigen::Vector2cd psi_T(Real t_anneal) {
  if (!(t_anneal >= 0)) throw ContractViolation("psi_T: need T >= 0");
  const Real r = r_of(t_anneal);
  const Real c = std::cos(r / 4.0);
  const Real s = std::sin(r / 4.0);
  Eigen::Vector2cd v;
  v << Complex(c, 4.0 * t_anneal * s / r), Complex(kPi * s / r, 0.0);
  return v;
}

Eigen::Vector2cd phi_T(Real t_anneal) {
  Eigen::Vector2cd v = psi_T(t_anneal);
  v(0) = std::conj(v(0));
  return v;
}

Real transition_rate(Real t_anneal) {
  if (!(t_anneal >= 0)) throw ContractViolation("transition_rate: need T >= 0");
  const Real r = r_of(t_anneal);
  const Real s = std::sin(r / 4.0);
  return kPi * kPi * s * s / (r * r);
}

Real lambda_min(Real t_anneal) {
  if (!(t_anneal >= 0)) throw ContractViolation("lambda_min: need T >= 0");
  const Real t2 = t_anneal * t_anneal;
  const Real r2 = kPi * kPi + 16.0 * t2;
  const Real r = std::sqrt(r2);
  const Real a = std::pow(kPi, 4) + 8.0 * kPi * kPi * t2 + 256.0 * t2 * t2 +
                 32.0 * kPi * kPi * t2 * std::cos(r / 2.0) -
                 8.0 * kPi * kPi * t2 * std::cos(r);
  return (a - r2 * std::sqrt(a)) / (r2 * r2);
}

Real lambda_min_via_rate(Real t_anneal) {
  const Real p = transition_rate(t_anneal);
  const Real radicand =
      1.0 - 64.0 * t_anneal * t_anneal * p * p / (kPi * kPi);
  if (radicand < -1e-12) {
    throw ContractViolation("lambda_min_via_rate: radicand fell below zero");
  }
  const Real root = std::sqrt(std::max(radicand, 0.0));
  return (root - 0.5) * (root - 0.5) - 0.25;
}

SingleQubitRQAResult single_qubit_rqa(Real t_anneal) {
  SingleQubitRQAResult out;
  out.t_anneal = t_anneal;
  out.psi = psi_T(t_anneal);
  out.phi = phi_T(t_anneal);
  out.lambda_min = lambda_min(t_anneal);
  out.transition_rate = transition_rate(t_anneal);
  return out;
}

Real verify_inverse_map(const Schedule& sched, const ModelParams& p, Real dt) {
  if (!sched.measurement_time) {
    throw ConfigError("verify_inverse_map: schedule has no measurement time");
  }
  const Real t_mid = *sched.measurement_time;
  const Matrix u_first = unitary_propagator(sched, 0.0, t_mid, p, dt);
  const Matrix u_second =
      unitary_propagator(sched, t_mid, sched.total_duration, p, dt);
  return frobenius_distance(u_second, u_first.adjoint());
}

}  // namespace emqa
