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
//
// Closed-form single-qubit analysis of the retraced (non-inverting) schedule,
// plus a numerical inverse-map verifier for arbitrary schedules.
//
// The single-qubit model uses the trigonometric ramp pair
//   first half  t in [0, T]:   H(t) = -sin(pi t / 2T) sz - cos(pi t / 2T) sx
//   second half t in [T, 2T]:  H(t) = -cos(pi (t-T) / 2T) sz - sin(pi (t-T) / 2T) sx
// i.e. the second half retraces the ramp back to the driver.  psi(T) is the
// state propagated through the first half from |+>; phi(T) is the daggered
// second-half propagator applied to |+>.  Both admit the closed forms below
// with r = sqrt(pi^2 + 16 T^2):
//   psi = ( cos(r/4) + 4iT sin(r/4)/r,  pi sin(r/4)/r )
//   phi = ( cos(r/4) - 4iT sin(r/4)/r,  pi sin(r/4)/r )
// The transition rate P(T) = pi^2 sin^2(r/4)/r^2 measures non-adiabatic
// leakage, and lambda_min(T) is the smallest eigenvalue of the symmetrized
// virtual state rho rhobar + rhobar rho; negative values witness that the
// retraced schedule produces an unphysical virtual state.

#pragma once

#include "emqa/model.hpp"
#include "emqa/schedule.hpp"

namespace emqa {

// Trigonometric retrace Hamiltonian at time t for anneal time T (domain
// [0, 2T]).  Analysis-only; deliberately not forced into the piecewise-affine
// Schedule type.
Matrix trig_rqa_hamiltonian(Real t, Real t_anneal);

// First-half state from |+>, closed form.  T = 0 returns the limit |+>.
Eigen::Vector2cd psi_T(Real t_anneal);

// Daggered-second-half state from |+>, closed form (conjugate top component).
Eigen::Vector2cd phi_T(Real t_anneal);

// Non-adiabatic transition rate P(T) = pi^2 sin^2(r/4) / r^2 = |<1|psi>|^2.
Real transition_rate(Real t_anneal);

// Smallest eigenvalue of rho rhobar + rhobar rho, direct closed form
//   lambda_min = (A - r^2 sqrt(A)) / r^4
// with A = pi^4 + 8 pi^2 T^2 + 256 T^4 + 32 pi^2 T^2 cos(r/2)
//          - 8 pi^2 T^2 cos(r).
Real lambda_min(Real t_anneal);

// Same quantity rewritten through the transition rate:
//   lambda_min = (sqrt(1 - 64 T^2 P^2 / pi^2) - 1/2)^2 - 1/4.
// The radicand is non-negative analytically; a radicand below -1e-12 is a
// contract violation.
Real lambda_min_via_rate(Real t_anneal);

// All single-qubit quantities at one anneal time.
struct SingleQubitRQAResult {
  Real t_anneal = 0.0;
  Eigen::Vector2cd psi;
  Eigen::Vector2cd phi;
  Real lambda_min = 0.0;
  Real transition_rate = 0.0;
};

SingleQubitRQAResult single_qubit_rqa(Real t_anneal);

// Frobenius distance between the second-half unitary propagator and the
// dagger of the first-half propagator at lambda = 0.  Zero (to integrator
// accuracy) exactly when the schedule's second half inverts its first half.
// Throws ConfigError when the schedule has no measurement time.
Real verify_inverse_map(const Schedule& sched, const ModelParams& p, Real dt);

}  // namespace emqa
