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

#pragma once

#include <functional>

#include "emqa/model.hpp"
#include "emqa/schedule.hpp"
#include "emqa/types.hpp"

namespace emqa {

struct NoiseParams {
  Real lambda = 0.0;  // uniform single-site depolarizing-type rate, >= 0
};

// Right-hand side of the master equation
//
//   d rho / dt = -i [H, rho]
//                - (lambda / 2) sum_{site i} sum_{axis a in {x,y,z}}
//                  [sigma_i^a, [sigma_i^a, rho]]
//
// evaluated for a fixed Hamiltonian.  Because (sigma_i^a)^2 = I, the double
// commutators reduce to -lambda (4 n rho - 2 sum_i Tr_i[rho] (x) I_i), which
// is what this computes; the literal form is kept as a test oracle.
// The map is linear and is applied to arbitrary (not necessarily Hermitian)
// operators, e.g. superoperator basis columns.  h must be Hermitian.
Matrix lindblad_rhs(const Matrix& rho, const Matrix& h, const NoiseParams& noise);

// Integrates the master equation for H(t) = A(t) H_problem + B(t) H_driver
// from t0 to t1 with a fixed-step classical RK4 scheme.
//
// Each kink-free span between schedule breakpoints (segment boundaries and
// the measurement time) is covered by uniform steps of size <= dt, so stage
// times never straddle a kink and the final step lands exactly on t1.
// Hermitian inputs are re-symmetrized every 100 steps and on exit;
// sub-normalized or non-Hermitian inputs are propagated by the same linear
// equation without renormalization.  Throws IntegrationError when the trace
// drifts by more than 1e-6.
Matrix propagate(const Matrix& rho0, const Schedule& sched, Real t0, Real t1,
                 const ModelParams& p, const NoiseParams& noise, Real dt);

// Time-ordered product of midpoint matrix exponentials of -i h_of_t(t) dt
// over [t0, t1], splitting at the given interior breakpoints.  h_of_t must
// return a Hermitian matrix of fixed dimension.
Matrix timeordered_exponential(const std::function<Matrix(Real)>& h_of_t,
                               Real t0, Real t1, Real dt,
                               const std::vector<Real>& interior_breakpoints = {});

// Unitary propagator of the noiseless schedule Hamiltonian over [t0, t1],
// built from fine-grained midpoint exponentials.  Throws IntegrationError if
// the result drifts from unitarity by more than 1e-6 in Frobenius norm.
Matrix unitary_propagator(const Schedule& sched, Real t0, Real t1,
                          const ModelParams& p, Real dt);

// Column-major vectorization and its inverse.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, Eigen::Index dim);

// The channel of the master equation over [t0, t1] as a dim^2 x dim^2 matrix
// acting on column-vectorized operators.  Columns are built by propagating
// the operator basis, so this is an independent (brute-force) realization of
// the same evolution; it is guarded to n_sites <= 4.
struct Superoperator {
  Matrix mat;
  Eigen::Index dim;  // Hilbert-space dimension; mat is dim^2 x dim^2
};

Superoperator channel_superoperator(const Schedule& sched, Real t0, Real t1,
                                    const ModelParams& p, const NoiseParams& noise,
                                    Real dt);

// Hilbert-Schmidt adjoint of the channel applied to x: for a Kraus channel
// G(.) = sum_k G_k . G_k^dagger this is sum_k G_k^dagger x G_k, realized as
// unvec(S^dagger vec(x)).
Matrix apply_dual_channel(const Superoperator& s, const Matrix& x);

}  // namespace emqa
