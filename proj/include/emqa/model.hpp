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

#include <vector>

#include "emqa/pauli.hpp"
#include "emqa/types.hpp"

namespace emqa {

// Periodic XXZ ring coupled to a transverse-field driver.
//
//   H_problem = J * sum_i ( X_i X_{i+1} + Y_i Y_{i+1} + delta * Z_i Z_{i+1} )
//   H_driver  = -b * sum_i X_i
//
// with i+1 taken mod n_sites.  The wrap-around bond is kept literal: for
// n_sites == 2 the (0,1) bond is counted twice, and for n_sites == 1 the
// self-bond degenerates to (2 + delta) * J * Identity.  The single-site case
// exists for propagator verification, not as a physical chain.
struct ModelParams {
  int n_sites = 3;
  Real j = 1.0;       // problem coupling, > 0
  Real delta = -1.0;  // ZZ anisotropy
  Real b = 1.0;       // driver amplitude, > 0

  Eigen::Index dim() const { return Eigen::Index(1) << n_sites; }
};

// Throws ConfigError unless n_sites >= 1, j > 0, b > 0.
void validate(const ModelParams& p);

// Dense driver Hamiltonian -b * sum_i X_i (real symmetric).
Matrix build_driver(const ModelParams& p);

// Dense problem Hamiltonian (real symmetric), equal to the coefficient-
// weighted sum of decompose_problem(p).
Matrix build_problem(const ModelParams& p);

// The 3 * n_sites measurable terms of the problem Hamiltonian, bond by bond:
// XX and YY with coefficient j, ZZ with coefficient j * delta.
std::vector<PauliString> decompose_problem(const ModelParams& p);

// a * H_problem + b * H_driver.  Convenience for cold paths; hot paths keep
// the two operators and combine per step.
Matrix hamiltonian_at(const ModelParams& p, Real a, Real b);

struct GroundInfo {
  Real energy;
  int degeneracy;  // eigenvalues within 1e-9 of the minimum
};

GroundInfo exact_ground_energy(const ModelParams& p);

}  // namespace emqa
