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

#include <string>
#include <vector>

#include "emqa/types.hpp"

namespace emqa {

enum class PauliAxis : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

// Tensor product of single-site Pauli operators with a real coefficient.
// axes[0] is the leftmost tensor factor, i.e. the most significant qubit of
// the computational-basis index.
struct PauliString {
  std::vector<PauliAxis> axes;
  Real coeff = 1.0;

  int n_sites() const { return static_cast<int>(axes.size()); }
  std::string label() const;
};

// Single-site 2x2 Pauli matrix for one axis.
Matrix pauli_matrix(PauliAxis axis);

// Kronecker product, row-major qubit ordering (a is the more significant
// factor).
Matrix kron(const Matrix& a, const Matrix& b);

// Dense 2^n x 2^n realization of ps (coefficient included).
// Requires ps.n_sites() == n.
Matrix to_dense(const PauliString& ps, int n);

// Projector (I + sign * sigma) / 2 onto the +/- eigenspace of the bare string
// sigma.  Requires ps.coeff == 1 and sign in {+1, -1}; the projector has
// trace 2^n / 2 and is idempotent.
Matrix projector(const PauliString& ps, int sign);

// Uniform superposition |+>^n, the ground state of the transverse driver.
Vector plus_state(int n);

struct EigenSystem {
  RealVector values;  // ascending
  Matrix vectors;     // columns, orthonormal
};

// Eigendecomposition of a Hermitian operator.  Throws ContractViolation when
// max |op - op^dagger| exceeds 1e-9 elementwise; smaller asymmetry (e.g. from
// integrator roundoff) is removed by symmetrizing before the solve.
EigenSystem herm_eigensystem(const Matrix& op);

// Frobenius distance ||a - b||_F between two same-shaped operators.
double frobenius_distance(const Matrix& a, const Matrix& b);

}  // namespace emqa
