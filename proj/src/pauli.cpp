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

#include "emqa/pauli.hpp"

#include <cmath>

namespace emqa {

std::string PauliString::label() const {
  std::string s;
  s.reserve(axes.size());
  for (PauliAxis a : axes) s.push_back(static_cast<char>(a));
  return s;
}

Matrix pauli_matrix(PauliAxis axis) {
  Matrix m(2, 2);
  switch (axis) {
    case PauliAxis::I:
      m << 1, 0, 0, 1;
      break;
    case PauliAxis::X:
      m << 0, 1, 1, 0;
      break;
    case PauliAxis::Y:
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case PauliAxis::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix to_dense(const PauliString& ps, int n) {
  if (ps.n_sites() != n) {
    throw ContractViolation("to_dense: string has " +
                            std::to_string(ps.n_sites()) + " sites, expected " +
                            std::to_string(n));
  }
  Matrix out = Matrix::Constant(1, 1, Complex(ps.coeff, 0.0));
  for (PauliAxis a : ps.axes) out = kron(out, pauli_matrix(a));
  return out;
}

Matrix projector(const PauliString& ps, int sign) {
  if (ps.coeff != 1.0) {
    throw ContractViolation("projector: coefficient must be exactly 1");
  }
  if (sign != 1 && sign != -1) {
    throw ContractViolation("projector: sign must be +1 or -1");
  }
  const int n = ps.n_sites();
  const Eigen::Index dim = Eigen::Index(1) << n;
  Matrix sigma = to_dense(ps, n);
  return (Matrix::Identity(dim, dim) + static_cast<Real>(sign) * sigma) / 2.0;
}

Vector plus_state(int n) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  return Vector::Constant(dim, Complex(1.0 / std::sqrt(static_cast<Real>(dim)), 0.0));
}

EigenSystem herm_eigensystem(const Matrix& op) {
  if (op.rows() != op.cols()) {
    throw ContractViolation("herm_eigensystem: operator must be square");
  }
  const double asym = (op - op.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-9) {
    throw ContractViolation("herm_eigensystem: input is not Hermitian (max |op - op^H| = " +
                            std::to_string(asym) + ")");
  }
  Matrix sym = (op + op.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw IntegrationError("herm_eigensystem: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ContractViolation("frobenius_distance: shape mismatch");
  }
  return (a - b).norm();
}

}  // namespace emqa
