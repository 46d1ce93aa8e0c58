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

#include "emqa/model.hpp"

#include <string>

namespace emqa {

void validate(const ModelParams& p) {
  if (p.n_sites < 1) throw ConfigError("model: n_sites must be >= 1");
  if (p.n_sites > 16) throw ConfigError("model: n_sites > 16 is not supported");
  if (!(p.j > 0)) throw ConfigError("model: J must be > 0");
  if (!(p.b > 0)) throw ConfigError("model: B must be > 0");
}

Matrix build_driver(const ModelParams& p) {
  validate(p);
  const Eigen::Index dim = p.dim();
  Matrix h = Matrix::Zero(dim, dim);
  for (int i = 0; i < p.n_sites; ++i) {
    PauliString ps;
    ps.axes.assign(p.n_sites, PauliAxis::I);
    ps.axes[i] = PauliAxis::X;
    ps.coeff = -p.b;
    h += to_dense(ps, p.n_sites);
  }
  return h;
}

std::vector<PauliString> decompose_problem(const ModelParams& p) {
  validate(p);
  std::vector<PauliString> terms;
  terms.reserve(3 * p.n_sites);
  const PauliAxis axes[3] = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};
  for (int i = 0; i < p.n_sites; ++i) {
    const int jn = (i + 1) % p.n_sites;
    for (PauliAxis ax : axes) {
      PauliString ps;
      ps.axes.assign(p.n_sites, PauliAxis::I);
      if (i == jn) {
        // Single-site ring: sigma^a sigma^a on the same site is the identity.
      } else {
        ps.axes[i] = ax;
        ps.axes[jn] = ax;
      }
      ps.coeff = (ax == PauliAxis::Z) ? p.j * p.delta : p.j;
      terms.push_back(std::move(ps));
    }
  }
  return terms;
}

Matrix build_problem(const ModelParams& p) {
  const Eigen::Index dim = p.dim();
  Matrix h = Matrix::Zero(dim, dim);
  for (const PauliString& ps : decompose_problem(p)) h += to_dense(ps, p.n_sites);
  return h;
}

Matrix hamiltonian_at(const ModelParams& p, Real a, Real b) {
  return a * build_problem(p) + b * build_driver(p);
}

GroundInfo exact_ground_energy(const ModelParams& p) {
  EigenSystem es = herm_eigensystem(build_problem(p));
  const Real e0 = es.values(0);
  int deg = 0;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    if (es.values(k) < e0 + 1e-9) ++deg;
  }
  return {e0, deg};
}

}  // namespace emqa
