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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "emqa/model.hpp"

using namespace emqa;

namespace {

ModelParams params(int n, Real j = 1.0, Real delta = -1.0, Real b = 1.0) {
  ModelParams p;
  p.n_sites = n;
  p.j = j;
  p.delta = delta;
  p.b = b;
  return p;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(validate(params(1)));
  CHECK_NOTHROW(validate(params(16)));
  CHECK_THROWS_AS(validate(params(0)), ConfigError);
  CHECK_THROWS_AS(validate(params(17)), ConfigError);
  CHECK_THROWS_AS(validate(params(3, 0.0)), ConfigError);
  CHECK_THROWS_AS(validate(params(3, -1.0)), ConfigError);
  CHECK_THROWS_AS(validate(params(3, 1.0, -1.0, 0.0)), ConfigError);
  CHECK(params(5).dim() == 32);
}

TEST_CASE("problem decomposition structure") {
  const ModelParams p = params(4);
  const auto terms = decompose_problem(p);
  REQUIRE(terms.size() == 12);
  // Bond-by-bond ordering: XX, YY with coefficient J, ZZ with J*delta.
  CHECK(terms[0].label() == "XXII");
  CHECK(terms[1].label() == "YYII");
  CHECK(terms[2].label() == "ZZII");
  CHECK(terms[9].label() == "XIIX");  // wrap-around bond (3, 0)
  CHECK(terms[0].coeff == doctest::Approx(1.0));
  CHECK(terms[2].coeff == doctest::Approx(-1.0));

  Matrix sum = Matrix::Zero(p.dim(), p.dim());
  for (const auto& t : terms) sum += to_dense(t, p.n_sites);
  CHECK((sum - build_problem(p)).norm() == doctest::Approx(0.0));
}

TEST_CASE("hamiltonians are hermitian and real") {
  for (int n : {1, 2, 3, 4}) {
    const ModelParams p = params(n);
    const Matrix hp = build_problem(p);
    const Matrix hd = build_driver(p);
    CHECK((hp - hp.adjoint()).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    CHECK((hd - hd.adjoint()).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    CHECK(hp.imag().cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    CHECK(hd.imag().cwiseAbs().maxCoeff() == doctest::Approx(0.0));
  }
}

TEST_CASE("interpolated hamiltonian") {
  const ModelParams p = params(2);
  const Matrix h = hamiltonian_at(p, 0.3, -0.7);
  CHECK((h - (0.3 * build_problem(p) - 0.7 * build_driver(p))).norm() ==
        doctest::Approx(0.0));
}

TEST_CASE("driver ground state and spectrum") {
  const ModelParams p = params(3);
  const Matrix hd = build_driver(p);
  const EigenSystem es = herm_eigensystem(hd);
  const RealVector expected =
      (RealVector(8) << -3, -1, -1, -1, 1, 1, 1, 3).finished();
  CHECK((es.values - expected).cwiseAbs().maxCoeff() ==
        doctest::Approx(0.0).epsilon(1e-12));
  // |+>^N is the unique driver ground state at energy -N*B.
  const Vector plus = plus_state(3);
  CHECK((hd * plus + 3.0 * plus).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("exact ground energies of the periodic chain at delta=-1") {
  // Values fixed by independent dense diagonalization.
  struct Expected {
    int n;
    Real energy;
    int degeneracy;
  };
  const Expected table[] = {
      {1, 1.0, 2}, {2, -2.0, 3}, {3, -3.0, 2},
      {4, -4.0, 5}, {5, -5.0, 2}, {6, -6.0, 7},
  };
  for (const Expected& e : table) {
    const GroundInfo g = exact_ground_energy(params(e.n));
    CHECK(g.energy == doctest::Approx(e.energy).epsilon(1e-9));
    CHECK(g.degeneracy == e.degeneracy);
  }
}

TEST_CASE("largest eigenvalue at N=3") {
  const EigenSystem es = herm_eigensystem(build_problem(params(3)));
  CHECK(es.values(es.values.size() - 1) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("coupling scale") {
  const GroundInfo g = exact_ground_energy(params(3, 2.0));
  CHECK(g.energy == doctest::Approx(-6.0).epsilon(1e-9));
}

TEST_CASE("single-site ring degenerates to a multiple of the identity") {
  const ModelParams p = params(1);
  const Matrix hp = build_problem(p);
  CHECK((hp - Matrix::Identity(2, 2)).norm() ==
        doctest::Approx(0.0));  // (2 + delta) J = 1 at delta = -1
  const GroundInfo g = exact_ground_energy(p);
  CHECK(g.energy == doctest::Approx(1.0));
  CHECK(g.degeneracy == 2);
}
