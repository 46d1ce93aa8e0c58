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

#include "emqa/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace emqa {

namespace {

int infer_sites(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index(1) << n) < dim) ++n;
  if ((Eigen::Index(1) << n) != dim) {
    throw ContractViolation("operator dimension is not a power of two");
  }
  return n;
}

// out += -lambda * (4 n x - 2 sum_i Tr_i[x] (x) I_i), the reduced form of the
// summed double commutators over all single-site Pauli axes.
void add_dissipator(const Matrix& x, Real lambda, int n_sites, Matrix& out) {
  if (lambda == 0.0) return;
  const Eigen::Index dim = x.rows();
  out -= (4.0 * lambda * n_sites) * x;
  const Eigen::Index half = dim / 2;
  for (int site = 0; site < n_sites; ++site) {
    const Eigen::Index mask = Eigen::Index(1) << (n_sites - 1 - site);
    const Eigen::Index low_bits = mask - 1;
    for (Eigen::Index cc = 0; cc < half; ++cc) {
      const Eigen::Index c0 = ((cc & ~low_bits) << 1) | (cc & low_bits);
      const Eigen::Index c1 = c0 | mask;
      for (Eigen::Index rr = 0; rr < half; ++rr) {
        const Eigen::Index r0 = ((rr & ~low_bits) << 1) | (rr & low_bits);
        const Eigen::Index r1 = r0 | mask;
        const Complex s = 2.0 * lambda * (x(r0, c0) + x(r1, c1));
        out(r0, c0) += s;
        out(r1, c1) += s;
      }
    }
  }
}

RealMatrix real_part_checked(const Matrix& m, const char* what) {
  const double imag_max = m.imag().cwiseAbs().maxCoeff();
  if (imag_max > 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    throw ContractViolation(std::string(what) +
                            ": expected a real symmetric operator");
  }
  return m.real();
}

// Fixed-step RK4 for the master equation with H(t) = a(t) HP + b(t) HD.
// HP and HD are real symmetric, so H * x splits into two real GEMMs per side;
// for Hermitian states the right product is recovered from the left one via
// x H = (H x)^dagger, halving the GEMM count on the hot path.
class Rk4Stepper {
 public:
  Rk4Stepper(RealMatrix hp, RealMatrix hd, Real lambda, int n_sites, bool hermitian)
      : hp_(std::move(hp)),
        hd_(std::move(hd)),
        lambda_(lambda),
        n_sites_(n_sites),
        hermitian_(hermitian) {
    const Eigen::Index d = hp_.rows();
    h_ = RealMatrix::Zero(d, d);
    xr_.resize(d, d);
    xi_.resize(d, d);
    wr_.resize(d, d);
    wi_.resize(d, d);
    vr_.resize(d, d);
    vi_.resize(d, d);
    k1_.resize(d, d);
    k2_.resize(d, d);
    k3_.resize(d, d);
    k4_.resize(d, d);
    stage_.resize(d, d);
  }

  void rhs(const Matrix& x, const AB& ab, Matrix& out) {
    h_ = ab.a * hp_ + ab.b * hd_;
    xr_ = x.real();
    xi_ = x.imag();
    wr_.noalias() = h_ * xr_;
    wi_.noalias() = h_ * xi_;
    if (hermitian_) {
      // -i [H, x] with x H = (H x)^dagger.
      out.real() = wi_ + wi_.transpose();
      out.imag() = wr_.transpose() - wr_;
    } else {
      vr_.noalias() = xr_ * h_;
      vi_.noalias() = xi_ * h_;
      out.real() = wi_ - vi_;
      out.imag() = vr_ - wr_;
    }
    add_dissipator(x, lambda_, n_sites_, out);
  }

  void step(Matrix& y, const AB& ab0, const AB& ab_mid, const AB& ab1, Real h) {
    rhs(y, ab0, k1_);
    stage_ = y + (h / 2) * k1_;
    rhs(stage_, ab_mid, k2_);
    stage_ = y + (h / 2) * k2_;
    rhs(stage_, ab_mid, k3_);
    stage_ = y + h * k3_;
    rhs(stage_, ab1, k4_);
    y += (h / 6) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
  }

 private:
  RealMatrix hp_, hd_, h_;
  Real lambda_;
  int n_sites_;
  bool hermitian_;
  RealMatrix xr_, xi_, wr_, wi_, vr_, vi_;
  Matrix k1_, k2_, k3_, k4_, stage_;
};

// [t0, t1] split at every schedule kink and at the measurement time, so no
// integration step straddles a non-smooth point.
std::vector<Real> span_breakpoints(const Schedule& sched, Real t0, Real t1) {
  std::vector<Real> pts{t0, t1};
  auto push_interior = [&](Real t) {
    if (t > t0 + 1e-12 && t < t1 - 1e-12) pts.push_back(t);
  };
  for (const Segment& seg : sched.segments) {
    push_interior(seg.t0);
    push_interior(seg.t1);
  }
  if (sched.measurement_time) push_interior(*sched.measurement_time);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Real a, Real b) { return std::abs(a - b) <= 1e-12; }),
            pts.end());
  return pts;
}

void check_span(const Schedule& sched, Real t0, Real t1, Real dt) {
  if (!(dt > 0)) throw ConfigError("propagate: dt must be > 0");
  if (!(t0 < t1)) throw ContractViolation("propagate: need t0 < t1");
  if (t0 < -1e-12 || t1 > sched.total_duration + 1e-12) {
    throw ContractViolation("propagate: [t0, t1] outside the schedule domain");
  }
}

}  // namespace

Matrix lindblad_rhs(const Matrix& rho, const Matrix& h, const NoiseParams& noise) {
  if (rho.rows() != rho.cols() || h.rows() != h.cols() || rho.rows() != h.rows()) {
    throw ContractViolation("lindblad_rhs: shape mismatch");
  }
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
    throw ContractViolation("lindblad_rhs: Hamiltonian must be Hermitian");
  }
  if (noise.lambda < 0) throw ConfigError("lindblad_rhs: lambda must be >= 0");
  const int n = infer_sites(rho.rows());
  Matrix out = Complex(0, -1) * (h * rho - rho * h);
  add_dissipator(rho, noise.lambda, n, out);
  return out;
}

Matrix propagate(const Matrix& rho0, const Schedule& sched, Real t0, Real t1,
                 const ModelParams& p, const NoiseParams& noise, Real dt) {
  check_span(sched, t0, t1, dt);
  if (noise.lambda < 0) throw ConfigError("propagate: lambda must be >= 0");
  if (rho0.rows() != rho0.cols() || rho0.rows() != p.dim()) {
    throw ContractViolation("propagate: state dimension does not match the model");
  }

  const double scale = std::max(1.0, rho0.cwiseAbs().maxCoeff());
  const bool hermitian =
      (rho0 - rho0.adjoint()).cwiseAbs().maxCoeff() <= 1e-10 * scale;

  RealMatrix hp = real_part_checked(build_problem(p), "propagate: H_problem");
  RealMatrix hd = real_part_checked(build_driver(p), "propagate: H_driver");
  Rk4Stepper stepper(std::move(hp), std::move(hd), noise.lambda, p.n_sites, hermitian);

  const Complex trace0 = rho0.trace();
  Matrix y = rho0;
  long steps_done = 0;
  const std::vector<Real> pts = span_breakpoints(sched, t0, t1);
  for (std::size_t piece = 0; piece + 1 < pts.size(); ++piece) {
    const Real a = pts[piece];
    const Real b = pts[piece + 1];
    const long n = std::max<long>(1, static_cast<long>(std::ceil((b - a) / dt - 1e-12)));
    const Real h = (b - a) / static_cast<Real>(n);
    for (long k = 0; k < n; ++k) {
      const Real ts = a + k * h;
      const Real te = (k + 1 == n) ? b : a + (k + 1) * h;
      const Real tm = std::min(a + (k + 0.5) * h, b);
      stepper.step(y, evaluate(sched, ts), evaluate(sched, tm), evaluate(sched, te), h);
      if (hermitian && (++steps_done % 100 == 0)) {
        y = ((y + y.adjoint()) / 2.0).eval();
      }
    }
  }

  const double herm_drift = (y - y.adjoint()).cwiseAbs().maxCoeff();
  if (hermitian) {
    if (herm_drift > 1e-6) {
      throw IntegrationError("propagate: hermiticity drift " + std::to_string(herm_drift));
    }
    y = ((y + y.adjoint()) / 2.0).eval();
  }
  const double trace_drift = std::abs(y.trace() - trace0);
  if (trace_drift > 1e-6 * std::max(1.0, std::abs(trace0))) {
    throw IntegrationError("propagate: trace drift " + std::to_string(trace_drift));
  }
  return y;
}

Matrix timeordered_exponential(const std::function<Matrix(Real)>& h_of_t,
                               Real t0, Real t1, Real dt,
                               const std::vector<Real>& interior_breakpoints) {
  if (!(dt > 0)) throw ConfigError("timeordered_exponential: dt must be > 0");
  if (!(t0 < t1)) throw ContractViolation("timeordered_exponential: need t0 < t1");
  std::vector<Real> pts{t0, t1};
  for (Real t : interior_breakpoints) {
    if (t > t0 + 1e-12 && t < t1 - 1e-12) pts.push_back(t);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Real a, Real b) { return std::abs(a - b) <= 1e-12; }),
            pts.end());

  Matrix u;
  bool first = true;
  for (std::size_t piece = 0; piece + 1 < pts.size(); ++piece) {
    const Real a = pts[piece];
    const Real b = pts[piece + 1];
    const long n = std::max<long>(1, static_cast<long>(std::ceil((b - a) / dt - 1e-12)));
    const Real h = (b - a) / static_cast<Real>(n);
    for (long k = 0; k < n; ++k) {
      const Real tm = std::min(a + (k + 0.5) * h, b);
      EigenSystem es = herm_eigensystem(h_of_t(tm));
      const Eigen::Index d = es.values.size();
      Vector phases(d);
      for (Eigen::Index q = 0; q < d; ++q) {
        phases(q) = std::exp(Complex(0, -es.values(q) * h));
      }
      Matrix factor = es.vectors * phases.asDiagonal() * es.vectors.adjoint();
      if (first) {
        u = factor;
        first = false;
      } else {
        u = (factor * u).eval();
      }
    }
  }
  return u;
}

Matrix unitary_propagator(const Schedule& sched, Real t0, Real t1,
                          const ModelParams& p, Real dt) {
  check_span(sched, t0, t1, dt);
  const Matrix hp = build_problem(p);
  const Matrix hd = build_driver(p);
  std::vector<Real> interior;
  for (const Segment& seg : sched.segments) {
    interior.push_back(seg.t0);
    interior.push_back(seg.t1);
  }
  if (sched.measurement_time) interior.push_back(*sched.measurement_time);
  Matrix u = timeordered_exponential(
      [&](Real t) {
        const AB ab = evaluate(sched, t);
        return Matrix(ab.a * hp + ab.b * hd);
      },
      t0, t1, dt, interior);
  const double drift =
      (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm();
  if (drift > 1e-6) {
    throw IntegrationError("unitary_propagator: unitarity drift " + std::to_string(drift));
  }
  return u;
}

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, Eigen::Index dim) {
  if (v.size() != dim * dim) throw ContractViolation("unvec: size mismatch");
  return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

Superoperator channel_superoperator(const Schedule& sched, Real t0, Real t1,
                                    const ModelParams& p, const NoiseParams& noise,
                                    Real dt) {
  if (p.n_sites > 4) {
    throw ConfigError("channel_superoperator: guarded to n_sites <= 4 "
                      "(dense superoperator grows as 16^n)");
  }
  check_span(sched, t0, t1, dt);
  const Eigen::Index d = p.dim();
  Superoperator s{Matrix(d * d, d * d), d};
  for (Eigen::Index k = 0; k < d * d; ++k) {
    Matrix basis = Matrix::Zero(d, d);
    basis(k % d, k / d) = 1.0;
    s.mat.col(k) = vec(propagate(basis, sched, t0, t1, p, noise, dt));
  }
  return s;
}

Matrix apply_dual_channel(const Superoperator& s, const Matrix& x) {
  if (x.rows() != s.dim || x.cols() != s.dim) {
    throw ContractViolation("apply_dual_channel: operand dimension mismatch");
  }
  return unvec(s.mat.adjoint() * vec(x), s.dim);
}

}  // namespace emqa
