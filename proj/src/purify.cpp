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

#include "emqa/purify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "emqa/evolve.hpp"
#include "emqa/parallel.hpp"

namespace emqa {

namespace {

struct Protocol {
  Schedule sched;
  Real t_mid;
  Real t_end;
};

Protocol second_half(const SimulationConfig& cfg) {
  Schedule sched = make_schedule(cfg, cfg.t_anneal);
  if (!sched.measurement_time) {
    throw ConfigError("purify: the '" + to_string(cfg.schedule) +
                      "' schedule has no mid-anneal measurement time");
  }
  const Real t_mid = *sched.measurement_time;
  const Real t_end = sched.total_duration;
  return Protocol{std::move(sched), t_mid, t_end};
}

// Population of |+>^N in an operator propagated through the second half.
Real final_population(const Matrix& op, const Protocol& proto,
                      const SimulationConfig& cfg) {
  const ModelParams p = model_params(cfg);
  const NoiseParams noise{cfg.lambda};
  const Matrix out = propagate(op, proto.sched, proto.t_mid, proto.t_end, p,
                               noise, cfg.dt);
  const Vector plus = plus_state(p.n_sites);
  const Real pop = std::real(Complex(plus.adjoint() * out * plus));
  // Diagonal element of a Hermitian PSD operator; only roundoff can push it
  // below zero or above one.
  return std::clamp(pop, 0.0, 1.0);
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 of (seed + golden-ratio stride * index): a standard way to
  // spawn well-separated engine seeds from one master seed.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z = z ^ (z >> 31);
  return std::mt19937_64(z);
}

Real binomial_frequency(Real p, long shots, std::uint64_t seed,
                        std::uint64_t index) {
  std::mt19937_64 eng = substream(seed, index);
  std::binomial_distribution<long> dist(shots, std::clamp(p, 0.0, 1.0));
  return static_cast<Real>(dist(eng)) / static_cast<Real>(shots);
}

// Exact branch populations for every term plus the shared p0.
struct Populations {
  std::vector<PauliString> terms;  // coefficients included
  std::vector<TermExpectation> branch;
  Real p0 = 0.0;
};

Populations exact_populations(const SimulationConfig& cfg) {
  const Protocol proto = second_half(cfg);
  const Matrix rho_mid = forward_state(cfg);

  Populations pops;
  pops.terms = decompose_problem(model_params(cfg));
  pops.p0 = final_population(rho_mid, proto, cfg);
  pops.branch.resize(pops.terms.size());
  parallel_for(pops.terms.size(), [&](std::size_t i) {
    pops.branch[i] = dsp_term_expectation(rho_mid, pops.terms[i], cfg);
  });
  return pops;
}

}  // namespace

Matrix forward_state(const SimulationConfig& cfg) {
  const Protocol proto = second_half(cfg);
  const ModelParams p = model_params(cfg);
  const Vector plus = plus_state(p.n_sites);
  const Matrix rho0 = plus * plus.adjoint();
  return propagate(rho0, proto.sched, 0.0, proto.t_mid, p,
                   NoiseParams{cfg.lambda}, cfg.dt);
}

TermExpectation dsp_term_expectation(const Matrix& rho_mid,
                                     const PauliString& term,
                                     const SimulationConfig& cfg) {
  const Protocol proto = second_half(cfg);
  const ModelParams p = model_params(cfg);
  if (rho_mid.rows() != p.dim() || rho_mid.cols() != p.dim()) {
    throw ContractViolation("dsp_term_expectation: state dimension mismatch");
  }
  PauliString bare = term;
  bare.coeff = 1.0;

  TermExpectation out;
  const Matrix p_plus = projector(bare, +1);
  const Matrix p_minus = projector(bare, -1);
  out.p_plus = final_population(p_plus * rho_mid * p_plus, proto, cfg);
  out.p_minus = final_population(p_minus * rho_mid * p_minus, proto, cfg);
  out.numerator = out.p_plus - out.p_minus;
  return out;
}

Real dsp_denominator(const Matrix& rho_mid, const SimulationConfig& cfg) {
  const Protocol proto = second_half(cfg);
  const ModelParams p = model_params(cfg);
  if (rho_mid.rows() != p.dim() || rho_mid.cols() != p.dim()) {
    throw ContractViolation("dsp_denominator: state dimension mismatch");
  }
  const Real p0 = final_population(rho_mid, proto, cfg);
  if (p0 <= cfg.denominator_floor) {
    std::ostringstream msg;
    msg << "dsp_denominator: population " << p0 << " at or below the floor "
        << cfg.denominator_floor << " (ratio estimator degenerates)";
    throw DegenerateEstimatorError(msg.str(), p0);
  }
  return p0;
}

EnergyEstimate mitigated_energy(const SimulationConfig& cfg) {
  if (cfg.schedule == ScheduleKind::conventional) {
    throw ConfigError("mitigated_energy: requires a schedule with a "
                      "measurement time (not the conventional ramp)");
  }
  const Matrix rho_mid = forward_state(cfg);
  const Real p0 = dsp_denominator(rho_mid, cfg);  // fail fast when degenerate

  const std::vector<PauliString> terms = decompose_problem(model_params(cfg));
  std::vector<TermExpectation> branch(terms.size());
  parallel_for(terms.size(), [&](std::size_t i) {
    branch[i] = dsp_term_expectation(rho_mid, terms[i], cfg);
  });

  EnergyEstimate est;
  est.denominator = p0;
  est.per_term.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Real expectation = branch[i].numerator / p0;
    est.per_term.emplace_back(terms[i], expectation);
    est.value += terms[i].coeff * expectation;
  }
  return est;
}

EnergyEstimate conventional_energy(const SimulationConfig& cfg) {
  if (cfg.schedule != ScheduleKind::conventional) {
    throw ConfigError("conventional_energy: requires the conventional ramp");
  }
  const ModelParams p = model_params(cfg);
  const Schedule sched = make_schedule(cfg, cfg.t_anneal);
  const Vector plus = plus_state(p.n_sites);
  const Matrix rho0 = plus * plus.adjoint();
  const Matrix rho = propagate(rho0, sched, 0.0, sched.total_duration, p,
                               NoiseParams{cfg.lambda}, cfg.dt);

  EnergyEstimate est;
  for (const PauliString& term : decompose_problem(p)) {
    PauliString bare = term;
    bare.coeff = 1.0;
    const Real expectation = std::real((to_dense(bare, p.n_sites) * rho).trace());
    est.per_term.emplace_back(term, expectation);
    est.value += term.coeff * expectation;
  }
  return est;
}

EnergyEstimate sampled_energy(const SimulationConfig& cfg, long shots,
                              std::uint64_t seed) {
  if (shots < 1) throw ConfigError("sampled_energy: shots must be >= 1");
  if (cfg.schedule == ScheduleKind::conventional) {
    throw ConfigError("sampled_energy: requires a schedule with a "
                      "measurement time (not the conventional ramp)");
  }
  const Populations pops = exact_populations(cfg);
  const std::size_t n_terms = pops.terms.size();

  const Real p0_hat =
      binomial_frequency(pops.p0, shots, seed, 2 * n_terms);
  if (p0_hat <= 0.0) {
    throw DegenerateEstimatorError(
        "sampled_energy: sampled denominator is zero", 0.0);
  }

  EnergyEstimate est;
  est.sampled = true;
  est.shots = shots;
  est.seed = seed;
  est.denominator = p0_hat;
  est.per_term.reserve(n_terms);
  for (std::size_t i = 0; i < n_terms; ++i) {
    const Real plus_hat =
        binomial_frequency(pops.branch[i].p_plus, shots, seed, 2 * i);
    const Real minus_hat =
        binomial_frequency(pops.branch[i].p_minus, shots, seed, 2 * i + 1);
    const Real expectation = (plus_hat - minus_hat) / p0_hat;
    est.per_term.emplace_back(pops.terms[i], expectation);
    est.value += pops.terms[i].coeff * expectation;
  }
  return est;
}

}  // namespace emqa
