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
// Dual-state-purification estimator, realized at protocol level:
//   1. prepare |+>^N and propagate to the schedule's measurement time,
//   2. project the mid-anneal state with P± = (1 ± sigma)/2 per Pauli term,
//   3. propagate each sub-normalized branch through the second half,
//   4. read the |+>^N population, giving branch populations p~± and the
//      shared unprojected population p0,
//   5. combine: <sigma> = (p~+ - p~-) / p0 and <H_P> = sum_i c_i <sigma_i>.
// A finite-shot mode replaces each population by a binomial frequency drawn
// from a deterministic per-population substream.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "emqa/config.hpp"
#include "emqa/pauli.hpp"

namespace emqa {

// One estimator output.  `per_term` pairs each problem-Hamiltonian term
// (coefficient included) with its bare-Pauli expectation, so that
// value == sum of coefficient * expectation by construction.
struct EnergyEstimate {
  Real value = 0.0;
  Real denominator = 1.0;  // p0; always 1 for the conventional estimator
  std::vector<std::pair<PauliString, Real>> per_term;
  bool sampled = false;
  long shots = 0;          // meaningful only when sampled
  std::uint64_t seed = 0;  // meaningful only when sampled
};

// Populations attached to one Pauli term.
struct TermExpectation {
  Real numerator = 0.0;  // p_plus - p_minus
  Real p_plus = 0.0;
  Real p_minus = 0.0;
};

// Propagates |+><+|^N from t = 0 to the schedule's measurement time under
// cfg (anneal time cfg.t_anneal).  Throws ConfigError when the configured
// schedule has no measurement time (the conventional ramp).
Matrix forward_state(const SimulationConfig& cfg);

// Projected-branch populations for one term: propagates P+ rho P+ and
// P- rho P- independently through [measurement_time, total_duration] and
// reads the |+>^N population of each.  The term's coefficient is ignored
// (bare Pauli).  Roundoff-negative populations are clamped at zero.
TermExpectation dsp_term_expectation(const Matrix& rho_mid,
                                     const PauliString& term,
                                     const SimulationConfig& cfg);

// Shared unprojected population p0: propagates rho_mid itself through the
// second half and reads the |+>^N population.  Throws
// DegenerateEstimatorError when the result is <= cfg.denominator_floor
// (the ratio estimator's variance diverges there).
Real dsp_denominator(const Matrix& rho_mid, const SimulationConfig& cfg);

// Full estimator: one forward propagation, one denominator propagation
// (checked first, so a degenerate point fails before the per-term work),
// then two projected propagations per term, parallelized across terms.
// Requires a schedule with a measurement time.
EnergyEstimate mitigated_energy(const SimulationConfig& cfg);

// Unmitigated reference: Tr[H_P rho(T)] from a single propagation over the
// conventional ramp; per-term expectations are direct traces and the
// denominator is 1.  Requires cfg.schedule == conventional.
EnergyEstimate conventional_energy(const SimulationConfig& cfg);

// Finite-shot emulation of the same protocol: every population (each p~±
// and p0) is replaced by binomial(shots, p)/shots drawn from a substream
// derived deterministically from (seed, population index), so results are
// reproducible and independent of evaluation order.  Term i uses indices
// 2i (plus) and 2i+1 (minus); p0 uses 6N.  Throws DegenerateEstimatorError
// when the sampled p0 is zero.
EnergyEstimate sampled_energy(const SimulationConfig& cfg, long shots,
                              std::uint64_t seed);

}  // namespace emqa
