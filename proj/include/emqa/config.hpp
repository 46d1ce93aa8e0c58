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

#include <cstdint>
#include <optional>
#include <string>

#include "emqa/model.hpp"
#include "emqa/schedule.hpp"

namespace emqa {

// Anneal-time grid: start, start + step, ..., up to and including stop
// (within floating-point slack).
struct GridSpec {
  Real start = 0.5;
  Real stop = 30.0;
  Real step = 0.5;

  std::vector<Real> points() const;
};

// Complete run description.  Defaults reproduce the headline operating point:
// the XXZ ring at Delta = -1 with J = B = 1, dephasing-model strength
// lambda = 0.004, bridge duration T' = 5, and the mitigated schedule.
struct SimulationConfig {
  int n_sites = 3;
  Real j = 1.0;
  Real delta = -1.0;
  Real b = 1.0;
  Real lambda = 0.004;
  Real t_anneal = 5.0;   // T for single-point runs; sweeps use `grid`
  Real t_prime = 5.0;    // bridge duration of the mitigated schedule
  ScheduleKind schedule = ScheduleKind::emqa;
  GridSpec grid;
  Real dt = 1e-3;        // integrator step bound
  Real denominator_floor = 1e-6;
  std::optional<std::uint64_t> seed;  // required when `shots` is set
  std::optional<long> shots;          // absent => exact-expectation mode
};

// Parses a JSON config file.  Recognized keys:
//   N, J, delta, B, lambda, T, T_prime, schedule,
//   T_grid: {start, stop, step}, dt, denominator_floor, seed, shots.
// Unknown keys are rejected so typos fail loudly.  Missing keys keep their
// defaults.  Throws ConfigError on parse failure or a bad value.
SimulationConfig load_config(const std::string& path);

// Applies one `--key value` style override using the same key names as the
// JSON file (grid fields addressed as T_grid.start etc.).  Throws ConfigError
// for unknown keys or unparsable values.
void apply_override(SimulationConfig& cfg, const std::string& key,
                    const std::string& value);

// Range and consistency checks; throws ConfigError when violated.
void validate(const SimulationConfig& cfg);

// Model parameters implied by the config.
ModelParams model_params(const SimulationConfig& cfg);

// Builds the configured schedule family at anneal time t.
Schedule make_schedule(const SimulationConfig& cfg, Real t);

}  // namespace emqa
