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
// Parameter sweeps over the anneal time, minima extraction with optional
// golden-section refinement, and deterministic CSV/JSON serialization.

#pragma once

#include <string>
#include <vector>

#include "emqa/purify.hpp"

namespace emqa {

// One sweep point.  `estimate` and `relative_error` are NaN when the point
// is degenerate (denominator at or below the floor); such points are kept
// and flagged rather than dropped.  `wall_time_s` is diagnostic only and is
// never serialized, keeping emitted files byte-identical across reruns.
struct SweepRecord {
  ScheduleKind schedule = ScheduleKind::emqa;
  int n_sites = 0;
  Real lambda = 0.0;
  Real t_anneal = 0.0;
  Real estimate = 0.0;
  Real exact = 0.0;  // exact ground energy of H_P
  Real relative_error = 0.0;
  Real denominator = 0.0;
  bool degenerate = false;
  Real wall_time_s = 0.0;
};

// Result of a minimum search over one sweep.
struct MinimumResult {
  Real t_anneal = 0.0;
  Real estimate = 0.0;
  Real relative_error = 0.0;
};

// A minimum with its sweep's identity, for serialization.
struct MinimumRecord {
  ScheduleKind schedule = ScheduleKind::emqa;
  int n_sites = 0;
  Real lambda = 0.0;
  Real t_anneal = 0.0;
  Real estimate = 0.0;
  Real exact = 0.0;
  Real relative_error = 0.0;
};

enum class EmitFormat { csv, json };

// (estimate - exact) / |exact|.  Undefined (throws) for zero ground energy.
Real relative_error(Real estimate, Real exact);

// Dispatches one estimator evaluation at cfg.t_anneal: conventional_energy
// for the conventional ramp, otherwise sampled_energy when cfg.shots is set
// and mitigated_energy when it is not.  Finite-shot mode is undefined for
// the conventional ramp and is rejected.
EnergyEstimate estimate_point(const SimulationConfig& cfg);

// One record per grid anneal time, ascending.  Degenerate points are flagged;
// any other failure propagates.  Deterministic given cfg.
std::vector<SweepRecord> run_sweep(const SimulationConfig& cfg);

// Grid argmin of `estimate` over non-degenerate records (ties broken toward
// smaller anneal time).  With `refine`, a golden-section search between the
// argmin's two grid neighbours (tolerance 1e-3 in T) sharpens the minimum;
// refinement re-evaluates the estimator and therefore needs `cfg` (the same
// one the sweep ran with).  Degenerate probes count as +infinity.  Throws
// DegenerateEstimatorError when every record is degenerate, and
// ContractViolation on an empty or mixed-identity record list.
MinimumResult find_minimum(const std::vector<SweepRecord>& records, bool refine,
                           const SimulationConfig* cfg = nullptr);

// Serialization.  Floats carry 12 significant digits; NaN becomes "nan" in
// CSV and null in JSON; rows are sorted by (schedule, N, lambda, T).
std::string records_to_csv(std::vector<SweepRecord> records);
std::string minima_to_csv(std::vector<MinimumRecord> minima);
std::string to_json(std::vector<SweepRecord> records,
                    std::vector<MinimumRecord> minima);

// Writes records (and minima, when non-empty) to `path`.  CSV places minima
// in a sibling file with ".minima" inserted before the extension; JSON holds
// both arrays in one document.  I/O failures throw ConfigError with the path.
void emit(const std::vector<SweepRecord>& records,
          const std::vector<MinimumRecord>& minima, EmitFormat format,
          const std::string& path);

}  // namespace emqa
