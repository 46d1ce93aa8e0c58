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

#include <optional>
#include <string>
#include <vector>

#include "emqa/types.hpp"

namespace emqa {

enum class ScheduleKind { conventional, rqa, emqa };

std::string to_string(ScheduleKind kind);
ScheduleKind schedule_kind_from_string(const std::string& name);

// One affine piece of the annealing envelopes: A and B interpolate linearly
// between their endpoint values on [t0, t1].
struct Segment {
  Real t0, t1;
  Real a0, a1;
  Real b0, b1;
};

// Piecewise-linear envelopes A(t), B(t) for H(t) = A * H_problem + B * H_driver,
// with contiguous segments covering [0, total_duration].  measurement_time is
// set only for schedules with a mid-protocol projective measurement.
struct Schedule {
  ScheduleKind kind;
  std::vector<Segment> segments;
  Real total_duration;
  std::optional<Real> measurement_time;
};

// Single ramp A: 0 -> 1, B: 1 -> 0 over [0, T].  No measurement time.
Schedule make_conventional(Real t_anneal);

// Forward ramp retraced backwards over [0, 2T]: A: 0 -> 1 -> 0 and
// B: 1 -> 0 -> 1, with the measurement at t = T.  The envelopes are mirror
// symmetric about T without a sign flip, so the second half is generally not
// the inverse of the first.
Schedule make_rqa(Real t_anneal);

// Three segments over [0, 2T + T']: forward ramp, pure-problem bridge with A
// crossing zero at the measurement time T + T'/2, and a ramp finishing at
// (A, B) = (0, -1).  The second half mirrors the first with an overall sign
// flip of H, which makes it the exact inverse of the first half at zero noise.
Schedule make_emqa(Real t_anneal, Real t_prime);

struct AB {
  Real a, b;
};

// Envelope values at time t in [0, total_duration]; a boundary instant is
// owned by the later segment.  Throws ContractViolation outside the domain.
AB evaluate(const Schedule& sched, Real t);

}  // namespace emqa
