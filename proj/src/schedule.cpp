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

#include "emqa/schedule.hpp"

namespace emqa {

std::string to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::conventional:
      return "conventional";
    case ScheduleKind::rqa:
      return "rqa";
    case ScheduleKind::emqa:
      return "emqa";
  }
  throw ContractViolation("to_string: unknown schedule kind");
}

ScheduleKind schedule_kind_from_string(const std::string& name) {
  if (name == "conventional") return ScheduleKind::conventional;
  if (name == "rqa") return ScheduleKind::rqa;
  if (name == "emqa") return ScheduleKind::emqa;
  throw ConfigError("unknown schedule kind '" + name +
                    "' (expected conventional, rqa, or emqa)");
}

namespace {

void require_positive(Real value, const char* what) {
  if (!(value > 0)) {
    throw ConfigError(std::string("schedule: ") + what + " must be > 0");
  }
}

}  // namespace

Schedule make_conventional(Real t_anneal) {
  require_positive(t_anneal, "T");
  Schedule s;
  s.kind = ScheduleKind::conventional;
  s.segments = {{0.0, t_anneal, 0.0, 1.0, 1.0, 0.0}};
  s.total_duration = t_anneal;
  s.measurement_time = std::nullopt;
  return s;
}

Schedule make_rqa(Real t_anneal) {
  require_positive(t_anneal, "T");
  const Real T = t_anneal;
  Schedule s;
  s.kind = ScheduleKind::rqa;
  s.segments = {
      {0.0, T, 0.0, 1.0, 1.0, 0.0},
      {T, 2 * T, 1.0, 0.0, 0.0, 1.0},
  };
  s.total_duration = 2 * T;
  s.measurement_time = T;
  return s;
}

Schedule make_emqa(Real t_anneal, Real t_prime) {
  require_positive(t_anneal, "T");
  require_positive(t_prime, "T'");
  const Real T = t_anneal;
  const Real Tp = t_prime;
  Schedule s;
  s.kind = ScheduleKind::emqa;
  s.segments = {
      {0.0, T, 0.0, 1.0, 1.0, 0.0},
      {T, T + Tp, 1.0, -1.0, 0.0, 0.0},
      {T + Tp, 2 * T + Tp, -1.0, 0.0, 0.0, -1.0},
  };
  s.total_duration = 2 * T + Tp;
  // A crosses zero at the midpoint of the bridge segment; the Hamiltonian
  // vanishes at the measurement instant.
  s.measurement_time = T + Tp / 2;
  return s;
}

AB evaluate(const Schedule& sched, Real t) {
  if (sched.segments.empty()) {
    throw ContractViolation("evaluate: schedule has no segments");
  }
  if (t < sched.segments.front().t0 || t > sched.total_duration) {
    throw ContractViolation("evaluate: t outside [0, total_duration]");
  }
  // A boundary instant belongs to the later segment; the final instant
  // belongs to the last one.
  for (std::size_t k = 0; k < sched.segments.size(); ++k) {
    const Segment& seg = sched.segments[k];
    const bool last = (k + 1 == sched.segments.size());
    if (t < seg.t1 || (last && t <= seg.t1)) {
      const Real w = (t - seg.t0) / (seg.t1 - seg.t0);
      return {seg.a0 + w * (seg.a1 - seg.a0), seg.b0 + w * (seg.b1 - seg.b0)};
    }
  }
  throw ContractViolation("evaluate: segments do not cover t");
}

}  // namespace emqa
