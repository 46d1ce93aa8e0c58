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

#include "emqa/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <tuple>

namespace emqa {

namespace {

constexpr Real kNan = std::numeric_limits<Real>::quiet_NaN();

std::string fmt_real(Real v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string json_real(Real v) {
  if (std::isnan(v)) return "null";
  return fmt_real(v);
}

auto sort_key(const SweepRecord& r) {
  return std::make_tuple(to_string(r.schedule), r.n_sites, r.lambda, r.t_anneal);
}

auto sort_key(const MinimumRecord& r) {
  return std::make_tuple(to_string(r.schedule), r.n_sites, r.lambda, r.t_anneal);
}

template <typename T>
void sort_rows(std::vector<T>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const T& a, const T& b) {
    return sort_key(a) < sort_key(b);
  });
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("emit: cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw ConfigError("emit: write failure on '" + path + "'");
}

std::string minima_sibling(const std::string& path) {
  const std::size_t slash = path.find_last_of('/');
  const std::size_t dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + ".minima";
  }
  return path.substr(0, dot) + ".minima" + path.substr(dot);
}

struct GoldenBest {
  Real t = 0.0;
  Real value = std::numeric_limits<Real>::infinity();
};

}  // namespace

Real relative_error(Real estimate, Real exact) {
  if (std::abs(exact) < 1e-300) {
    throw ContractViolation("relative_error: undefined for zero ground energy");
  }
  return (estimate - exact) / std::abs(exact);
}

EnergyEstimate estimate_point(const SimulationConfig& cfg) {
  if (cfg.schedule == ScheduleKind::conventional) {
    if (cfg.shots) {
      throw ConfigError("estimate_point: finite-shot mode needs a schedule "
                        "with a measurement time (not the conventional ramp)");
    }
    return conventional_energy(cfg);
  }
  if (cfg.shots) {
    if (!cfg.seed) throw ConfigError("estimate_point: sampled mode requires a seed");
    return sampled_energy(cfg, *cfg.shots, *cfg.seed);
  }
  return mitigated_energy(cfg);
}

std::vector<SweepRecord> run_sweep(const SimulationConfig& cfg) {
  validate(cfg);
  const GroundInfo ground = exact_ground_energy(model_params(cfg));

  std::vector<SweepRecord> out;
  for (Real t : cfg.grid.points()) {
    SimulationConfig point = cfg;
    point.t_anneal = t;

    SweepRecord rec;
    rec.schedule = cfg.schedule;
    rec.n_sites = cfg.n_sites;
    rec.lambda = cfg.lambda;
    rec.t_anneal = t;
    rec.exact = ground.energy;
    rec.estimate = kNan;
    rec.relative_error = kNan;
    rec.denominator = kNan;

    const auto start = std::chrono::steady_clock::now();
    try {
      const EnergyEstimate est = estimate_point(point);
      rec.estimate = est.value;
      rec.denominator = est.denominator;
      rec.relative_error = relative_error(est.value, ground.energy);
    } catch (const DegenerateEstimatorError& e) {
      rec.degenerate = true;
      rec.denominator = e.denominator();
    }
    rec.wall_time_s =
        std::chrono::duration<Real>(std::chrono::steady_clock::now() - start)
            .count();
    out.push_back(rec);
  }
  return out;
}

MinimumResult find_minimum(const std::vector<SweepRecord>& records, bool refine,
                           const SimulationConfig* cfg) {
  if (records.empty()) {
    throw ContractViolation("find_minimum: empty record list");
  }
  for (const SweepRecord& r : records) {
    if (r.schedule != records.front().schedule ||
        r.n_sites != records.front().n_sites ||
        r.lambda != records.front().lambda) {
      throw ContractViolation(
          "find_minimum: records mix schedules, sizes, or noise strengths");
    }
  }
  std::vector<std::size_t> order(records.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return records[a].t_anneal < records[b].t_anneal;
  });

  std::size_t best = records.size();  // position within `order`
  for (std::size_t k = 0; k < order.size(); ++k) {
    const SweepRecord& r = records[order[k]];
    if (r.degenerate) continue;
    if (best == records.size() || r.estimate < records[order[best]].estimate) {
      best = k;
    }
  }
  if (best == records.size()) {
    throw DegenerateEstimatorError(
        "find_minimum: every grid point is degenerate", 0.0);
  }

  const SweepRecord& grid_min = records[order[best]];
  MinimumResult result{grid_min.t_anneal, grid_min.estimate,
                       grid_min.relative_error};
  if (!refine || records.size() < 2) return result;
  if (cfg == nullptr) {
    throw ContractViolation("find_minimum: refinement needs the sweep config");
  }

  const Real lo =
      (best > 0) ? records[order[best - 1]].t_anneal : grid_min.t_anneal;
  const Real hi = (best + 1 < order.size()) ? records[order[best + 1]].t_anneal
                                            : grid_min.t_anneal;
  constexpr Real kTolT = 1e-3;
  if (hi - lo <= kTolT) return result;

  auto eval = [&](Real t) -> Real {
    SimulationConfig probe = *cfg;
    probe.t_anneal = t;
    try {
      return estimate_point(probe).value;
    } catch (const DegenerateEstimatorError&) {
      return std::numeric_limits<Real>::infinity();
    }
  };

  const Real invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  Real a = lo, b = hi;
  Real x1 = b - invphi * (b - a);
  Real x2 = a + invphi * (b - a);
  Real f1 = eval(x1);
  Real f2 = eval(x2);
  GoldenBest probe_best;
  auto track = [&](Real t, Real v) {
    if (v < probe_best.value) probe_best = GoldenBest{t, v};
  };
  track(x1, f1);
  track(x2, f2);
  while (b - a > kTolT) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = eval(x1);
      track(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = eval(x2);
      track(x2, f2);
    }
  }

  if (probe_best.value < result.estimate) {
    result.t_anneal = probe_best.t;
    result.estimate = probe_best.value;
    result.relative_error = relative_error(probe_best.value, grid_min.exact);
  }
  return result;
}

std::string records_to_csv(std::vector<SweepRecord> records) {
  sort_rows(records);
  std::string out =
      "schedule,N,lambda,T,estimate,exact,relative_error,denominator,degenerate\n";
  for (const SweepRecord& r : records) {
    out += to_string(r.schedule);
    out += ',' + std::to_string(r.n_sites);
    out += ',' + fmt_real(r.lambda);
    out += ',' + fmt_real(r.t_anneal);
    out += ',' + fmt_real(r.estimate);
    out += ',' + fmt_real(r.exact);
    out += ',' + fmt_real(r.relative_error);
    out += ',' + fmt_real(r.denominator);
    out += ',';
    out += (r.degenerate ? '1' : '0');
    out += '\n';
  }
  return out;
}

std::string minima_to_csv(std::vector<MinimumRecord> minima) {
  sort_rows(minima);
  std::string out = "schedule,N,lambda,T,estimate,exact,relative_error\n";
  for (const MinimumRecord& m : minima) {
    out += to_string(m.schedule);
    out += ',' + std::to_string(m.n_sites);
    out += ',' + fmt_real(m.lambda);
    out += ',' + fmt_real(m.t_anneal);
    out += ',' + fmt_real(m.estimate);
    out += ',' + fmt_real(m.exact);
    out += ',' + fmt_real(m.relative_error);
    out += '\n';
  }
  return out;
}

std::string to_json(std::vector<SweepRecord> records,
                    std::vector<MinimumRecord> minima) {
  sort_rows(records);
  sort_rows(minima);
  std::string out = "{\n  \"records\": [";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const SweepRecord& r = records[i];
    out += (i == 0) ? "\n" : ",\n";
    out += "    {\"schedule\": \"" + to_string(r.schedule) + "\"";
    out += ", \"N\": " + std::to_string(r.n_sites);
    out += ", \"lambda\": " + json_real(r.lambda);
    out += ", \"T\": " + json_real(r.t_anneal);
    out += ", \"estimate\": " + json_real(r.estimate);
    out += ", \"exact\": " + json_real(r.exact);
    out += ", \"relative_error\": " + json_real(r.relative_error);
    out += ", \"denominator\": " + json_real(r.denominator);
    out += std::string(", \"degenerate\": ") + (r.degenerate ? "true" : "false");
    out += "}";
  }
  out += records.empty() ? "],\n" : "\n  ],\n";
  out += "  \"minima\": [";
  for (std::size_t i = 0; i < minima.size(); ++i) {
    const MinimumRecord& m = minima[i];
    out += (i == 0) ? "\n" : ",\n";
    out += "    {\"schedule\": \"" + to_string(m.schedule) + "\"";
    out += ", \"N\": " + std::to_string(m.n_sites);
    out += ", \"lambda\": " + json_real(m.lambda);
    out += ", \"T\": " + json_real(m.t_anneal);
    out += ", \"estimate\": " + json_real(m.estimate);
    out += ", \"exact\": " + json_real(m.exact);
    out += ", \"relative_error\": " + json_real(m.relative_error);
    out += "}";
  }
  out += minima.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

void emit(const std::vector<SweepRecord>& records,
          const std::vector<MinimumRecord>& minima, EmitFormat format,
          const std::string& path) {
  if (format == EmitFormat::json) {
    write_file(path, to_json(records, minima));
    return;
  }
  write_file(path, records_to_csv(records));
  if (!minima.empty()) {
    write_file(minima_sibling(path), minima_to_csv(minima));
  }
}

}  // namespace emqa
