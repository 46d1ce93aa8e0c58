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

#include "emqa/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include <json.hpp>

namespace emqa {

namespace {

using nlohmann::json;

Real as_real(const json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError("config: '" + key + "' must be a number");
  return j.get<Real>();
}

int as_int(const json& j, const std::string& key) {
  if (!j.is_number_integer()) {
    throw ConfigError("config: '" + key + "' must be an integer");
  }
  return j.get<int>();
}

template <typename T>
T parse_number(const std::string& value, const std::string& key) {
  try {
    std::size_t pos = 0;
    T out;
    if constexpr (std::is_same_v<T, Real>) {
      out = std::stod(value, &pos);
    } else if constexpr (std::is_same_v<T, std::uint64_t>) {
      out = std::stoull(value, &pos);
    } else {
      out = static_cast<T>(std::stoll(value, &pos));
    }
    if (pos != value.size()) throw std::invalid_argument("trailing junk");
    return out;
  } catch (const std::exception&) {
    throw ConfigError("config: cannot parse '" + value + "' for key '" + key + "'");
  }
}

}  // namespace

std::vector<Real> GridSpec::points() const {
  if (!(step > 0)) throw ConfigError("config: T_grid.step must be > 0");
  if (!(stop >= start)) throw ConfigError("config: T_grid.stop must be >= start");
  std::vector<Real> out;
  const long n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  out.reserve(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) out.push_back(start + k * step);
  return out;
}

SimulationConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config: JSON parse error in '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");

  static const std::set<std::string> known{
      "N", "J", "delta", "B", "lambda", "T", "T_prime", "schedule",
      "T_grid", "dt", "denominator_floor", "seed", "shots"};
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) {
      throw ConfigError("config: unknown key '" + item.key() + "'");
    }
  }

  SimulationConfig cfg;
  if (j.contains("N")) cfg.n_sites = as_int(j["N"], "N");
  if (j.contains("J")) cfg.j = as_real(j["J"], "J");
  if (j.contains("delta")) cfg.delta = as_real(j["delta"], "delta");
  if (j.contains("B")) cfg.b = as_real(j["B"], "B");
  if (j.contains("lambda")) cfg.lambda = as_real(j["lambda"], "lambda");
  if (j.contains("T")) cfg.t_anneal = as_real(j["T"], "T");
  if (j.contains("T_prime")) cfg.t_prime = as_real(j["T_prime"], "T_prime");
  if (j.contains("schedule")) {
    if (!j["schedule"].is_string()) {
      throw ConfigError("config: 'schedule' must be a string");
    }
    cfg.schedule = schedule_kind_from_string(j["schedule"].get<std::string>());
  }
  if (j.contains("T_grid")) {
    const json& g = j["T_grid"];
    if (!g.is_object()) throw ConfigError("config: 'T_grid' must be an object");
    for (const auto& item : g.items()) {
      if (item.key() != "start" && item.key() != "stop" && item.key() != "step") {
        throw ConfigError("config: unknown key 'T_grid." + item.key() + "'");
      }
    }
    if (g.contains("start")) cfg.grid.start = as_real(g["start"], "T_grid.start");
    if (g.contains("stop")) cfg.grid.stop = as_real(g["stop"], "T_grid.stop");
    if (g.contains("step")) cfg.grid.step = as_real(g["step"], "T_grid.step");
  }
  if (j.contains("dt")) cfg.dt = as_real(j["dt"], "dt");
  if (j.contains("denominator_floor")) {
    cfg.denominator_floor = as_real(j["denominator_floor"], "denominator_floor");
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
      throw ConfigError("config: 'seed' must be a non-negative integer");
    }
    const auto s = j["seed"].get<long long>();
    if (s < 0) throw ConfigError("config: 'seed' must be a non-negative integer");
    cfg.seed = static_cast<std::uint64_t>(s);
  }
  if (j.contains("shots")) {
    cfg.shots = static_cast<long>(as_int(j["shots"], "shots"));
  }
  return cfg;
}

void apply_override(SimulationConfig& cfg, const std::string& key,
                    const std::string& value) {
  if (key == "N") cfg.n_sites = parse_number<int>(value, key);
  else if (key == "J") cfg.j = parse_number<Real>(value, key);
  else if (key == "delta") cfg.delta = parse_number<Real>(value, key);
  else if (key == "B") cfg.b = parse_number<Real>(value, key);
  else if (key == "lambda") cfg.lambda = parse_number<Real>(value, key);
  else if (key == "T") cfg.t_anneal = parse_number<Real>(value, key);
  else if (key == "T_prime") cfg.t_prime = parse_number<Real>(value, key);
  else if (key == "schedule") cfg.schedule = schedule_kind_from_string(value);
  else if (key == "T_grid.start") cfg.grid.start = parse_number<Real>(value, key);
  else if (key == "T_grid.stop") cfg.grid.stop = parse_number<Real>(value, key);
  else if (key == "T_grid.step") cfg.grid.step = parse_number<Real>(value, key);
  else if (key == "dt") cfg.dt = parse_number<Real>(value, key);
  else if (key == "denominator_floor") {
    cfg.denominator_floor = parse_number<Real>(value, key);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(value, key);
  } else if (key == "shots") {
    cfg.shots = parse_number<long>(value, key);
  } else {
    throw ConfigError("config: unknown override key '" + key + "'");
  }
}

void validate(const SimulationConfig& cfg) {
  validate(model_params(cfg));  // n_sites, J, B ranges
  if (!(cfg.lambda >= 0)) throw ConfigError("config: lambda must be >= 0");
  if (!(cfg.t_anneal > 0)) throw ConfigError("config: T must be > 0");
  if (!(cfg.t_prime > 0)) throw ConfigError("config: T_prime must be > 0");
  if (!(cfg.dt > 0)) throw ConfigError("config: dt must be > 0");
  if (!(cfg.denominator_floor > 0)) {
    throw ConfigError("config: denominator_floor must be > 0");
  }
  (void)cfg.grid.points();  // range checks
  if (cfg.shots) {
    if (*cfg.shots <= 0) throw ConfigError("config: shots must be > 0");
    if (!cfg.seed) {
      throw ConfigError("config: sampled mode (shots set) requires a seed");
    }
  }
  if (!std::isfinite(cfg.j) || !std::isfinite(cfg.delta) || !std::isfinite(cfg.b) ||
      !std::isfinite(cfg.lambda) || !std::isfinite(cfg.t_anneal) ||
      !std::isfinite(cfg.t_prime) || !std::isfinite(cfg.dt)) {
    throw ConfigError("config: parameters must be finite");
  }
}

ModelParams model_params(const SimulationConfig& cfg) {
  ModelParams p;
  p.n_sites = cfg.n_sites;
  p.j = cfg.j;
  p.delta = cfg.delta;
  p.b = cfg.b;
  return p;
}

Schedule make_schedule(const SimulationConfig& cfg, Real t) {
  switch (cfg.schedule) {
    case ScheduleKind::conventional:
      return make_conventional(t);
    case ScheduleKind::rqa:
      return make_rqa(t);
    case ScheduleKind::emqa:
      return make_emqa(t, cfg.t_prime);
  }
  throw ConfigError("config: unhandled schedule kind");
}

}  // namespace emqa
