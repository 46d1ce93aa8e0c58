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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "emqa/experiment.hpp"

using namespace emqa;

namespace {

constexpr Real kNan = std::numeric_limits<Real>::quiet_NaN();

SweepRecord make_record(Real t, Real estimate, bool degenerate = false) {
  SweepRecord r;
  r.schedule = ScheduleKind::emqa;
  r.n_sites = 2;
  r.lambda = 0.004;
  r.t_anneal = t;
  r.exact = -2.0;
  if (degenerate) {
    r.estimate = kNan;
    r.relative_error = kNan;
    r.denominator = 1e-7;
    r.degenerate = true;
  } else {
    r.estimate = estimate;
    r.relative_error = relative_error(estimate, r.exact);
    r.denominator = 0.5;
  }
  return r;
}

SimulationConfig sweep_cfg(ScheduleKind kind, Real start, Real stop,
                           Real step) {
  SimulationConfig cfg;
  cfg.schedule = kind;
  cfg.n_sites = 2;
  cfg.lambda = 0.004;
  cfg.t_prime = 5.0;
  cfg.dt = 0.02;
  cfg.grid.start = start;
  cfg.grid.stop = stop;
  cfg.grid.step = step;
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

TEST_CASE("relative error") {
  CHECK(relative_error(-2.5, -2.0) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(relative_error(-1.5, -2.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(relative_error(3.0, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(relative_error(1.0, 0.0), ContractViolation);
}

TEST_CASE("estimator dispatch") {
  SimulationConfig cfg = sweep_cfg(ScheduleKind::emqa, 5.0, 5.0, 1.0);
  cfg.t_anneal = 5.0;

  const EnergyEstimate exact = estimate_point(cfg);
  CHECK_FALSE(exact.sampled);

  cfg.shots = 500;
  CHECK_THROWS_AS(estimate_point(cfg), ConfigError);  // shots without seed
  cfg.seed = 7;
  const EnergyEstimate sampled = estimate_point(cfg);
  CHECK(sampled.sampled);
  CHECK(sampled.shots == 500);
  CHECK(sampled.seed == 7);

  SimulationConfig conv = cfg;
  conv.schedule = ScheduleKind::conventional;
  CHECK_THROWS_AS(estimate_point(conv), ConfigError);  // sampled conventional
  conv.shots.reset();
  conv.seed.reset();
  const EnergyEstimate plain = estimate_point(conv);
  CHECK(plain.denominator == 1.0);
}

TEST_CASE("sweep over a conventional ramp") {
  SimulationConfig cfg = sweep_cfg(ScheduleKind::conventional, 1.0, 3.0, 1.0);
  cfg.lambda = 0.0;
  cfg.dt = 0.01;
  const std::vector<SweepRecord> records = run_sweep(cfg);

  REQUIRE(records.size() == 3);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const SweepRecord& r = records[i];
    CHECK(r.schedule == ScheduleKind::conventional);
    CHECK(r.n_sites == 2);
    CHECK(r.lambda == 0.0);
    CHECK(r.t_anneal == doctest::Approx(1.0 + i).epsilon(1e-12));
    CHECK(r.exact == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(r.denominator == 1.0);
    CHECK_FALSE(r.degenerate);
    CHECK(r.relative_error ==
          doctest::Approx(relative_error(r.estimate, r.exact))
              .epsilon(1e-12));
  }
  // Longer anneals help on this noiseless ramp.
  CHECK(records[2].estimate < records[0].estimate);
}

TEST_CASE("sweep over the symmetrized schedule is deterministic") {
  const SimulationConfig cfg = sweep_cfg(ScheduleKind::emqa, 2.0, 5.0, 1.0);
  const std::vector<SweepRecord> a = run_sweep(cfg);
  const std::vector<SweepRecord> b = run_sweep(cfg);

  REQUIRE(a.size() == 4);
  for (const SweepRecord& r : a) {
    CHECK_FALSE(r.degenerate);
    CHECK(r.denominator > 0.0);
    CHECK(r.denominator <= 1.0);
    CHECK(std::isfinite(r.estimate));
  }
  CHECK(records_to_csv(a) == records_to_csv(b));
}

TEST_CASE("grid minimum extraction") {
  SUBCASE("plain argmin") {
    const std::vector<SweepRecord> recs = {
        make_record(1.0, -1.0), make_record(2.0, -3.0), make_record(3.0, -2.0)};
    const MinimumResult m = find_minimum(recs, false);
    CHECK(m.t_anneal == 2.0);
    CHECK(m.estimate == -3.0);
  }

  SUBCASE("ties break toward the smaller anneal time") {
    const std::vector<SweepRecord> recs = {make_record(2.0, -3.0),
                                           make_record(1.0, -3.0)};
    CHECK(find_minimum(recs, false).t_anneal == 1.0);
  }

  SUBCASE("degenerate points are skipped") {
    const std::vector<SweepRecord> recs = {make_record(1.0, 0.0, true),
                                           make_record(2.0, -2.0),
                                           make_record(3.0, -1.0)};
    CHECK(find_minimum(recs, false).t_anneal == 2.0);
  }

  SUBCASE("all-degenerate sweeps fail loudly") {
    const std::vector<SweepRecord> recs = {make_record(1.0, 0.0, true),
                                           make_record(2.0, 0.0, true)};
    CHECK_THROWS_AS(find_minimum(recs, false), DegenerateEstimatorError);
  }

  SUBCASE("empty and inconsistent inputs are rejected") {
    CHECK_THROWS_AS(find_minimum({}, false), ContractViolation);
    std::vector<SweepRecord> recs = {make_record(1.0, -1.0),
                                     make_record(2.0, -2.0)};
    recs[1].n_sites = 3;
    CHECK_THROWS_AS(find_minimum(recs, false), ContractViolation);
  }

  SUBCASE("single record is its own minimum") {
    const std::vector<SweepRecord> recs = {make_record(4.0, -1.5)};
    const MinimumResult m = find_minimum(recs, true);
    CHECK(m.t_anneal == 4.0);
    CHECK(m.estimate == -1.5);
  }

  SUBCASE("refinement needs the sweep configuration") {
    const std::vector<SweepRecord> recs = {make_record(1.0, -1.0),
                                           make_record(2.0, -2.0)};
    CHECK_THROWS_AS(find_minimum(recs, true, nullptr), ContractViolation);
  }
}

TEST_CASE("refinement sharpens a real minimum") {
  const SimulationConfig cfg = sweep_cfg(ScheduleKind::emqa, 3.0, 7.0, 2.0);
  const std::vector<SweepRecord> records = run_sweep(cfg);
  const MinimumResult coarse = find_minimum(records, false);
  const MinimumResult fine = find_minimum(records, true, &cfg);

  CHECK(fine.estimate <= coarse.estimate);
  // The refined minimum stays inside the bracket around the grid argmin.
  CHECK(fine.t_anneal >= coarse.t_anneal - 2.0 - 1e-9);
  CHECK(fine.t_anneal <= coarse.t_anneal + 2.0 + 1e-9);
  CHECK(fine.relative_error ==
        doctest::Approx(relative_error(fine.estimate, records[0].exact))
            .epsilon(1e-12));
}

TEST_CASE("records serialize to sorted, round-trippable CSV") {
  std::vector<SweepRecord> recs = {make_record(2.0, -1.25),
                                   make_record(1.0, -3.0625),
                                   make_record(3.0, 0.0, true)};
  recs.push_back(recs[0]);
  recs[3].schedule = ScheduleKind::conventional;
  recs[3].t_anneal = 9.0;

  const std::string csv = records_to_csv(recs);
  std::stringstream ss(csv);
  std::string line;
  REQUIRE(std::getline(ss, line));
  CHECK(line ==
        "schedule,N,lambda,T,estimate,exact,relative_error,denominator,"
        "degenerate");

  std::vector<std::vector<std::string>> rows;
  while (std::getline(ss, line)) rows.push_back(split_csv_line(line));
  REQUIRE(rows.size() == 4);

  // Sorted by schedule name first, then anneal time.
  CHECK(rows[0][0] == "conventional");
  CHECK(rows[1][3] == "1");
  CHECK(rows[2][3] == "2");
  CHECK(rows[3][3] == "3");

  // Values survive the 12-digit formatting.
  CHECK(std::stod(rows[1][4]) == doctest::Approx(-3.0625).epsilon(1e-12));
  CHECK(std::stod(rows[1][6]) ==
        doctest::Approx(relative_error(-3.0625, -2.0)).epsilon(1e-12));

  // Degenerate row: NaN fields spelled out, flag set.
  CHECK(rows[3][4] == "nan");
  CHECK(rows[3][6] == "nan");
  CHECK(rows[3][8] == "1");
  CHECK(rows[1][8] == "0");
}

TEST_CASE("minima CSV header") {
  MinimumRecord m;
  m.schedule = ScheduleKind::rqa;
  m.n_sites = 3;
  m.lambda = 0.004;
  m.t_anneal = 3.5;
  m.estimate = -3.4;
  m.exact = -3.0;
  m.relative_error = relative_error(-3.4, -3.0);
  const std::string csv = minima_to_csv({m});
  std::stringstream ss(csv);
  std::string line;
  REQUIRE(std::getline(ss, line));
  CHECK(line == "schedule,N,lambda,T,estimate,exact,relative_error");
  REQUIRE(std::getline(ss, line));
  CHECK(split_csv_line(line)[0] == "rqa");
}

TEST_CASE("JSON document parses back with nulls for NaN") {
  const std::vector<SweepRecord> recs = {make_record(1.0, -3.0625),
                                         make_record(2.0, 0.0, true)};
  MinimumRecord m;
  m.schedule = ScheduleKind::emqa;
  m.n_sites = 2;
  m.lambda = 0.004;
  m.t_anneal = 1.0;
  m.estimate = -3.0625;
  m.exact = -2.0;
  m.relative_error = relative_error(-3.0625, -2.0);

  const nlohmann::json doc = nlohmann::json::parse(to_json(recs, {m}));
  REQUIRE(doc.at("records").size() == 2);
  REQUIRE(doc.at("minima").size() == 1);

  const auto& r0 = doc.at("records").at(0);
  CHECK(r0.at("schedule") == "emqa");
  CHECK(r0.at("N") == 2);
  CHECK(r0.at("estimate").get<double>() ==
        doctest::Approx(-3.0625).epsilon(1e-12));
  CHECK_FALSE(r0.at("degenerate").get<bool>());

  const auto& r1 = doc.at("records").at(1);
  CHECK(r1.at("estimate").is_null());
  CHECK(r1.at("relative_error").is_null());
  CHECK(r1.at("degenerate").get<bool>());

  CHECK(doc.at("minima").at(0).at("T").get<double>() == 1.0);

  // Empty arrays still form a valid document.
  const nlohmann::json empty = nlohmann::json::parse(to_json({}, {}));
  CHECK(empty.at("records").empty());
  CHECK(empty.at("minima").empty());
}

TEST_CASE("emit writes the requested files") {
  namespace fs = std::filesystem;
  const std::vector<SweepRecord> recs = {make_record(1.0, -1.0),
                                         make_record(2.0, -2.0)};
  MinimumRecord m;
  m.schedule = ScheduleKind::emqa;
  m.n_sites = 2;
  m.lambda = 0.004;
  m.t_anneal = 2.0;
  m.estimate = -2.0;
  m.exact = -2.0;
  m.relative_error = 0.0;

  SUBCASE("csv plus sibling minima file") {
    const std::string path = "emit_scratch.csv";
    const std::string sibling = "emit_scratch.minima.csv";
    fs::remove(path);
    fs::remove(sibling);
    emit(recs, {m}, EmitFormat::csv, path);
    CHECK(read_file(path) == records_to_csv(recs));
    CHECK(read_file(sibling) == minima_to_csv({m}));
    fs::remove(path);
    fs::remove(sibling);
  }

  SUBCASE("csv without minima writes no sibling") {
    const std::string path = "emit_scratch2.csv";
    const std::string sibling = "emit_scratch2.minima.csv";
    fs::remove(path);
    fs::remove(sibling);
    emit(recs, {}, EmitFormat::csv, path);
    CHECK(fs::exists(path));
    CHECK_FALSE(fs::exists(sibling));
    fs::remove(path);
  }

  SUBCASE("json holds both arrays in one document") {
    const std::string path = "emit_scratch.json";
    fs::remove(path);
    emit(recs, {m}, EmitFormat::json, path);
    CHECK(read_file(path) == to_json(recs, {m}));
    fs::remove(path);
  }

  SUBCASE("unwritable paths are reported") {
    CHECK_THROWS_AS(
        emit(recs, {m}, EmitFormat::csv, "/nonexistent_dir_870/out.csv"),
        ConfigError);
  }
}
