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
// Command-line front end.  Subcommands:
//   sweep     one anneal-time sweep for a single configuration
//   table     the full schedule x size x noise minima matrix
//   analytic  single-qubit closed-form curves as CSV
//   verify    property checks (inverse-map distances, estimator equivalence)
// Configuration comes from an optional JSON file plus `--key value` overrides
// using the same key names.  Results go to files; logs go to stderr.
// Exit codes: 0 ok, 2 bad configuration, 3 integration failure,
// 4 estimator degenerate for the whole run, 5 verification failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emqa/analytic.hpp"
#include "emqa/evolve.hpp"
#include "emqa/experiment.hpp"
#include "emqa/purify.hpp"

namespace {

using namespace emqa;

// Applies the `--key value` / `--key=value` extras a subcommand collected.
void apply_extras(SimulationConfig& cfg, const std::vector<std::string>& extras) {
  std::size_t i = 0;
  while (i < extras.size()) {
    std::string token = extras[i];
    if (token.rfind("--", 0) != 0) {
      throw ConfigError("unexpected argument '" + token +
                        "' (overrides look like --key value)");
    }
    token = token.substr(2);
    const std::size_t eq = token.find('=');
    if (eq != std::string::npos) {
      apply_override(cfg, token.substr(0, eq), token.substr(eq + 1));
      ++i;
    } else {
      if (i + 1 >= extras.size()) {
        throw ConfigError("override '--" + token + "' is missing a value");
      }
      apply_override(cfg, token, extras[i + 1]);
      i += 2;
    }
  }
}

SimulationConfig assemble_config(const std::string& config_path,
                                 const std::vector<std::string>& extras) {
  SimulationConfig cfg;
  if (!config_path.empty()) cfg = load_config(config_path);
  apply_extras(cfg, extras);
  validate(cfg);
  return cfg;
}

std::string fmt_real(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

EmitFormat parse_format(const std::string& name) {
  return name == "json" ? EmitFormat::json : EmitFormat::csv;
}

MinimumRecord make_minimum_record(const SimulationConfig& cfg, Real exact,
                                  const MinimumResult& m) {
  MinimumRecord rec;
  rec.schedule = cfg.schedule;
  rec.n_sites = cfg.n_sites;
  rec.lambda = cfg.lambda;
  rec.t_anneal = m.t_anneal;
  rec.estimate = m.estimate;
  rec.exact = exact;
  rec.relative_error = m.relative_error;
  return rec;
}

int run_sweep_cmd(const std::string& config_path,
                  const std::vector<std::string>& extras, bool refine,
                  const std::string& out, const std::string& format) {
  const SimulationConfig cfg = assemble_config(config_path, extras);
  std::cerr << "sweep: schedule=" << to_string(cfg.schedule)
            << " N=" << cfg.n_sites << " lambda=" << fmt_real(cfg.lambda)
            << " grid=[" << fmt_real(cfg.grid.start) << ":"
            << fmt_real(cfg.grid.step) << ":" << fmt_real(cfg.grid.stop)
            << "] dt=" << fmt_real(cfg.dt) << "\n";
  const std::vector<SweepRecord> records = run_sweep(cfg);
  const MinimumResult m = find_minimum(records, refine, &cfg);
  std::cerr << "sweep: minimum T=" << fmt_real(m.t_anneal)
            << " estimate=" << fmt_real(m.estimate)
            << " relative_error=" << fmt_real(m.relative_error) << "\n";
  emit(records, {make_minimum_record(cfg, records.front().exact, m)},
       parse_format(format), out);
  std::cerr << "sweep: wrote " << records.size() << " records to " << out
            << "\n";
  return 0;
}

int run_table_cmd(const std::string& config_path,
                  const std::vector<std::string>& extras, bool refine,
                  const std::string& out, const std::string& format) {
  SimulationConfig base;
  base.dt = 0.02;  // table default; override with --dt for tighter stepping
  if (!config_path.empty()) base = load_config(config_path);
  apply_extras(base, extras);

  std::vector<SweepRecord> all_records;
  std::vector<MinimumRecord> all_minima;
  for (ScheduleKind kind : {ScheduleKind::conventional, ScheduleKind::rqa,
                            ScheduleKind::emqa}) {
    for (int n = 3; n <= 6; ++n) {
      for (Real lambda : {0.0, 0.004}) {
        SimulationConfig cfg = base;
        cfg.schedule = kind;
        cfg.n_sites = n;
        cfg.lambda = lambda;
        validate(cfg);
        const auto start = std::chrono::steady_clock::now();
        const std::vector<SweepRecord> records = run_sweep(cfg);
        all_records.insert(all_records.end(), records.begin(), records.end());
        try {
          const MinimumResult m = find_minimum(records, refine, &cfg);
          all_minima.push_back(
              make_minimum_record(cfg, records.front().exact, m));
          const Real secs = std::chrono::duration<Real>(
                                std::chrono::steady_clock::now() - start)
                                .count();
          std::cerr << "table: " << to_string(kind) << " N=" << n
                    << " lambda=" << fmt_real(lambda)
                    << " minimum=" << fmt_real(m.estimate) << " at T="
                    << fmt_real(m.t_anneal) << " (" << fmt_real(secs)
                    << " s)\n";
        } catch (const DegenerateEstimatorError& e) {
          std::cerr << "table: " << to_string(kind) << " N=" << n
                    << " lambda=" << fmt_real(lambda)
                    << " has no usable minimum: " << e.what() << "\n";
        }
      }
    }
  }
  emit(all_records, all_minima, parse_format(format), out);
  std::cerr << "table: wrote " << all_records.size() << " records to " << out
            << "\n";
  return 0;
}

int run_analytic_cmd(Real tmax, Real step, const std::string& out) {
  if (!(step > 0) || !(tmax >= 0)) {
    throw ConfigError("analytic: need tmax >= 0 and step > 0");
  }
  std::string csv = "T,transition_rate,T2P2,lambda_min,lambda_min_via_rate\n";
  const long n = static_cast<long>(std::floor(tmax / step + 1e-9));
  for (long k = 0; k <= n; ++k) {
    const Real t = k * step;
    const Real p = transition_rate(t);
    csv += fmt_real(t);
    csv += ',' + fmt_real(p);
    csv += ',' + fmt_real(t * t * p * p);
    csv += ',' + fmt_real(lambda_min(t));
    csv += ',' + fmt_real(lambda_min_via_rate(t));
    csv += '\n';
  }
  std::ofstream file(out, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("analytic: cannot open '" + out + "'");
  file << csv;
  std::cerr << "analytic: wrote " << (n + 1) << " rows to " << out << "\n";
  return 0;
}

struct CheckOutcome {
  bool ok;
  std::string line;
};

int run_verify_cmd(Real dt) {
  std::vector<CheckOutcome> checks;
  auto add = [&](bool ok, const std::string& what) {
    checks.push_back({ok, std::string(ok ? "[PASS] " : "[FAIL] ") + what});
  };

  // Inverse-map distances: the mitigated schedule's second half inverts its
  // first half; the plain retrace does not.
  for (int n : {1, 2, 3}) {
    ModelParams p;
    p.n_sites = n;
    for (Real t : {1.0, 5.0, 20.0}) {
      const Real d = verify_inverse_map(make_emqa(t, 5.0), p, dt);
      add(d <= 1e-5, "emqa inverse map N=" + std::to_string(n) +
                         " T=" + fmt_real(t) + ": distance=" + fmt_real(d) +
                         " (<= 1e-5)");
    }
  }
  {
    ModelParams p;
    p.n_sites = 1;
    const Real d = verify_inverse_map(make_rqa(1.0), p, dt);
    add(d > 1e-2, "rqa retrace is not an inverse at N=1 T=1: distance=" +
                      fmt_real(d) + " (> 1e-2)");
  }

  // Protocol-level populations against the matrix-level route built from the
  // channel superoperator and its adjoint.
  for (int n : {1, 2, 3}) {
    for (Real lambda : {0.0, 0.004}) {
      for (ScheduleKind kind : {ScheduleKind::rqa, ScheduleKind::emqa}) {
        SimulationConfig cfg;
        cfg.n_sites = n;
        cfg.lambda = lambda;
        cfg.schedule = kind;
        cfg.t_anneal = 5.0;
        cfg.dt = dt;
        const ModelParams p = model_params(cfg);
        const Schedule sched = make_schedule(cfg, cfg.t_anneal);
        const Real t_mid = *sched.measurement_time;

        const Matrix rho = forward_state(cfg);
        const Superoperator s = channel_superoperator(
            sched, t_mid, sched.total_duration, p, NoiseParams{lambda}, dt);
        const Vector plus = plus_state(n);
        const Matrix rhobar =
            apply_dual_channel(s, Matrix(plus * plus.adjoint()));
        const Matrix sym = rho * rhobar + rhobar * rho;

        const Real p0_protocol = dsp_denominator(rho, cfg);
        const Real p0_matrix = std::real((rhobar * rho).trace());
        Real worst = std::abs(p0_protocol - p0_matrix);
        for (const PauliString& term : decompose_problem(p)) {
          PauliString bare = term;
          bare.coeff = 1.0;
          const TermExpectation te = dsp_term_expectation(rho, bare, cfg);
          const Real num_matrix =
              0.5 * std::real((to_dense(bare, n) * sym).trace());
          worst = std::max(worst, std::abs(te.numerator - num_matrix));
        }
        add(worst <= 1e-6,
            "protocol vs matrix route " + to_string(kind) + " N=" +
                std::to_string(n) + " lambda=" + fmt_real(lambda) +
                ": max mismatch=" + fmt_real(worst) + " (<= 1e-6)");
      }
    }
  }

  bool all_ok = true;
  for (const CheckOutcome& c : checks) {
    std::cout << c.line << "\n";
    all_ok = all_ok && c.ok;
  }
  if (!all_ok) throw VerificationError("verify: at least one check failed");
  std::cerr << "verify: " << checks.size() << " checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-annealing decoherence simulator with "
               "purification-based error mitigation"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out;
  std::string format = "csv";
  bool refine = true;

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Run one anneal-time sweep and report its minimum");
  sweep->allow_extras();
  sweep->add_option("--config", config_path, "JSON configuration file");
  sweep->add_option("--out", out, "output path")->capture_default_str();
  sweep->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_flag("--refine,!--no-refine", refine,
                  "golden-section refinement of the grid minimum");

  CLI::App* table = app.add_subcommand(
      "table", "Run the schedule x N x lambda minima matrix (expect tens of "
               "minutes single-threaded at the default --dt 0.02)");
  table->allow_extras();
  table->add_option("--config", config_path, "JSON configuration file");
  table->add_option("--out", out, "output path")->capture_default_str();
  table->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--refine,!--no-refine", refine,
                  "golden-section refinement of the grid minima");

  Real tmax = 10.0;
  Real step = 0.01;
  CLI::App* analytic = app.add_subcommand(
      "analytic", "Emit single-qubit closed-form curves as CSV");
  analytic->add_option("--tmax", tmax, "largest anneal time")
      ->capture_default_str();
  analytic->add_option("--step", step, "grid step")->capture_default_str();
  analytic->add_option("--out", out, "output path")->capture_default_str();

  Real verify_dt = 0.01;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run property checks and exit 5 on any failure");
  verify->add_option("--dt", verify_dt, "integrator step for the checks")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (sweep->parsed()) {
      if (out.empty()) out = "sweep." + format;
      return run_sweep_cmd(config_path, sweep->remaining(), refine, out,
                           format);
    }
    if (table->parsed()) {
      if (out.empty()) out = "table." + format;
      return run_table_cmd(config_path, table->remaining(), refine, out,
                           format);
    }
    if (analytic->parsed()) {
      if (out.empty()) out = "analytic.csv";
      return run_analytic_cmd(tmax, step, out);
    }
    if (verify->parsed()) {
      return run_verify_cmd(verify_dt);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 2;
  } catch (const IntegrationError& e) {
    std::cerr << "integration error: " << e.what() << "\n";
    return 3;
  } catch (const DegenerateEstimatorError& e) {
    std::cerr << "estimator degenerate: " << e.what() << "\n";
    return 4;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
