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

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace emqa {

using Real = double;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Error taxonomy.  The CLI maps these onto process exit codes:
//   ConfigError / ContractViolation -> 2, IntegrationError -> 3,
//   DegenerateEstimatorError -> 4, VerificationError -> 5.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration or CLI input.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// A function precondition was violated (caller bug rather than bad run input).
class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& msg) : Error(msg) {}
};

// The integrator left its certified regime (trace drift, unitarity loss, ...).
class IntegrationError : public Error {
 public:
  explicit IntegrationError(const std::string& msg) : Error(msg) {}
};

// The purification denominator fell below the configured floor; the ratio
// estimator has diverging variance there and its value is not reported.
class DegenerateEstimatorError : public Error {
 public:
  DegenerateEstimatorError(const std::string& msg, double denominator)
      : Error(msg), denominator_(denominator) {}
  double denominator() const { return denominator_; }

 private:
  double denominator_;
};

// A property check requested by the user (verify subcommand) failed.
class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& msg) : Error(msg) {}
};

}  // namespace emqa
