// Copyright 2026 The esdlab authors
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

#include <iosfwd>
#include <string>
#include <vector>

#include "esdlab/esd.hpp"
#include "esdlab/verify.hpp"

namespace esdlab::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailure = 1,
  kConfigError = 2,
  kInternalError = 3,
};

enum class OutputFormat { Csv, Json };

struct OutputOptions {
  OutputFormat format = OutputFormat::Csv;
  bool meta = false;  ///< emit run metadata (config, version, timestamp)
};

/// herm/trace/kraus tolerance knob: CLI flag beats ESDLAB_TOL beats the
/// library default. Negative means "unset".
Tolerances resolve_tolerances(double flag_value);

struct EvolveConfig {
  int d = 3;
  double f0 = 0.5;
  bool f0_paper = false;  ///< use the one-parameter family F₀ = 1/(d−1)
  NoiseModel model = NoiseModel::FullIsotropicDephasing;
  NoiseScenario scenario = NoiseScenario::Both;
  NoiseParams rates = NoiseParams::equal(1.0);
  double t_max = 5.0;
  int t_steps = 101;
  bool cross_check = false;  ///< --verify: brute-force check of every row
  double tol = -1.0;
  OutputOptions output;
};

struct EsdConfig {
  int d = 3;
  double f0 = 0.5;
  bool f0_paper = false;
  NoiseModel model = NoiseModel::FullIsotropicDephasing;
  NoiseScenario scenario = NoiseScenario::Both;
  NoiseParams rates = NoiseParams::equal(1.0);
  double rel_tol = 1e-10;
  double tol = -1.0;
  OutputOptions output;
};

struct SweepConfig {
  std::vector<int> d_values;
  std::vector<double> f0_values;
  bool f0_paper = false;
  NoiseModel model = NoiseModel::SimpleGroundDephasing;
  NoiseScenario scenario = NoiseScenario::Both;
  NoiseParams rates = NoiseParams::equal(1.0);
  double rel_tol = 1e-10;
  double tol = -1.0;
  OutputOptions output;
};

struct VerifyConfig {
  VerifyOptions options;
};

/// Time-series emission; one row per uniform sample of [0, t_max]. Data goes
/// to `data`, warnings and errors to `diag`. Returns an ExitCode.
int run_evolve(const EvolveConfig& config, std::ostream& data, std::ostream& diag);

/// Single ESD query; always JSON.
int run_esd(const EsdConfig& config, std::ostream& data, std::ostream& diag);

/// One classification row per (d, F₀); rows that throw carry an error column
/// instead of aborting the sweep.
int run_sweep(const SweepConfig& config, std::ostream& data, std::ostream& diag);

/// Self-verification report: one line per suite plus a summary.
int run_verify(const VerifyConfig& config, std::ostream& out);

/// Locale-independent number formatting: 12 significant digits, '.' decimal
/// separator, no trailing zeros.
std::string format_number(double value);

std::string to_string(NoiseModel model);
std::string to_string(NoiseScenario scenario);
std::string to_string(EsdStatus status);

}  // namespace esdlab::cli
