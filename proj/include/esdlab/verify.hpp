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

#include <string>
#include <vector>

namespace esdlab {

/// Outcome of one self-verification suite.
struct SuiteResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;  ///< parameters of the worst case
};

struct VerifyOptions {
  /// Upper bound of the d grid for the matrix-level suites (the closed-form
  /// suites use their own fixed desk-scale grids).
  int dmax = 6;
  /// Test hook: computes ω as √(1+γ²) instead of √(1−γ²), a sign error under
  /// the radical that the completeness suite must catch.
  bool inject_omega_sign_error = false;
};

/// Runs the full invariant suite at desk scale: operator-sum completeness,
/// channel physicality, closed-form/brute-force equivalence, damping-mask
/// positivity, adjoint-order agreement, entanglement branch continuity,
/// analytic-vs-numeric death times, scenario composition, and the simple
/// model's damping pattern. Every suite reports its maximum residual.
std::vector<SuiteResult> run_verification(const VerifyOptions& options = {});

}  // namespace esdlab
