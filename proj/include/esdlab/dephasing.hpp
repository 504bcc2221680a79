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

#include <vector>

#include "esdlab/densmat.hpp"

namespace esdlab {

/// Dephasing rates of the two sides, in inverse time units. Both rates must
/// be finite and nonnegative; they need not be equal.
struct NoiseParams {
  double rate_a = 0.0;
  double rate_b = 0.0;

  static NoiseParams equal(double rate) { return NoiseParams{rate, rate}; }
};

/// Which subsystems the local noise acts on.
enum class NoiseScenario { AOnly, BOnly, Both };

/// The two noise models:
///  - SimpleGroundDephasing: each level k ≥ 1 dephases relative to the ground
///    level only; no dephasing between other basis states.
///  - FullIsotropicDephasing: dephasing between every pair of local basis
///    states, realized as an elementwise damping map.
enum class NoiseModel { SimpleGroundDephasing, FullIsotropicDephasing };

enum class Side { A, B };

/// Time-dependent decay scalars for one (t, rates, scenario) configuration:
/// γ_X(t) = e^{−Γ_X t/2} and ω_X = √(1−γ_X²) per side, plus the effective pair
/// γ̃ = γ_A, γ_B or γ_A·γ_B selected by the scenario, with Γ̃ = Γ_A, Γ_B or
/// Γ_A+Γ_B so that γ̃(t) = e^{−Γ̃t/2} always holds.
struct DephasingFactors {
  double gamma_a = 1.0;
  double gamma_b = 1.0;
  double omega_a = 0.0;
  double omega_b = 0.0;
  double gamma_tilde = 1.0;
  double effective_rate = 0.0;
};

DephasingFactors decay_factors(double t, const NoiseParams& params,
                               NoiseScenario scenario);

/// Γ̃ for the scenario: Γ_A, Γ_B, or Γ_A + Γ_B.
double effective_rate(const NoiseParams& params, NoiseScenario scenario);

/// Raw operator pair for one-sided ground-referenced dephasing, as d²×d²
/// diagonal matrices: diag(1, γ, …, γ) ⊗ I and diag(0, ω, …, ω) ⊗ I for side
/// A, mirrored for side B. Completeness holds exactly when ω² = 1 − γ².
std::vector<ComplexMatrix> simple_dephasing_ops(int d, Side side, double gamma,
                                                double omega);

/// Validated two-operator Kraus set for one side of the simple model.
KrausSet kraus_simple(int d, Side side, const DephasingFactors& factors,
                      const Tolerances& tol = {});

/// d×d single-side damping mask (1−γ)I + γJ (J = all ones). PSD for γ ∈ [0,1]
/// — it is the convex mix of the identity channel's mask and the complete
/// dephasing mask — which by the Schur-product theorem makes the elementwise
/// map below completely positive.
ComplexMatrix damping_matrix(int d, double gamma);

/// All-pairs dephasing as an elementwise (Schur) product: entry
/// ((a,b),(a′,b′)) is scaled by γ_A when a ≠ a′ (A side active) and by γ_B
/// when b ≠ b′ (B side active); populations are untouched. The per-side
/// damping masks are PSD-certified on every call.
DensityMatrix apply_full_dephasing(const DensityMatrix& rho, int d,
                                   const DephasingFactors& factors,
                                   NoiseScenario scenario,
                                   const Tolerances& tol = {});

/// Evolves rho0 to time t ≥ 0 in one step from the closed-form decay factors
/// (the models are exactly solvable; nothing is time-stepped). The simple
/// model composes the per-side operator-sum channels; the full model applies
/// the elementwise damping map.
DensityMatrix evolve(const DensityMatrix& rho0, int d, NoiseModel model,
                     NoiseScenario scenario, const NoiseParams& params, double t,
                     const Tolerances& tol = {});

/// Exact evolved matrix for an isotropic initial state, built directly from
/// the damping pattern: the simple model multiplies by γ̃ only the coherences
/// with the ground product state — positions (j(d+1), 0) and (0, k(d+1)) for
/// j,k ≥ 1 — while the full model multiplies every off-diagonal entry by γ̃.
DensityMatrix evolved_closed_form(int d, double f0, NoiseModel model,
                                  const DephasingFactors& factors,
                                  const Tolerances& tol = {});

}  // namespace esdlab
