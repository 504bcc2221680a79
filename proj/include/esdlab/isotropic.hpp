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

#include "esdlab/densmat.hpp"

namespace esdlab {

/// Mixing weights of the isotropic family ρ = ε·I + ζ·P for local dimension d
/// and fidelity F = tr(ρP):
///
///   ε = (1 − F)/(d² − 1),   ζ = (Fd² − 1)/(d² − 1)
///
/// so that ε + ζ = F and d²ε + ζ = 1. ζ goes negative below the maximally
/// mixed point F = 1/d²; the state stays physical on all of F ∈ [0, 1] (its
/// spectrum is {ε, ε + ζ}).
struct IsotropicState {
  int d = 0;
  double fidelity = 0.0;
  double epsilon = 0.0;
  double zeta = 0.0;
};

IsotropicState isotropic_state(int d, double fidelity);

/// Materializes the isotropic state as a d²×d² density matrix: ε on the whole
/// diagonal plus ζ/d at every doubled-index pair (j(d+1), k(d+1)).
DensityMatrix make_isotropic(int d, double fidelity, const Tolerances& tol = {});

struct IsotropicFidelity {
  double fidelity = 0.0;
  /// max elementwise |ρ − make_isotropic(d, fidelity)|. A residual at rounding
  /// scale certifies the state really is isotropic, which is what licenses the
  /// entanglement formula below.
  double residual = 0.0;
};

IsotropicFidelity isotropic_fidelity(const DensityMatrix& rho, int d,
                                     const Tolerances& tol = {});

/// Separability threshold of the isotropic family: F_critical(d) = 1/d.
double critical_fidelity(int d);

/// True iff the isotropic state (d, F) is separable, i.e. F ≤ 1/d (boundary
/// included).
bool is_separable(int d, double fidelity);

enum class EofBranch {
  Separable,     ///< F ≤ 1/d
  MiddleBranch,  ///< F ∈ [1/d, 4(d−1)/d²]
  LinearBranch,  ///< F ∈ [4(d−1)/d², 1]
};

/// Intermediate quantities of the entanglement-of-formation closed form, all
/// logarithms base 2 (units: bits/ebits).
struct EofTerms {
  double xi = 0.0;      ///< (1/d)[√F + √((d−1)(1−F))]²
  double h2 = 0.0;      ///< binary entropy H₂(ξ)
  double r = 0.0;       ///< H₂(ξ) + (1−ξ)·log₂(d−1)
  EofBranch branch = EofBranch::Separable;
  double eof = 0.0;     ///< entanglement of formation, bits
};

/// Entanglement of formation of the isotropic state (d, F):
///
///   E_f = 0                                    for F ≤ 1/d,
///   E_f = H₂(ξ(F)) + (1−ξ(F))·log₂(d−1)        for F ∈ [1/d, 4(d−1)/d²],
///   E_f = d·log₂(d−1)/(d−2)·(F−1) + log₂ d     for F ∈ [4(d−1)/d², 1].
///
/// The closed form holds for d ≥ 3 only; d = 2 is rejected explicitly rather
/// than silently returning an inapplicable value. Adjacent branches agree at
/// the boundaries (asserted when F hits one exactly; the single log base is
/// what makes the upper boundary continuous).
EofTerms eof_isotropic(int d, double fidelity);

}  // namespace esdlab
