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

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace esdlab {

using Complex = std::complex<double>;

/// Dense complex matrix; the representation behind states, projectors and
/// channel operators. Everything here is desk scale (d ≤ a few dozen), so
/// dense storage is used throughout even though the matrices are sparse.
using ComplexMatrix = Eigen::MatrixXcd;

/// Validation tolerances. The closed forms in this library are exact; the
/// residuals come only from floating-point eigensolves, hence the tight
/// defaults. PSD is checked via the smallest eigenvalue so diagnostics carry
/// a quantitative residual.
struct Tolerances {
  double herm = 1e-10;
  double trace = 1e-10;
  double kraus = 1e-10;
  double psd = 1e-9;

  /// One knob for all checks: herm/trace/kraus = t, psd = 10t (the default
  /// ratio). Used by the CLI's --tol flag and the ESDLAB_TOL variable.
  static Tolerances uniform(double t) { return Tolerances{t, t, t, 10.0 * t}; }
};

/// Measured residuals for the three density-matrix invariants.
struct DensityCheck {
  double herm_residual = 0.0;   ///< max |m(r,c) − conj(m(c,r))|
  double trace_residual = 0.0;  ///< |tr(m) − 1|
  double min_eig = 0.0;         ///< smallest eigenvalue of the Hermitian part
  bool hermitian_ok = false;
  bool trace_ok = false;
  bool psd_ok = false;

  bool ok() const { return hermitian_ok && trace_ok && psd_ok; }
  /// Human-readable list of every violated invariant with its residual.
  std::string describe() const;
};

/// Runs the invariant checks without throwing. Throws std::invalid_argument
/// only for a non-square input, for which no diagnostics are meaningful.
DensityCheck check_density(const ComplexMatrix& m, const Tolerances& tol = {});

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
/// Immutable after construction; safe to share across threads.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim_total() const { return m_.rows(); }

  /// Bounds-checked element access.
  Complex at(Eigen::Index r, Eigen::Index c) const;

 private:
  friend DensityMatrix validate_density(const ComplexMatrix&, const Tolerances&);
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// Validates and wraps a matrix; throws std::invalid_argument listing each
/// violated invariant with its measured residual.
DensityMatrix validate_density(const ComplexMatrix& m, const Tolerances& tol = {});

/// Smallest eigenvalue of a Hermitian matrix, via a selfadjoint eigensolver
/// on the Hermitian part. The input must be Hermitian within tol.herm.
double min_eigenvalue(const ComplexMatrix& m, const Tolerances& tol = {});

/// Maximally entangled pair state |Ψ⟩ = (1/√d) Σ_j |j⟩|j⟩ and its rank-one
/// projector. Composite indices are 0-based: level pair (a, b) sits at row
/// a·d + b, so |j⟩|j⟩ sits at j·(d+1). (In 1-based conventions that position
/// reads (j−1)d + j.)
struct MaxEntangled {
  int d = 0;
  Eigen::VectorXcd vector;   ///< d² amplitudes, 1/√d at the doubled indices
  ComplexMatrix projector;   ///< outer product, trace 1, idempotent
};

MaxEntangled max_entangled(int d);

/// Residuals of the two operator-sum conditions.
struct KrausCheck {
  double completeness_residual = 0.0;  ///< ‖Σ K†K − I‖_max
  double unital_residual = 0.0;        ///< ‖Σ K K† − I‖_max
};

KrausCheck check_kraus(Eigen::Index dim_total, std::span<const ComplexMatrix> ops);

/// A sequence of equal-shaped operators {K} defining one operator-sum channel.
/// Construction enforces Σ K†K = I (which makes the channel trace preserving
/// under ρ ↦ Σ KρK†); for diagonal sets — every dephasing set built in this
/// library is diagonal — Σ K K† = I is enforced as well, so those channels are
/// also unital. Note: the two conditions are sometimes named the other way
/// around in the literature; both residuals are always available.
class KrausSet {
 public:
  KrausSet(Eigen::Index dim_total, std::vector<ComplexMatrix> operators,
           const Tolerances& tol = {});

  Eigen::Index dim_total() const { return dim_; }
  const std::vector<ComplexMatrix>& operators() const { return ops_; }
  const KrausCheck& residuals() const { return check_; }
  bool diagonal() const { return diagonal_; }

 private:
  Eigen::Index dim_;
  std::vector<ComplexMatrix> ops_;
  KrausCheck check_;
  bool diagonal_;
};

enum class KrausConvention {
  AdjointFirst,  ///< Σ K† ρ K
  AdjointLast,   ///< Σ K ρ K†
};

/// Operator-sum application. Defaults to Σ K†ρK; the diagonal real sets built
/// here give identical results under either convention (asserted by the test
/// and verification suites). Output is re-validated.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& ks,
                            KrausConvention convention = KrausConvention::AdjointFirst,
                            const Tolerances& tol = {});

/// Re(tr(ρ·P)) for the maximally entangled projector P, clamped to [0, 1].
/// Errors if the imaginary residual exceeds tol.herm or the value falls
/// outside [−tol.herm, 1 + tol.herm].
double fidelity_with_projector(const DensityMatrix& rho, const MaxEntangled& me,
                               const Tolerances& tol = {});

}  // namespace esdlab
