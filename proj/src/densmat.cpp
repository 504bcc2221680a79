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

#include "esdlab/densmat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace esdlab {

namespace {

double max_abs_deviation_from_identity(const ComplexMatrix& m) {
  const Eigen::Index n = m.rows();
  return (m - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace

std::string DensityCheck::describe() const {
  if (ok()) return "all density-matrix invariants satisfied";
  std::ostringstream os;
  os << "density-matrix invariants violated:";
  if (!hermitian_ok) os << " hermiticity residual " << herm_residual << ";";
  if (!trace_ok) os << " trace residual " << trace_residual << ";";
  if (!psd_ok) os << " smallest eigenvalue " << min_eig << ";";
  return os.str();
}

DensityCheck check_density(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("check_density: matrix must be square, got " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
  }
  DensityCheck c;
  c.herm_residual = (m - m.adjoint()).cwiseAbs().maxCoeff();
  c.trace_residual = std::abs(m.trace() - Complex{1.0, 0.0});

  const ComplexMatrix herm_part = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm_part,
                                                      Eigen::EigenvaluesOnly);
  c.min_eig = solver.eigenvalues().minCoeff();

  c.hermitian_ok = c.herm_residual <= tol.herm;
  c.trace_ok = c.trace_residual <= tol.trace;
  c.psd_ok = c.min_eig >= -tol.psd;
  return c;
}

Complex DensityMatrix::at(Eigen::Index r, Eigen::Index c) const {
  if (r < 0 || c < 0 || r >= m_.rows() || c >= m_.cols()) {
    throw std::out_of_range("DensityMatrix::at(" + std::to_string(r) + ", " +
                            std::to_string(c) + ") out of range for dimension " +
                            std::to_string(m_.rows()));
  }
  return m_(r, c);
}

DensityMatrix validate_density(const ComplexMatrix& m, const Tolerances& tol) {
  const DensityCheck c = check_density(m, tol);
  if (!c.ok()) throw std::invalid_argument(c.describe());
  return DensityMatrix(m);
}

double min_eigenvalue(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("min_eigenvalue: matrix must be square");
  }
  const double herm_residual = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_residual > tol.herm) {
    throw std::invalid_argument("min_eigenvalue: input is not Hermitian (residual " +
                                std::to_string(herm_residual) + ")");
  }
  const ComplexMatrix herm_part = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm_part,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

MaxEntangled max_entangled(int d) {
  if (d < 2) {
    throw std::invalid_argument("max_entangled: local dimension must be >= 2, got " +
                                std::to_string(d));
  }
  MaxEntangled me;
  me.d = d;
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  me.vector = Eigen::VectorXcd::Zero(n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    me.vector(static_cast<Eigen::Index>(j) * (d + 1)) = Complex{amp, 0.0};
  }
  me.projector = me.vector * me.vector.adjoint();
  return me;
}

KrausCheck check_kraus(Eigen::Index dim_total, std::span<const ComplexMatrix> ops) {
  ComplexMatrix sum_adjoint_first = ComplexMatrix::Zero(dim_total, dim_total);
  ComplexMatrix sum_adjoint_last = ComplexMatrix::Zero(dim_total, dim_total);
  for (const ComplexMatrix& k : ops) {
    if (k.rows() != dim_total || k.cols() != dim_total) {
      throw std::invalid_argument("check_kraus: operator shape " +
                                  std::to_string(k.rows()) + "x" +
                                  std::to_string(k.cols()) +
                                  " does not match dimension " +
                                  std::to_string(dim_total));
    }
    sum_adjoint_first += k.adjoint() * k;
    sum_adjoint_last += k * k.adjoint();
  }
  KrausCheck c;
  c.completeness_residual = max_abs_deviation_from_identity(sum_adjoint_first);
  c.unital_residual = max_abs_deviation_from_identity(sum_adjoint_last);
  return c;
}

KrausSet::KrausSet(Eigen::Index dim_total, std::vector<ComplexMatrix> operators,
                   const Tolerances& tol)
    : dim_(dim_total), ops_(std::move(operators)) {
  if (ops_.empty()) throw std::invalid_argument("KrausSet: empty operator list");
  check_ = check_kraus(dim_, ops_);
  diagonal_ = std::all_of(ops_.begin(), ops_.end(), [](const ComplexMatrix& k) {
    ComplexMatrix off = k;
    off.diagonal().setZero();
    return off.cwiseAbs().maxCoeff() == 0.0;
  });
  if (check_.completeness_residual > tol.kraus) {
    throw std::invalid_argument("KrausSet: completeness residual " +
                                std::to_string(check_.completeness_residual) +
                                " exceeds tolerance");
  }
  if (diagonal_ && check_.unital_residual > tol.kraus) {
    throw std::invalid_argument("KrausSet: unital residual " +
                                std::to_string(check_.unital_residual) +
                                " exceeds tolerance for a diagonal set");
  }
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& ks,
                            KrausConvention convention, const Tolerances& tol) {
  if (rho.dim_total() != ks.dim_total()) {
    throw std::invalid_argument("apply_channel: state dimension " +
                                std::to_string(rho.dim_total()) +
                                " does not match operator dimension " +
                                std::to_string(ks.dim_total()));
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim_total(), rho.dim_total());
  for (const ComplexMatrix& k : ks.operators()) {
    if (convention == KrausConvention::AdjointFirst) {
      out += k.adjoint() * rho.matrix() * k;
    } else {
      out += k * rho.matrix() * k.adjoint();
    }
  }
  return validate_density(out, tol);
}

double fidelity_with_projector(const DensityMatrix& rho, const MaxEntangled& me,
                               const Tolerances& tol) {
  if (rho.dim_total() != me.projector.rows()) {
    throw std::invalid_argument("fidelity_with_projector: state dimension " +
                                std::to_string(rho.dim_total()) +
                                " does not match projector dimension " +
                                std::to_string(me.projector.rows()));
  }
  // tr(ρ·|ψ⟩⟨ψ|) = ⟨ψ|ρ|ψ⟩
  const Complex value = me.vector.adjoint() * rho.matrix() * me.vector;
  if (std::abs(value.imag()) > tol.herm) {
    throw std::invalid_argument("fidelity_with_projector: imaginary residual " +
                                std::to_string(value.imag()));
  }
  const double f = value.real();
  if (f < -tol.herm || f > 1.0 + tol.herm) {
    throw std::invalid_argument("fidelity_with_projector: value " +
                                std::to_string(f) + " outside [0, 1]");
  }
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace esdlab
