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

#include "esdlab/isotropic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace esdlab {

namespace {

constexpr double kBranchAgreementTol = 1e-12;

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// ξ(F) = (1/d)[√F + √((d−1)(1−F))]². Analytically ≤ 1 with the maximum at
// F = 1/d; clamped against rounding spill.
double xi_weight(int d, double f) {
  const double s = std::sqrt(f) + std::sqrt((d - 1) * (1.0 - f));
  return std::min(s * s / d, 1.0);
}

double linear_branch(int d, double f) {
  const double log_dm1 = std::log2(static_cast<double>(d - 1));
  return d * log_dm1 / (d - 2) * (f - 1.0) + std::log2(static_cast<double>(d));
}

void require_fidelity_range(double f, const char* where) {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw std::invalid_argument(std::string(where) + ": fidelity " +
                                std::to_string(f) + " outside [0, 1]");
  }
}

}  // namespace

IsotropicState isotropic_state(int d, double fidelity) {
  if (d < 2) {
    throw std::invalid_argument("isotropic_state: local dimension must be >= 2, got " +
                                std::to_string(d));
  }
  require_fidelity_range(fidelity, "isotropic_state");
  IsotropicState s;
  s.d = d;
  s.fidelity = fidelity;
  const double denom = static_cast<double>(d) * d - 1.0;
  s.epsilon = (1.0 - fidelity) / denom;
  s.zeta = (fidelity * d * d - 1.0) / denom;
  return s;
}

DensityMatrix make_isotropic(int d, double fidelity, const Tolerances& tol) {
  const IsotropicState s = isotropic_state(d, fidelity);
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m.diagonal().setConstant(Complex{s.epsilon, 0.0});
  const double off = s.zeta / d;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      m(static_cast<Eigen::Index>(j) * (d + 1),
        static_cast<Eigen::Index>(k) * (d + 1)) += Complex{off, 0.0};
    }
  }
  return validate_density(m, tol);
}

IsotropicFidelity isotropic_fidelity(const DensityMatrix& rho, int d,
                                     const Tolerances& tol) {
  if (rho.dim_total() != static_cast<Eigen::Index>(d) * d) {
    throw std::invalid_argument("isotropic_fidelity: state dimension " +
                                std::to_string(rho.dim_total()) +
                                " does not match d^2 = " + std::to_string(d * d));
  }
  IsotropicFidelity result;
  result.fidelity = fidelity_with_projector(rho, max_entangled(d), tol);
  const DensityMatrix reference = make_isotropic(d, result.fidelity, tol);
  result.residual = (rho.matrix() - reference.matrix()).cwiseAbs().maxCoeff();
  return result;
}

double critical_fidelity(int d) {
  if (d < 2) {
    throw std::invalid_argument("critical_fidelity: local dimension must be >= 2");
  }
  return 1.0 / d;
}

bool is_separable(int d, double fidelity) {
  require_fidelity_range(fidelity, "is_separable");
  return fidelity <= critical_fidelity(d);
}

EofTerms eof_isotropic(int d, double fidelity) {
  if (d < 3) {
    throw std::domain_error(
        "eof_isotropic: the closed form holds for d >= 3 only (d = 2 is "
        "rejected rather than silently misapplied), got d = " + std::to_string(d));
  }
  require_fidelity_range(fidelity, "eof_isotropic");

  const double fc = 1.0 / d;
  const double upper = 4.0 * (d - 1) / (static_cast<double>(d) * d);

  EofTerms terms;
  terms.xi = xi_weight(d, fidelity);
  terms.h2 = binary_entropy(terms.xi);
  terms.r = terms.h2 + (1.0 - terms.xi) * std::log2(static_cast<double>(d - 1));

  if (fidelity <= fc) {
    terms.branch = EofBranch::Separable;
    terms.eof = 0.0;
    if (fidelity == fc && std::abs(terms.r) > kBranchAgreementTol) {
      throw std::logic_error("eof_isotropic: branch mismatch at F = 1/d");
    }
  } else if (fidelity < upper) {
    terms.branch = EofBranch::MiddleBranch;
    terms.eof = terms.r;
  } else {
    terms.branch = EofBranch::LinearBranch;
    terms.eof = linear_branch(d, fidelity);
    if (fidelity == upper &&
        std::abs(terms.eof - terms.r) > kBranchAgreementTol) {
      throw std::logic_error("eof_isotropic: branch mismatch at F = 4(d-1)/d^2");
    }
  }
  return terms;
}

}  // namespace esdlab
