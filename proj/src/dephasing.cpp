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

#include "esdlab/dephasing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "esdlab/isotropic.hpp"

namespace esdlab {

namespace {

constexpr double kDampingPsdTol = 1e-12;

void require_rates(const NoiseParams& params) {
  if (!(std::isfinite(params.rate_a) && params.rate_a >= 0.0) ||
      !(std::isfinite(params.rate_b) && params.rate_b >= 0.0)) {
    throw std::invalid_argument("noise rates must be finite and nonnegative");
  }
}

// Complete positivity certificate for the elementwise map: the single-side
// mask must be PSD (Schur-product theorem).
void certify_damping_psd(int d, double gamma) {
  const ComplexMatrix mask = damping_matrix(d, gamma);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mask, Eigen::EigenvaluesOnly);
  const double lambda_min = solver.eigenvalues().minCoeff();
  if (lambda_min < -kDampingPsdTol) {
    throw std::logic_error("damping mask lost positivity: min eigenvalue " +
                           std::to_string(lambda_min));
  }
}

}  // namespace

double effective_rate(const NoiseParams& params, NoiseScenario scenario) {
  require_rates(params);
  switch (scenario) {
    case NoiseScenario::AOnly: return params.rate_a;
    case NoiseScenario::BOnly: return params.rate_b;
    case NoiseScenario::Both: return params.rate_a + params.rate_b;
  }
  throw std::logic_error("effective_rate: unknown scenario");
}

DephasingFactors decay_factors(double t, const NoiseParams& params,
                               NoiseScenario scenario) {
  if (!(t >= 0.0)) {
    throw std::invalid_argument("decay_factors: time must be >= 0, got " +
                                std::to_string(t));
  }
  require_rates(params);
  DephasingFactors f;
  f.gamma_a = std::exp(-params.rate_a * t / 2.0);
  f.gamma_b = std::exp(-params.rate_b * t / 2.0);
  f.omega_a = std::sqrt(1.0 - f.gamma_a * f.gamma_a);
  f.omega_b = std::sqrt(1.0 - f.gamma_b * f.gamma_b);
  f.effective_rate = effective_rate(params, scenario);
  switch (scenario) {
    case NoiseScenario::AOnly: f.gamma_tilde = f.gamma_a; break;
    case NoiseScenario::BOnly: f.gamma_tilde = f.gamma_b; break;
    case NoiseScenario::Both: f.gamma_tilde = f.gamma_a * f.gamma_b; break;
  }
  return f;
}

std::vector<ComplexMatrix> simple_dephasing_ops(int d, Side side, double gamma,
                                                double omega) {
  if (d < 2) {
    throw std::invalid_argument("simple_dephasing_ops: local dimension must be >= 2");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  ComplexMatrix keep = ComplexMatrix::Zero(n, n);
  ComplexMatrix leak = ComplexMatrix::Zero(n, n);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const Eigen::Index idx = static_cast<Eigen::Index>(a) * d + b;
      const int level = (side == Side::A) ? a : b;
      keep(idx, idx) = (level == 0) ? 1.0 : gamma;
      leak(idx, idx) = (level == 0) ? 0.0 : omega;
    }
  }
  return {std::move(keep), std::move(leak)};
}

KrausSet kraus_simple(int d, Side side, const DephasingFactors& factors,
                      const Tolerances& tol) {
  const double gamma = (side == Side::A) ? factors.gamma_a : factors.gamma_b;
  const double omega = (side == Side::A) ? factors.omega_a : factors.omega_b;
  return KrausSet(static_cast<Eigen::Index>(d) * d,
                  simple_dephasing_ops(d, side, gamma, omega), tol);
}

ComplexMatrix damping_matrix(int d, double gamma) {
  if (d < 2) {
    throw std::invalid_argument("damping_matrix: local dimension must be >= 2");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("damping_matrix: gamma " + std::to_string(gamma) +
                                " outside [0, 1]");
  }
  ComplexMatrix mask = ComplexMatrix::Constant(d, d, Complex{gamma, 0.0});
  mask.diagonal().setConstant(Complex{1.0, 0.0});
  return mask;
}

DensityMatrix apply_full_dephasing(const DensityMatrix& rho, int d,
                                   const DephasingFactors& factors,
                                   NoiseScenario scenario, const Tolerances& tol) {
  if (rho.dim_total() != static_cast<Eigen::Index>(d) * d) {
    throw std::invalid_argument("apply_full_dephasing: state dimension " +
                                std::to_string(rho.dim_total()) +
                                " does not match d^2 = " + std::to_string(d * d));
  }
  const bool act_a = scenario != NoiseScenario::BOnly;
  const bool act_b = scenario != NoiseScenario::AOnly;
  if (act_a) certify_damping_psd(d, factors.gamma_a);
  if (act_b) certify_damping_psd(d, factors.gamma_b);

  ComplexMatrix out = rho.matrix();
  const Eigen::Index n = out.rows();
  for (Eigen::Index r = 0; r < n; ++r) {
    const int a = static_cast<int>(r / d);
    const int b = static_cast<int>(r % d);
    for (Eigen::Index c = 0; c < n; ++c) {
      const int ap = static_cast<int>(c / d);
      const int bp = static_cast<int>(c % d);
      double factor = 1.0;
      if (act_a && a != ap) factor *= factors.gamma_a;
      if (act_b && b != bp) factor *= factors.gamma_b;
      if (factor != 1.0) out(r, c) *= factor;
    }
  }
  return validate_density(out, tol);
}

DensityMatrix evolve(const DensityMatrix& rho0, int d, NoiseModel model,
                     NoiseScenario scenario, const NoiseParams& params, double t,
                     const Tolerances& tol) {
  if (rho0.dim_total() != static_cast<Eigen::Index>(d) * d) {
    throw std::invalid_argument("evolve: state dimension " +
                                std::to_string(rho0.dim_total()) +
                                " does not match d^2 = " + std::to_string(d * d));
  }
  const DephasingFactors factors = decay_factors(t, params, scenario);
  if (model == NoiseModel::FullIsotropicDephasing) {
    return apply_full_dephasing(rho0, d, factors, scenario, tol);
  }
  DensityMatrix rho = rho0;
  if (scenario != NoiseScenario::BOnly) {
    rho = apply_channel(rho, kraus_simple(d, Side::A, factors, tol),
                        KrausConvention::AdjointFirst, tol);
  }
  if (scenario != NoiseScenario::AOnly) {
    rho = apply_channel(rho, kraus_simple(d, Side::B, factors, tol),
                        KrausConvention::AdjointFirst, tol);
  }
  return rho;
}

DensityMatrix evolved_closed_form(int d, double f0, NoiseModel model,
                                  const DephasingFactors& factors,
                                  const Tolerances& tol) {
  ComplexMatrix m = make_isotropic(d, f0, tol).matrix();
  const double gt = factors.gamma_tilde;
  if (model == NoiseModel::SimpleGroundDephasing) {
    // Only the coherences with the ground product state decay.
    for (int j = 1; j < d; ++j) {
      const Eigen::Index doubled = static_cast<Eigen::Index>(j) * (d + 1);
      m(doubled, 0) *= gt;
      m(0, doubled) *= gt;
    }
  } else {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (r != c) m(r, c) *= gt;
      }
    }
  }
  return validate_density(m, tol);
}

}  // namespace esdlab
