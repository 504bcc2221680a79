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

#include "esdlab/esd.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace esdlab {

namespace {

constexpr double kAsymptoticTol = 1e-12;
constexpr int kMaxBisectionIterations = 200;

void require_inputs(int d, double f0, double gamma_tilde, const char* where) {
  if (d < 2) {
    throw std::invalid_argument(std::string(where) +
                                ": local dimension must be >= 2, got " +
                                std::to_string(d));
  }
  if (!(f0 >= 0.0 && f0 <= 1.0)) {
    throw std::invalid_argument(std::string(where) + ": initial fidelity " +
                                std::to_string(f0) + " outside [0, 1]");
  }
  if (!(gamma_tilde >= 0.0 && gamma_tilde <= 1.0)) {
    throw std::invalid_argument(std::string(where) + ": decay factor " +
                                std::to_string(gamma_tilde) + " outside [0, 1]");
  }
}

double model_fidelity(int d, double f0, NoiseModel model, double gamma_tilde) {
  return model == NoiseModel::SimpleGroundDephasing
             ? fidelity_simple(d, f0, gamma_tilde).total
             : fidelity_full(d, f0, gamma_tilde);
}

}  // namespace

FidelityBreakdown fidelity_simple(int d, double f0, double gamma_tilde) {
  require_inputs(d, f0, gamma_tilde, "fidelity_simple");
  const IsotropicState s = isotropic_state(d, f0);
  const double coherence = s.zeta / d;
  const double doubled_diag = s.epsilon + coherence;

  FidelityBreakdown b;
  b.c1 = doubled_diag / d + coherence * gamma_tilde * (d - 1) / d;
  b.c2 = coherence * gamma_tilde / d + doubled_diag / d + coherence * (d - 2) / d;
  b.c3 = 0.0;
  b.n1 = 1;
  b.n2 = d - 1;
  const std::int64_t total_positions =
      static_cast<std::int64_t>(d) * d * d * d;
  b.n3 = total_positions - d;
  b.total = b.c1 * b.n1 + b.c2 * b.n2;  // c3 contributes nothing
  return b;
}

double fidelity_full(int d, double f0, double gamma_tilde) {
  require_inputs(d, f0, gamma_tilde, "fidelity_full");
  const IsotropicState s = isotropic_state(d, f0);
  return s.epsilon + s.zeta / d + s.zeta * gamma_tilde * (d - 1) / d;
}

double gap(int d, double f0, NoiseModel model, double gamma_tilde) {
  return model_fidelity(d, f0, model, gamma_tilde) - critical_fidelity(d);
}

double esd_time_analytic(int d, NoiseModel model, double effective_rate) {
  if (d <= 2) {
    throw std::domain_error(
        "esd_time_analytic: the F0 = 1/(d-1) family is singular at d <= 2 "
        "(got d = " + std::to_string(d) + ")");
  }
  if (!(effective_rate > 0.0)) {
    throw std::invalid_argument("esd_time_analytic: effective rate must be > 0");
  }
  const double dd = static_cast<double>(d);
  const double quad = dd * dd - dd + 1.0;
  const double arg = model == NoiseModel::SimpleGroundDephasing
                         ? 2.0 * quad / ((dd - 1.0) * (dd - 2.0))
                         : quad / (dd * (dd - 2.0));
  return 2.0 / effective_rate * std::log(arg);
}

EsdResult esd_time_numeric(int d, double f0, NoiseModel model,
                           NoiseScenario scenario, const NoiseParams& params,
                           double rel_tol) {
  require_inputs(d, f0, 1.0, "esd_time_numeric");
  if (!(rel_tol > 0.0)) {
    throw std::invalid_argument("esd_time_numeric: rel_tol must be > 0");
  }
  const double fc = critical_fidelity(d);
  const double rate = effective_rate(params, scenario);

  EsdResult result;
  result.gap_at_zero = model_fidelity(d, f0, model, 1.0) - fc;
  // With a zero effective rate the decay factor never moves off 1.
  const double gamma_limit = rate > 0.0 ? 0.0 : 1.0;
  result.f_infinity = model_fidelity(d, f0, model, gamma_limit);

  if (f0 <= fc) {
    result.status = EsdStatus::AlreadySeparable;
    return result;
  }
  if (std::abs(result.f_infinity - fc) <= kAsymptoticTol) {
    result.status = EsdStatus::AsymptoticOnly;
    return result;
  }
  if (result.f_infinity > fc) {
    result.status = EsdStatus::NeverSeparates;
    return result;
  }

  // Finite crossing: G(t) is strictly decreasing (γ̃ strictly decreasing and
  // the fidelity strictly increasing in γ̃ here), so bisection is safe.
  const auto gap_at = [&](double t) {
    return model_fidelity(d, f0, model, std::exp(-rate * t / 2.0)) - fc;
  };
  double lo = 0.0;
  double hi = 1.0;
  int expansions = 0;
  while (gap_at(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++expansions > kMaxBisectionIterations) {
      throw std::runtime_error("esd_time_numeric: bracket expansion failed at [" +
                               std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }
  int iterations = 0;
  while (hi - lo > rel_tol * hi) {
    if (++iterations > kMaxBisectionIterations) {
      std::ostringstream os;
      os << "esd_time_numeric: no convergence after " << kMaxBisectionIterations
         << " iterations; bracket [" << lo << ", " << hi << "]";
      throw std::runtime_error(os.str());
    }
    const double mid = 0.5 * (lo + hi);
    (gap_at(mid) > 0.0 ? lo : hi) = mid;
  }
  result.status = EsdStatus::FiniteDeath;
  result.death_time = 0.5 * (lo + hi);
  return result;
}

double esd_threshold(int d, NoiseModel model) {
  if (d < 3) {
    throw std::domain_error("esd_threshold: requires d >= 3, got " +
                            std::to_string(d));
  }
  if (model == NoiseModel::SimpleGroundDephasing) {
    // Solve F_inf(F0) = 1/d with F_inf = [d²(d−1)F0 + 2]/(d²(d+1)).
    return (d + 2.0) / (static_cast<double>(d) * d);
  }
  // Full model: F_inf = (1 + F0·d)/(d(d+1)) < 1/d for every F0 < 1.
  return 1.0;
}

}  // namespace esdlab
