// Copyright 2026 The franfit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRANFIT_SPECIAL_FUNCTIONS_HPP_
#define FRANFIT_SPECIAL_FUNCTIONS_HPP_

namespace franfit::special {

/// Digamma function psi(x) for x > 0.
///
/// Shifts the argument up with psi(x) = psi(x + 1) - 1/x until x >= 10, then
/// applies the asymptotic series through the B8 Bernoulli term. Absolute error
/// is below 1e-12 over (0, inf).
double Digamma(double x);

/// Trigamma psi'(x) for x > 0, same shift-then-asymptotic scheme.
double Trigamma(double x);

/// log(x) - psi(x), evaluated without the cancellation the naive difference
/// suffers for large x. Strictly decreasing from +inf to 0.
double LogMinusDigamma(double x);

/// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0.
double GammaP(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed directly
/// so right-tail values keep full relative precision.
double GammaQ(double a, double x);

/// Standard normal CDF via erfc.
double NormalCdf(double z);
/// Standard normal upper tail 1 - Phi(z).
double NormalSf(double z);

/// Inverse standard normal CDF for p in (0, 1): rational initial
/// approximation followed by one Halley refinement against erfc.
double NormalQuantile(double p);

}  // namespace franfit::special

#endif  // FRANFIT_SPECIAL_FUNCTIONS_HPP_
