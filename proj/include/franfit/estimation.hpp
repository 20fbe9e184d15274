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

// Maximum-likelihood estimation for each distribution family.
//
// LogNormal is closed form. Weibull (plain and left-truncated) and Gamma reduce
// to a one-dimensional profile equation in the shape, solved by Newton's method
// inside a sign-bracketing interval: any step that would leave the bracket is
// replaced by bisection. InvGamma is fitted as Gamma on the reciprocals.
//
// Every estimator sorts a private copy of the sample first, so results are
// bit-identical under any permutation of the input.

#ifndef FRANFIT_ESTIMATION_HPP_
#define FRANFIT_ESTIMATION_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "franfit/distributions.hpp"
#include "franfit/error.hpp"
#include "franfit/market_data.hpp"

namespace franfit {

struct FitConfig {
  // Convergence threshold on the relative profile residual:
  //   Weibull:  |g(k)| * k        (g relative to its 1/k term)
  //   Gamma:    |log a - psi(a) - s| / s
  double rel_tol = 1e-10;
  int max_iter = 200;
  // Growth factor used while searching for a sign-changing bracket.
  double bracket_expansion = 2.0;
};

// Throws Error(kInvalidParams) for rel_tol <= 0, max_iter < 1, expansion <= 1.
void Validate(const FitConfig& cfg);

struct FitResult {
  DistributionKind kind;
  Distribution params;
  double loglik;
  std::size_t n;
  bool converged;
  int iterations;
  double residual;  // final relative profile residual (0 for closed form)
};

// Outcome of one family within FitAll: either a result or the error it raised.
struct FitAttempt {
  DistributionKind kind;
  std::optional<FitResult> result;
  std::optional<ErrorCode> error;
  std::string message;

  bool ok() const { return result.has_value(); }
};

FitResult FitLogNormal(const Sample& sample);
FitResult FitWeibull(const Sample& sample, const FitConfig& cfg = {});
// All values must exceed `truncation` >= 0. With truncation == 0 the result is
// identical to FitWeibull.
FitResult FitTruncatedWeibull(const Sample& sample, double truncation, const FitConfig& cfg = {});
FitResult FitGamma(const Sample& sample, const FitConfig& cfg = {});
FitResult FitInvGamma(const Sample& sample, const FitConfig& cfg = {});

// Truncation point FitAll uses for TruncatedWeibull.
inline constexpr double kDefaultTruncationFactor = 0.999;

// One attempt per family in kAllKinds order. Throws Error(kAllFamiliesFailed)
// when no family could be fitted.
std::vector<FitAttempt> FitAll(const Sample& sample, const FitConfig& cfg = {});

// Fits a single family by kind, using the default truncation for
// TruncatedWeibull.
FitResult FitKind(const Sample& sample, DistributionKind kind, const FitConfig& cfg = {});

// Brute-force reference estimator. Evaluates the log-likelihood on every node
// of an inclusive linear grid over the two free parameters and returns the
// best node. Costs steps[0] * steps[1] * n density evaluations; meant for tests.
struct GridSpec {
  std::array<double, 2> lower;
  std::array<double, 2> upper;
  std::array<std::size_t, 2> steps;
  double truncation = 0.0;  // TruncatedWeibull only
};

FitResult GridOracleFit(const Sample& sample, DistributionKind kind, const GridSpec& grid);

}  // namespace franfit

#endif  // FRANFIT_ESTIMATION_HPP_
