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

// Density, CDF, quantile, likelihood, moments and seeded sampling for the five
// positive-support families used to describe de-timestamped price samples.
//
// Parameterizations:
//   Weibull(shape k, scale lambda)          f = (k/l)(x/l)^(k-1) exp(-(x/l)^k)
//   TruncatedWeibull(k, lambda, a)          Weibull renormalized to x > a
//   Gamma(shape alpha, rate beta)           f ~ x^(alpha-1) exp(-beta x)
//   InvGamma(shape alpha, scale beta)       f ~ x^(-alpha-1) exp(-beta/x)
//   LogNormal(mu, sigma)                    log x ~ Normal(mu, sigma^2)

#ifndef FRANFIT_DISTRIBUTIONS_HPP_
#define FRANFIT_DISTRIBUTIONS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "franfit/market_data.hpp"

namespace franfit {

// Declaration order is the canonical family order used for reporting and
// tie-breaking.
enum class DistributionKind { kWeibull, kTruncatedWeibull, kGamma, kInvGamma, kLogNormal };

inline constexpr std::array<DistributionKind, 5> kAllKinds = {
    DistributionKind::kWeibull, DistributionKind::kTruncatedWeibull,
    DistributionKind::kGamma, DistributionKind::kInvGamma, DistributionKind::kLogNormal};

std::string_view KindName(DistributionKind kind);
// Accepts the KindName spelling, case-insensitively. Throws kInvalidParams.
DistributionKind ParseKind(std::string_view name);

struct WeibullParams {
  double shape;
  double scale;
  bool operator==(const WeibullParams&) const = default;
};

struct TruncatedWeibullParams {
  double shape;
  double scale;
  double truncation;  // support is x > truncation
  bool operator==(const TruncatedWeibullParams&) const = default;
};

struct GammaParams {
  double shape;
  double rate;
  bool operator==(const GammaParams&) const = default;
};

struct InvGammaParams {
  double shape;
  double scale;
  bool operator==(const InvGammaParams&) const = default;
};

struct LogNormalParams {
  double mu;
  double sigma;
  bool operator==(const LogNormalParams&) const = default;
};

// Alternative index matches DistributionKind.
using Distribution = std::variant<WeibullParams, TruncatedWeibullParams, GammaParams,
                                  InvGammaParams, LogNormalParams>;

DistributionKind KindOf(const Distribution& dist);

// Throws Error(kInvalidParams) on non-finite or out-of-range parameters.
void Validate(const Distribution& dist);

// The two estimated parameters in declaration order. The truncation point of
// TruncatedWeibull is fixed, not free.
std::array<double, 2> FreeParams(const Distribution& dist);
Distribution WithFreeParams(const Distribution& like, std::array<double, 2> params);

// Lower edge of the support (0, or the truncation point).
double SupportLowerBound(const Distribution& dist);
bool InSupport(const Distribution& dist, double x);

// Outside the support pdf is 0 and log_pdf is -inf; neither throws.
double Pdf(const Distribution& dist, double x);
double LogPdf(const Distribution& dist, double x);
double Cdf(const Distribution& dist, double x);
// 1 - Cdf, computed directly.
double Sf(const Distribution& dist, double x);

// Throws Error(kInvalidProbability) unless 0 < p < 1.
double Quantile(const Distribution& dist, double p);

// Sum of log pdf (compensated summation). Returns -inf if any value lies
// outside the support.
double LogLikelihood(const Distribution& dist, std::span<const double> values);
double LogLikelihood(const Distribution& dist, const Sample& sample);

// n inverse-CDF draws driven by SplitMix64(seed); see random.hpp.
Sample Draw(const Distribution& dist, std::size_t n, std::uint64_t seed);

struct Moments {
  std::optional<double> mean;      // nullopt when the integral diverges
  std::optional<double> variance;
};

Moments ComputeMoments(const Distribution& dist);

}  // namespace franfit

#endif  // FRANFIT_DISTRIBUTIONS_HPP_
