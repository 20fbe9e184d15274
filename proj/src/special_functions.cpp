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

#include "franfit/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace franfit::special {
namespace {

constexpr double kAsymptoticStart = 10.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxTerms = 1000000;

// log(x) - psi(x) for x >= kAsymptoticStart.
double LogMinusDigammaAsymptotic(double x) {
  const double r = 1.0 / x;
  const double r2 = r * r;
  return 0.5 * r +
         r2 * (1.0 / 12.0 -
               r2 * (1.0 / 120.0 -
                     r2 * (1.0 / 252.0 -
                           r2 * (1.0 / 240.0 -
                                 r2 * (1.0 / 132.0 - r2 * (691.0 / 32760.0 - r2 / 12.0))))));
}

// Series for P(a, x), valid and fast for x < a + 1.
double LowerSeries(double a, double x, double log_prefactor) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int i = 0; i < kMaxTerms; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(log_prefactor);
}

// Modified Lentz continued fraction for Q(a, x), used for x >= a + 1.
double UpperContinuedFraction(double a, double x, double log_prefactor) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return std::exp(log_prefactor) * h;
}

double LogPrefactor(double a, double x) {
  return a * std::log(x) - x - std::lgamma(a);
}

}  // namespace

double Digamma(double x) {
  if (!(x > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  double shift = 0.0;
  while (x < kAsymptoticStart) {
    shift += 1.0 / x;
    x += 1.0;
  }
  return std::log(x) - LogMinusDigammaAsymptotic(x) - shift;
}

double Trigamma(double x) {
  if (!(x > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  double shift = 0.0;
  while (x < kAsymptoticStart) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  const double r = 1.0 / x;
  const double r2 = r * r;
  const double series =
      r + 0.5 * r2 +
      r * r2 *
          (1.0 / 6.0 -
           r2 * (1.0 / 30.0 -
                 r2 * (1.0 / 42.0 -
                       r2 * (1.0 / 30.0 -
                             r2 * (5.0 / 66.0 - r2 * (691.0 / 2730.0 - r2 * (7.0 / 6.0)))))));
  return series + shift;
}

double LogMinusDigamma(double x) {
  if (!(x > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  if (x >= kAsymptoticStart) return LogMinusDigammaAsymptotic(x);
  // log x - psi(x) = log x - log(x+m) + [log(x+m) - psi(x+m)] + sum 1/(x+j)
  double shifted = x;
  double recip_sum = 0.0;
  while (shifted < kAsymptoticStart) {
    recip_sum += 1.0 / shifted;
    shifted += 1.0;
  }
  return std::log(x / shifted) + LogMinusDigammaAsymptotic(shifted) + recip_sum;
}

double GammaP(double a, double x) {
  if (!(a > 0.0) || std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  const double lp = LogPrefactor(a, x);
  if (x < a + 1.0) return LowerSeries(a, x, lp);
  return 1.0 - UpperContinuedFraction(a, x, lp);
}

double GammaQ(double a, double x) {
  if (!(a > 0.0) || std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x <= 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  const double lp = LogPrefactor(a, x);
  if (x < a + 1.0) return 1.0 - LowerSeries(a, x, lp);
  return UpperContinuedFraction(a, x, lp);
}

double NormalCdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double NormalSf(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

double NormalQuantile(double p) {
  if (!(p > 0.0 && p < 1.0)) return std::numeric_limits<double>::quiet_NaN();
  if (p > 0.5) return -NormalQuantile(1.0 - p);  // 1 - p is exact here

  // Acklam's rational approximation, relative error ~1e-9 before refinement.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double kLow = 0.02425;

  double x;
  if (p < kLow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }

  // One Halley step.
  const double e = NormalCdf(x) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace franfit::special
