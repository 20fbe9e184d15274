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


#include "franfit/distributions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "franfit/error.hpp"
#include "../support/oracles.hpp"

namespace franfit {
namespace {

using testing::Bisect;
using testing::Integrate;

std::vector<Distribution> ParameterGrid() {
  std::vector<Distribution> out;
  for (double k : {0.7, 1.5, 4.0}) {
    for (double s : {0.5, 2.0, 60.0}) {
      out.push_back(WeibullParams{k, s});
      out.push_back(TruncatedWeibullParams{k, s, 0.4 * s});
      out.push_back(GammaParams{k, 1.0 / s});
      out.push_back(InvGammaParams{k + 1.0, s});
    }
  }
  for (double mu : {-1.0, 0.0, 4.0}) {
    for (double sigma : {0.05, 0.5, 1.2}) out.push_back(LogNormalParams{mu, sigma});
  }
  return out;
}

TEST(Pdf, ClosedFormValues) {
  EXPECT_NEAR(Pdf(WeibullParams{1, 1}, 1.0), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(Pdf(LogNormalParams{0, 1}, 1.0), 1.0 / std::sqrt(2.0 * std::numbers::pi), 1e-15);
  EXPECT_NEAR(Pdf(GammaParams{2, 1}, 2.0), 2.0 * std::exp(-2.0), 1e-15);
  EXPECT_NEAR(Pdf(WeibullParams{1, 1}, 1.0), 0.367879, 1e-6);
  EXPECT_NEAR(Pdf(GammaParams{2, 1}, 2.0), 0.270671, 1e-6);
}

TEST(Cdf, ClosedFormValues) {
  EXPECT_NEAR(Cdf(WeibullParams{1, 1}, std::numbers::ln2), 0.5, 1e-15);
  for (const auto& d : ParameterGrid()) EXPECT_EQ(Cdf(d, 0.0), 0.0);
}

TEST(Cdf, InvGammaAgainstDensityQuadrature) {
  // Integrate the InvGamma(2, 1) density itself up to 1; the integrand is
  // negligible below 1e-3.
  const InvGammaParams ig{2.0, 1.0};
  const double oracle = Integrate([&](double t) { return Pdf(ig, t); }, 1e-3, 1.0, 1e-15);
  EXPECT_NEAR(Cdf(ig, 1.0), oracle, 1e-10);
  EXPECT_NEAR(Cdf(ig, 1.0), 0.735759, 1e-6);
  // Reciprocal relation with Gamma(2, 1).
  EXPECT_NEAR(Cdf(ig, 1.0), 1.0 - Cdf(GammaParams{2, 1}, 1.0), 1e-15);
}

TEST(Quantile, ClosedFormValues) {
  EXPECT_NEAR(Quantile(WeibullParams{1, 1}, 0.5), std::numbers::ln2, 1e-15);
  EXPECT_NEAR(Quantile(LogNormalParams{0, 1}, 0.5), 1.0, 1e-15);
}

TEST(Quantile, GammaAgainstBisection) {
  // Gamma(2, 1) CDF in closed form: 1 - e^{-x} (1 + x).
  const double oracle =
      Bisect([](double x) { return 1.0 - std::exp(-x) * (1.0 + x) - 0.75; }, 0.0, 50.0);
  EXPECT_NEAR(Quantile(GammaParams{2, 1}, 0.75), oracle, 1e-10);
  EXPECT_NEAR(oracle, 2.6926, 1e-4);
}

TEST(Quantile, RejectsOutOfRange) {
  for (double p : {0.0, 1.0, -0.1, 1.5, std::nan("")}) {
    try {
      Quantile(GammaParams{2, 1}, p);
      ADD_FAILURE() << p;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidProbability);
    }
  }
}

TEST(LogLikelihood, Examples) {
  EXPECT_NEAR(LogLikelihood(WeibullParams{1, 1}, std::vector<double>{1.0}), -1.0, 1e-15);
  EXPECT_NEAR(LogLikelihood(LogNormalParams{0, 1}, std::vector<double>{1.0, 1.0}),
              2.0 * std::log(1.0 / std::sqrt(2.0 * std::numbers::pi)), 1e-14);
  EXPECT_NEAR(LogLikelihood(LogNormalParams{0, 1}, std::vector<double>{1.0, 1.0}), -1.83788, 1e-5);
  const std::vector<double> xs = {0.3, 1.7, 2.2, 5.0};
  for (const auto& [k, s] : {std::pair{0.8, 1.0}, {1.5, 2.0}, {3.0, 0.5}}) {
    EXPECT_DOUBLE_EQ(LogLikelihood(TruncatedWeibullParams{k, s, 0.0}, xs),
                     LogLikelihood(WeibullParams{k, s}, xs));
  }
  EXPECT_EQ(LogLikelihood(TruncatedWeibullParams{1, 1, 1.0}, xs),
            -std::numeric_limits<double>::infinity());
}

TEST(Validate, RejectsBadParameters) {
  for (const Distribution& d :
       std::vector<Distribution>{WeibullParams{0, 1}, WeibullParams{1, -1}, GammaParams{1, 0},
                                 InvGammaParams{-1, 1}, LogNormalParams{0, 0},
                                 TruncatedWeibullParams{1, 1, -0.5},
                                 LogNormalParams{std::nan(""), 1}}) {
    EXPECT_THROW(Validate(d), Error);
  }
}

TEST(Draw, DeterministicAndInSupport) {
  for (const auto& d : ParameterGrid()) {
    EXPECT_EQ(Draw(d, 5, 42), Draw(d, 5, 42));
  }
  const auto tw = Draw(TruncatedWeibullParams{1.5, 2.0, 1.0}, 20000, 9);
  for (double x : tw.values()) ASSERT_GT(x, 1.0);
  double sum = 0.0;
  const auto e = Draw(WeibullParams{1, 1}, 100000, 7);
  for (double x : e.values()) sum += x;
  EXPECT_NEAR(sum / 100000.0, 1.0, 0.02);
}

TEST(Moments, ClosedForms) {
  const auto w = ComputeMoments(WeibullParams{1, 3});
  EXPECT_NEAR(*w.mean, 3.0, 1e-12);
  EXPECT_NEAR(*w.variance, 9.0, 1e-12);
  EXPECT_NEAR(*ComputeMoments(LogNormalParams{1.0, 0.5}).mean, std::exp(1.0 + 0.125), 1e-12);
  const auto ig = ComputeMoments(InvGammaParams{1, 1});
  EXPECT_FALSE(ig.mean);
  EXPECT_FALSE(ig.variance);
  EXPECT_FALSE(ComputeMoments(InvGammaParams{2, 1}).variance);
  EXPECT_NEAR(*ComputeMoments(InvGammaParams{3, 2}).mean, 1.0, 1e-12);
}

TEST(Moments, MeanMatchesQuadrature) {
  for (const auto& d : ParameterGrid()) {
    const auto m = ComputeMoments(d);
    if (!m.mean) continue;
    // Integrate x f(x) dx as x^2 f(x) dt with x = e^t, pushing the upper limit
    // out until the polynomial tails (InvGamma) have stopped contributing.
    const auto g = [&](double t) {
      const double x = std::exp(t);
      return x * x * Pdf(d, x);
    };
    const double t_lo = std::log(Quantile(d, 1e-12));
    double t_hi = std::log(Quantile(d, 1 - 1e-12));
    const double scale = Integrate(g, t_lo, t_hi, 1e-10);
    while (g(t_hi) > 1e-12 * scale) t_hi += 1.0;
    const double mean = Integrate(g, t_lo, t_hi, 1e-12 * scale);
    EXPECT_NEAR(*m.mean, mean, 1e-6 * *m.mean) << KindName(KindOf(d));
  }
}

// Properties over a parameter grid.

TEST(Properties, DensityIntegratesToOne) {
  for (const auto& d : ParameterGrid()) {
    const double lo = Quantile(d, 1e-6), hi = Quantile(d, 1 - 1e-6);
    const double mass = Integrate([&](double x) { return Pdf(d, x); }, lo, hi, 1e-12);
    EXPECT_GE(mass, 0.9999) << KindName(KindOf(d));
    EXPECT_LE(mass, 1.0001) << KindName(KindOf(d));
  }
}

TEST(Properties, CdfMonotoneAndBounded) {
  for (const auto& d : ParameterGrid()) {
    const double hi = Quantile(d, 1 - 1e-9) * 1.5;
    double prev = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double x = hi * i / 999.0;
      const double f = Cdf(d, x);
      ASSERT_GE(f, prev);
      ASSERT_LE(f, 1.0);
      ASSERT_GE(Pdf(d, x), 0.0);
      prev = f;
    }
  }
}

TEST(Properties, QuantileInvertsCdf) {
  for (const auto& d : ParameterGrid()) {
    for (double p : {0.01, 0.1, 0.5, 0.9, 0.99}) {
      EXPECT_NEAR(Cdf(d, Quantile(d, p)), p, 1e-8) << KindName(KindOf(d)) << " p=" << p;
    }
  }
}

TEST(Properties, SfComplementsCdf) {
  for (const auto& d : ParameterGrid()) {
    const double x = Quantile(d, 0.3);
    EXPECT_NEAR(Cdf(d, x) + Sf(d, x), 1.0, 1e-14);
    EXPECT_NEAR(LogPdf(d, x), std::log(Pdf(d, x)), 1e-12 * (1 + std::abs(LogPdf(d, x))));
  }
}

TEST(Kinds, NamesRoundTrip) {
  for (auto k : kAllKinds) EXPECT_EQ(ParseKind(KindName(k)), k);
  EXPECT_THROW(ParseKind("Cauchy"), Error);
}

}  // namespace
}  // namespace franfit
