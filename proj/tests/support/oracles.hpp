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


// Independent numerical oracles shared by the unit and acceptance tests.
// Nothing here calls into the fitting code; only densities and CDFs are
// taken from the library, and those are cross-checked separately.

#ifndef FRANFIT_TESTS_ORACLES_HPP_
#define FRANFIT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "franfit/distributions.hpp"
#include "franfit/market_data.hpp"

namespace franfit::testing {

// Adaptive Simpson on [a, b].
inline double SimpsonStep(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return SimpsonStep(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         SimpsonStep(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

inline double Integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return SimpsonStep(f, a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, 60);
}

// Plain bisection for an increasing f on [lo, hi].
inline double Bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iters = 200) {
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Mean and population standard deviation in long double, two-pass.
inline std::array<double, 2> LogMoments(std::span<const double> xs) {
  long double sum = 0.0L;
  for (double x : xs) sum += std::log(static_cast<long double>(x));
  const long double mean = sum / xs.size();
  long double ss = 0.0L;
  for (double x : xs) {
    const long double d = std::log(static_cast<long double>(x)) - mean;
    ss += d * d;
  }
  return {static_cast<double>(mean), static_cast<double>(std::sqrt(ss / xs.size()))};
}

// Central-difference gradient of the log-likelihood over the two free
// parameters, relative step h per parameter.
inline std::array<double, 2> LoglikGradient(const Distribution& at, const Sample& sample,
                                            double h = 1e-5) {
  const auto p = FreeParams(at);
  std::array<double, 2> g{};
  for (int i = 0; i < 2; ++i) {
    const double step = h * std::max(std::abs(p[i]), 1e-3);
    auto up = p, down = p;
    up[i] += step;
    down[i] -= step;
    g[i] = (LogLikelihood(WithFreeParams(at, up), sample) -
            LogLikelihood(WithFreeParams(at, down), sample)) /
           (2.0 * step);
  }
  return g;
}

// sup |Fn - F| evaluated on and around every sample point (left and right
// limits of the ECDF), plus a dense uniform grid over the sample range.
inline double GridSupKs(std::span<const double> values, const Distribution& dist,
                        std::size_t grid = 20000) {
  std::vector<double> x(values.begin(), values.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  auto ecdf = [&](double t) {
    return static_cast<double>(std::upper_bound(x.begin(), x.end(), t) - x.begin()) / n;
  };
  auto ecdf_left = [&](double t) {
    return static_cast<double>(std::lower_bound(x.begin(), x.end(), t) - x.begin()) / n;
  };
  double d = 0.0;
  for (double t : x) {
    const double f = Cdf(dist, t);
    d = std::max({d, std::abs(ecdf(t) - f), std::abs(ecdf_left(t) - f)});
  }
  const double lo = x.front(), hi = x.back();
  for (std::size_t i = 0; i <= grid; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid);
    d = std::max(d, std::abs(ecdf(t) - Cdf(dist, t)));
  }
  return d;
}

// Independent sampler: std::mt19937_64 driving the library quantile. Used
// where a test wants data that did not come from the library's own RNG.
inline std::vector<double> IndependentDraws(const Distribution& dist, std::size_t n,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> out(n);
  for (auto& v : out) {
    double p;
    do p = u(rng); while (p <= 0.0);
    v = Quantile(dist, p);
  }
  return out;
}

// Weibull(k, lambda) conditioned on x > a via u in (F(a), 1).
inline std::vector<double> ConditionedWeibull(double k, double lambda, double a, std::size_t n,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double fa = 1.0 - std::exp(-std::pow(a / lambda, k));
  std::vector<double> out(n);
  for (auto& v : out) {
    double p;
    do p = fa + (1.0 - fa) * u(rng); while (p <= fa || p >= 1.0);
    v = lambda * std::pow(-std::log1p(-p), 1.0 / k);
  }
  return out;
}

inline bool WithinRel(double got, double want, double rel) {
  return std::abs(got - want) <= rel * std::abs(want);
}

// Fresh, empty directory under the system temp dir.
inline std::filesystem::path ScratchDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("franfit-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace franfit::testing

#endif  // FRANFIT_TESTS_ORACLES_HPP_
