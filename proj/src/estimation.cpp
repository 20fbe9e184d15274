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

#include "franfit/estimation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "franfit/special_functions.hpp"

namespace franfit {
namespace {

class CompensatedSum {
 public:
  void Add(double t) {
    const double s = sum_ + t;
    if (std::fabs(sum_) >= std::fabs(t)) {
      comp_ += (sum_ - s) + t;
    } else {
      comp_ += (t - s) + sum_;
    }
    sum_ = s;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Sorting makes every estimator permutation invariant bit-for-bit. Sample
// values are finite and positive, so their IEEE bit patterns order the same
// way as the values and an LSD radix sort on the raw bits applies.
std::vector<double> SortedCopy(const Sample& sample) {
  const auto values = sample.values();
  const std::size_t n = values.size();
  std::vector<std::uint64_t> keys(n), scratch(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = std::bit_cast<std::uint64_t>(values[i]);
  for (int shift = 0; shift < 64; shift += 8) {
    std::array<std::size_t, 257> count{};
    for (std::uint64_t k : keys) ++count[((k >> shift) & 0xff) + 1];
    if (count[((keys[0] >> shift) & 0xff) + 1] == n) continue;  // digit is constant
    for (int b = 0; b < 256; ++b) count[b + 1] += count[b];
    for (std::uint64_t k : keys) scratch[count[(k >> shift) & 0xff]++] = k;
    keys.swap(scratch);
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::bit_cast<double>(keys[i]);
  return out;
}

void RequireFittable(std::span<const double> sorted) {
  if (sorted.size() < 2) {
    throw Error(ErrorCode::kTooFewPoints, "at least two values are required");
  }
  if (sorted.front() == sorted.back()) {
    throw Error(ErrorCode::kDegenerateSample, "all sample values are equal");
  }
}

struct RootResult {
  double root;
  int iterations;
  double residual;
  bool converged;
};

// Safeguarded Newton for an increasing function f with f(lo) < 0 < f(hi).
// `eval` returns {f(x), f'(x)}; `relative` scales |f| into the residual that is
// compared against cfg.rel_tol.
template <class Eval, class Relative>
RootResult SafeguardedNewton(Eval eval, Relative relative, double start, const FitConfig& cfg) {
  int iterations = 0;
  auto value_at = [&](double x) { return eval(x).first; };

  double lo = start;
  double hi = start;
  while (value_at(lo) >= 0.0) {
    lo /= cfg.bracket_expansion;
    if (++iterations > cfg.max_iter || !(lo > 0.0)) {
      throw Error(ErrorCode::kNoConvergence,
                  "no lower bracket after " + std::to_string(iterations) + " iterations");
    }
  }
  while (value_at(hi) <= 0.0) {
    hi *= cfg.bracket_expansion;
    if (++iterations > cfg.max_iter || !std::isfinite(hi)) {
      throw Error(ErrorCode::kNoConvergence,
                  "no upper bracket after " + std::to_string(iterations) + " iterations");
    }
  }

  double x = start;
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
  while (iterations < cfg.max_iter) {
    ++iterations;
    const auto [f, df] = eval(x);
    const double residual = relative(x, f);
    if (residual <= cfg.rel_tol) return {x, iterations, residual, true};
    if (f < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    double next = (df > 0.0 && std::isfinite(df)) ? x - f / df : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x || hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * x) {
      // Bracket collapsed to adjacent doubles: best representable root.
      const auto [fn, dfn] = eval(next);
      const double rn = relative(next, fn);
      return {next, iterations, rn, rn <= cfg.rel_tol};
    }
    x = next;
  }
  throw Error(ErrorCode::kNoConvergence,
              "profile equation unsolved after " + std::to_string(iterations) + " iterations");
}

// Shared solver for the plain (truncation == 0) and left-truncated Weibull.
// Log values are shifted by c = log max(x); the profile equation is invariant
// to this shift and the shifted exponentials never overflow.
//
//   A_j(k) = sum_i (y_i^j e^{k y_i} - y_a^j e^{k y_a})      (truncation terms
//                                                           only when a > 0)
//   g(k)   = A_1 / A_0 - 1/k - mean(y)
//   lambda = exp(c) * (A_0 / n)^{1/k}
FitResult SolveWeibull(const Sample& sample, double truncation, const FitConfig& cfg) {
  Validate(cfg);
  const std::vector<double> x = SortedCopy(sample);
  if (!std::isfinite(truncation) || truncation < 0.0) {
    throw Error(ErrorCode::kInvalidParams, "truncation point must be finite and >= 0");
  }
  if (x.front() <= truncation) {
    throw Error(ErrorCode::kValueAtOrBelowTruncation,
                "sample contains a value at or below the truncation point");
  }
  RequireFittable(x);

  const std::size_t n = x.size();
  const double shift = std::log(x.back());
  std::vector<double> y(n);
  CompensatedSum ysum;
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = std::log(x[i]) - shift;
    ysum.Add(y[i]);
  }
  const double ymean = ysum.value() / static_cast<double>(n);
  const bool truncated = truncation > 0.0;
  const double ya = truncated ? std::log(truncation) - shift : 0.0;
  const double dn = static_cast<double>(n);

  struct Sums {
    double a0, a1, a2;
  };
  auto sums = [&](double k) {
    CompensatedSum s0, s1, s2;
    for (double yi : y) {
      const double e = std::exp(k * yi);
      s0.Add(e);
      s1.Add(yi * e);
      s2.Add(yi * yi * e);
    }
    double a0 = s0.value(), a1 = s1.value(), a2 = s2.value();
    if (truncated) {
      const double ea = std::exp(k * ya);
      a0 -= dn * ea;
      a1 -= dn * ya * ea;
      a2 -= dn * ya * ya * ea;
    }
    return Sums{a0, a1, a2};
  };
  auto eval = [&](double k) {
    const Sums s = sums(k);
    const double ratio = s.a1 / s.a0;
    const double g = ratio - 1.0 / k - ymean;
    const double dg = (s.a2 / s.a0 - ratio * ratio) + 1.0 / (k * k);
    return std::pair{g, dg};
  };
  auto relative = [](double k, double g) { return std::fabs(g) * k; };

  // Moment start: sd(log X) = pi / (k sqrt 6) for the untruncated family.
  CompensatedSum var;
  for (double yi : y) var.Add((yi - ymean) * (yi - ymean));
  const double sd = std::sqrt(var.value() / dn);
  const double start = std::numbers::pi / (std::sqrt(6.0) * sd);

  const RootResult root = SafeguardedNewton(eval, relative, start, cfg);
  const double k = root.root;
  const Sums s = sums(k);
  const double lambda = std::exp(shift + std::log(s.a0 / dn) / k);

  FitResult out;
  if (truncated) {
    out.kind = DistributionKind::kTruncatedWeibull;
    out.params = TruncatedWeibullParams{k, lambda, truncation};
  } else {
    out.kind = DistributionKind::kWeibull;
    out.params = WeibullParams{k, lambda};
  }
  out.loglik = LogLikelihood(out.params, x);
  out.n = n;
  out.converged = root.converged;
  out.iterations = root.iterations;
  out.residual = root.residual;
  return out;
}

}  // namespace

void Validate(const FitConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || cfg.max_iter < 1 || !(cfg.bracket_expansion > 1.0)) {
    throw Error(ErrorCode::kInvalidParams,
                "FitConfig needs rel_tol > 0, max_iter >= 1, bracket_expansion > 1");
  }
}

FitResult FitLogNormal(const Sample& sample) {
  const std::vector<double> x = SortedCopy(sample);
  RequireFittable(x);
  const std::size_t n = x.size();
  std::vector<double> logs(n);
  CompensatedSum sum;
  for (std::size_t i = 0; i < n; ++i) {
    logs[i] = std::log(x[i]);
    sum.Add(logs[i]);
  }
  const double mu = sum.value() / static_cast<double>(n);
  CompensatedSum sq;
  for (double l : logs) sq.Add((l - mu) * (l - mu));
  const double sigma = std::sqrt(sq.value() / static_cast<double>(n));
  if (!(sigma > 0.0)) {
    throw Error(ErrorCode::kDegenerateSample, "log values have zero spread");
  }

  FitResult out;
  out.kind = DistributionKind::kLogNormal;
  out.params = LogNormalParams{mu, sigma};
  // At the MLE the quadratic term collapses to n/2.
  const double dn = static_cast<double>(n);
  out.loglik = -sum.value() - dn * (std::log(sigma) + 0.5 * std::log(2.0 * std::numbers::pi)) -
               0.5 * dn;
  out.n = n;
  out.converged = true;
  out.iterations = 0;
  out.residual = 0.0;
  return out;
}

FitResult FitWeibull(const Sample& sample, const FitConfig& cfg) {
  return SolveWeibull(sample, 0.0, cfg);
}

FitResult FitTruncatedWeibull(const Sample& sample, double truncation, const FitConfig& cfg) {
  FitResult out = SolveWeibull(sample, truncation, cfg);
  if (out.kind == DistributionKind::kWeibull) {
    const auto& w = std::get<WeibullParams>(out.params);
    out.kind = DistributionKind::kTruncatedWeibull;
    out.params = TruncatedWeibullParams{w.shape, w.scale, 0.0};
  }
  return out;
}

FitResult FitGamma(const Sample& sample, const FitConfig& cfg) {
  Validate(cfg);
  const std::vector<double> x = SortedCopy(sample);
  RequireFittable(x);
  const std::size_t n = x.size();
  const double dn = static_cast<double>(n);

  // s = log(mean x) - mean(log x), computed around the geometric mean so tight
  // samples (s ~ sigma^2 / 2) do not lose digits to cancellation.
  std::vector<double> logs(n);
  CompensatedSum lsum;
  for (std::size_t i = 0; i < n; ++i) {
    logs[i] = std::log(x[i]);
    lsum.Add(logs[i]);
  }
  const double mean_log = lsum.value() / dn;
  CompensatedSum em1;
  for (double l : logs) em1.Add(std::expm1(l - mean_log));
  const double s = std::log1p(em1.value() / dn);
  if (!(s > 0.0)) {
    throw Error(ErrorCode::kDegenerateSample, "sample has no spread on the log scale");
  }

  // f(a) = s - (log a - psi(a)) is increasing in a.
  auto eval = [s](double a) {
    const double f = s - special::LogMinusDigamma(a);
    const double df = special::Trigamma(a) - 1.0 / a;
    return std::pair{f, df};
  };
  auto relative = [s](double, double f) { return std::fabs(f) / s; };
  const double start = (3.0 - s + std::sqrt((s - 3.0) * (s - 3.0) + 24.0 * s)) / (12.0 * s);

  const RootResult root = SafeguardedNewton(eval, relative, start, cfg);
  const double alpha = root.root;
  const double beta = alpha * std::exp(-(mean_log + s));

  FitResult out;
  out.kind = DistributionKind::kGamma;
  out.params = GammaParams{alpha, beta};
  out.loglik = LogLikelihood(out.params, x);
  out.n = n;
  out.converged = root.converged;
  out.iterations = root.iterations;
  out.residual = root.residual;
  return out;
}

FitResult FitInvGamma(const Sample& sample, const FitConfig& cfg) {
  std::vector<double> recip(sample.values().begin(), sample.values().end());
  for (double& v : recip) v = 1.0 / v;
  const FitResult g = FitGamma(Sample(std::move(recip)), cfg);
  const auto& gp = std::get<GammaParams>(g.params);

  FitResult out = g;
  out.kind = DistributionKind::kInvGamma;
  out.params = InvGammaParams{gp.shape, gp.rate};
  out.loglik = LogLikelihood(out.params, SortedCopy(sample));
  return out;
}

FitResult FitKind(const Sample& sample, DistributionKind kind, const FitConfig& cfg) {
  switch (kind) {
    case DistributionKind::kWeibull: return FitWeibull(sample, cfg);
    case DistributionKind::kTruncatedWeibull: {
      const double lo = *std::min_element(sample.values().begin(), sample.values().end());
      return FitTruncatedWeibull(sample, kDefaultTruncationFactor * lo, cfg);
    }
    case DistributionKind::kGamma: return FitGamma(sample, cfg);
    case DistributionKind::kInvGamma: return FitInvGamma(sample, cfg);
    case DistributionKind::kLogNormal: return FitLogNormal(sample);
  }
  throw Error(ErrorCode::kInvalidParams, "unknown distribution kind");
}

std::vector<FitAttempt> FitAll(const Sample& sample, const FitConfig& cfg) {
  Validate(cfg);
  std::vector<FitAttempt> attempts;
  attempts.reserve(kAllKinds.size());
  bool any = false;
  for (DistributionKind kind : kAllKinds) {
    FitAttempt attempt{kind, std::nullopt, std::nullopt, {}};
    try {
      attempt.result = FitKind(sample, kind, cfg);
      any = true;
    } catch (const Error& e) {
      attempt.error = e.code();
      attempt.message = e.what();
    }
    attempts.push_back(std::move(attempt));
  }
  if (!any) {
    throw Error(ErrorCode::kAllFamiliesFailed,
                "no distribution family could be fitted: " + attempts.front().message);
  }
  return attempts;
}

FitResult GridOracleFit(const Sample& sample, DistributionKind kind, const GridSpec& grid) {
  if (grid.steps[0] == 0 || grid.steps[1] == 0) {
    throw Error(ErrorCode::kEmptyGrid, "grid has no nodes");
  }
  const std::vector<double> x = SortedCopy(sample);
  std::vector<double> lx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) lx[i] = std::log(x[i]);
  const double dn = static_cast<double>(x.size());

  auto node = [&](std::size_t axis, std::size_t i) {
    if (grid.steps[axis] == 1) return grid.lower[axis];
    const double t = static_cast<double>(i) / static_cast<double>(grid.steps[axis] - 1);
    return grid.lower[axis] + t * (grid.upper[axis] - grid.lower[axis]);
  };

  // Direct per-point log-density sums with per-node constants hoisted.
  auto loglik = [&](double p0, double p1) -> double {
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    double total = 0.0;
    switch (kind) {
      case DistributionKind::kWeibull:
      case DistributionKind::kTruncatedWeibull: {
        const double k = p0, lam = p1;
        if (!(k > 0.0 && lam > 0.0)) return kNegInf;
        const double a = kind == DistributionKind::kTruncatedWeibull ? grid.truncation : 0.0;
        if (x.front() <= a) return kNegInf;
        const double llam = std::log(lam);
        const double offset = a > 0.0 ? std::exp(k * (std::log(a) - llam)) : 0.0;
        for (double l : lx) total += (k - 1.0) * (l - llam) - std::exp(k * (l - llam));
        return total + dn * (std::log(k) - llam + offset);
      }
      case DistributionKind::kGamma: {
        const double a = p0, b = p1;
        if (!(a > 0.0 && b > 0.0)) return kNegInf;
        for (std::size_t i = 0; i < x.size(); ++i) total += (a - 1.0) * lx[i] - b * x[i];
        return total + dn * (a * std::log(b) - std::lgamma(a));
      }
      case DistributionKind::kInvGamma: {
        const double a = p0, b = p1;
        if (!(a > 0.0 && b > 0.0)) return kNegInf;
        for (std::size_t i = 0; i < x.size(); ++i) total += -(a + 1.0) * lx[i] - b / x[i];
        return total + dn * (a * std::log(b) - std::lgamma(a));
      }
      case DistributionKind::kLogNormal: {
        const double mu = p0, sigma = p1;
        if (!(sigma > 0.0)) return kNegInf;
        for (double l : lx) {
          const double z = (l - mu) / sigma;
          total += -l - 0.5 * z * z;
        }
        return total - dn * (std::log(sigma) + 0.5 * std::log(2.0 * std::numbers::pi));
      }
    }
    return kNegInf;
  };

  double best = -std::numeric_limits<double>::infinity();
  std::array<double, 2> best_params{node(0, 0), node(1, 0)};
  for (std::size_t i = 0; i < grid.steps[0]; ++i) {
    const double p0 = node(0, i);
    for (std::size_t j = 0; j < grid.steps[1]; ++j) {
      const double p1 = node(1, j);
      const double ll = loglik(p0, p1);
      if (ll > best) {
        best = ll;
        best_params = {p0, p1};
      }
    }
  }

  FitResult out;
  out.kind = kind;
  switch (kind) {
    case DistributionKind::kWeibull: out.params = WeibullParams{}; break;
    case DistributionKind::kTruncatedWeibull:
      out.params = TruncatedWeibullParams{0.0, 0.0, grid.truncation};
      break;
    case DistributionKind::kGamma: out.params = GammaParams{}; break;
    case DistributionKind::kInvGamma: out.params = InvGammaParams{}; break;
    case DistributionKind::kLogNormal: out.params = LogNormalParams{}; break;
  }
  out.params = WithFreeParams(out.params, best_params);
  out.loglik = best;
  out.n = x.size();
  out.converged = false;
  out.iterations = static_cast<int>(grid.steps[0] * grid.steps[1]);
  out.residual = std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace franfit
