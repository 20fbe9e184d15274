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

#include "franfit/gof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "franfit/error.hpp"

namespace franfit {
namespace {

constexpr int kFreeParameters = 2;

std::vector<double> Sorted(const Sample& sample) {
  std::vector<double> v(sample.values().begin(), sample.values().end());
  std::sort(v.begin(), v.end());
  return v;
}

void RequireSupport(const std::vector<double>& sorted, const Distribution& dist) {
  if (!InSupport(dist, sorted.front()) || !InSupport(dist, sorted.back())) {
    throw Error(ErrorCode::kUnsupportedValue, "sample value outside the distribution support");
  }
}

// Linear-interpolation quantile of sorted data (Hyndman-Fan type 7).
double SortedQuantile(const std::vector<double>& sorted, double p) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

EcdfTable Ecdf(const Sample& sample) {
  const std::vector<double> v = Sorted(sample);
  const double n = static_cast<double>(v.size());
  EcdfTable table;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double step = static_cast<double>(i + 1) / n;
    if (!table.sorted_values.empty() && table.sorted_values.back() == v[i]) {
      table.steps.back() = step;
    } else {
      table.sorted_values.push_back(v[i]);
      table.steps.push_back(step);
    }
  }
  return table;
}

double KsStatistic(const Sample& sample, const Distribution& dist) {
  const std::vector<double> v = Sorted(sample);
  RequireSupport(v, dist);
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = Cdf(dist, v[i]);
    const double above = static_cast<double>(i + 1) / n - f;
    const double below = f - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  return std::clamp(d, 0.0, 1.0);
}

double AndersonDarling(const Sample& sample, const Distribution& dist) {
  const std::vector<double> v = Sorted(sample);
  RequireSupport(v, dist);
  const std::size_t n = v.size();
  std::vector<double> cdf(n);
  for (std::size_t i = 0; i < n; ++i) {
    cdf[i] = Cdf(dist, v[i]);
    if (!(cdf[i] > 0.0 && cdf[i] < 1.0)) {
      throw Error(ErrorCode::kBoundaryValue,
                  "CDF is 0 or 1 at a sample value; A^2 is undefined");
    }
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double weight = 2.0 * static_cast<double>(i + 1) - 1.0;
    sum += weight * (std::log(cdf[i]) + std::log1p(-cdf[n - 1 - i]));
  }
  const double dn = static_cast<double>(n);
  return std::max(0.0, -dn - sum / dn);
}

InformationCriteria ComputeInformationCriteria(const FitResult& fit) {
  if (!fit.converged) {
    throw Error(ErrorCode::kNotConverged, "information criteria need a converged fit");
  }
  const double p = kFreeParameters;
  return {2.0 * p - 2.0 * fit.loglik,
          p * std::log(static_cast<double>(fit.n)) - 2.0 * fit.loglik};
}

GofReport EvaluateFit(const FitResult& fit, const Sample& sample) {
  const InformationCriteria ic = ComputeInformationCriteria(fit);
  GofReport report{fit.kind, KsStatistic(sample, fit.params),
                   std::numeric_limits<double>::quiet_NaN(), ic.aic, ic.bic};
  try {
    report.ad = AndersonDarling(sample, fit.params);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBoundaryValue) throw;
  }
  return report;
}

std::vector<GofReport> RankModels(const std::vector<FitResult>& fits, const Sample& sample) {
  std::vector<GofReport> reports;
  for (const auto& fit : fits) {
    if (fit.converged) reports.push_back(EvaluateFit(fit, sample));
  }
  if (reports.empty()) throw Error(ErrorCode::kNothingToRank, "no converged fit to rank");
  std::stable_sort(reports.begin(), reports.end(), [](const GofReport& a, const GofReport& b) {
    if (a.aic != b.aic) return a.aic < b.aic;
    if (a.ks != b.ks) return a.ks < b.ks;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });
  return reports;
}

Histogram MakeHistogram(const Sample& sample, const BinRule& rule) {
  const std::vector<double> v = Sorted(sample);
  const double lo = v.front();
  const double hi = v.back();
  if (v.size() < 2 || lo == hi) {
    throw Error(ErrorCode::kDegenerateSample, "histogram needs at least two distinct values");
  }
  const double n = static_cast<double>(v.size());
  const double range = hi - lo;

  std::size_t bins = 0;
  if (const auto* fixed = std::get_if<FixedCount>(&rule)) {
    if (fixed->bins == 0) throw Error(ErrorCode::kInvalidParams, "bin count must be positive");
    bins = fixed->bins;
  } else {
    const double iqr = SortedQuantile(v, 0.75) - SortedQuantile(v, 0.25);
    const double width = 2.0 * iqr / std::cbrt(n);
    const double raw = width > 0.0 ? std::ceil(range / width) : static_cast<double>(kMaxFdBins);
    bins = static_cast<std::size_t>(
        std::clamp(raw, static_cast<double>(kMinFdBins), static_cast<double>(kMaxFdBins)));
  }

  Histogram h;
  h.bin_edges.resize(bins + 1);
  const double width = range / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) h.bin_edges[i] = lo + width * static_cast<double>(i);
  h.bin_edges.back() = hi;

  std::vector<std::size_t> counts(bins, 0);
  for (double x : v) {
    auto idx = static_cast<std::size_t>((x - lo) / width);
    idx = std::min(idx, bins - 1);
    // Rounding near an edge: move to the bin whose half-open span holds x.
    while (idx > 0 && x < h.bin_edges[idx]) --idx;
    while (idx + 1 < bins && x >= h.bin_edges[idx + 1]) ++idx;
    ++counts[idx];
  }
  h.densities.resize(bins);
  for (std::size_t i = 0; i < bins; ++i) {
    const double w = h.bin_edges[i + 1] - h.bin_edges[i];
    h.densities[i] = static_cast<double>(counts[i]) / (n * w);
  }
  return h;
}

QQData QqPoints(const Sample& sample, const Distribution& dist) {
  const std::vector<double> v = Sorted(sample);
  RequireSupport(v, dist);
  const double n = static_cast<double>(v.size());
  QQData qq;
  qq.pairs.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double p = (static_cast<double>(i) + 0.5) / n;
    qq.pairs.emplace_back(Quantile(dist, p), v[i]);
  }
  return qq;
}

}  // namespace franfit
