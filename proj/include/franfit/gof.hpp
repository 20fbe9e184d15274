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

// Goodness-of-fit statistics, model ranking and plotting data.
//
// KS and Anderson-Darling are reported as raw statistics. No p-values are
// attached: with estimated parameters the textbook null tables do not apply.

#ifndef FRANFIT_GOF_HPP_
#define FRANFIT_GOF_HPP_

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "franfit/distributions.hpp"
#include "franfit/estimation.hpp"
#include "franfit/market_data.hpp"

namespace franfit {

struct EcdfTable {
  std::vector<double> sorted_values;  // distinct, ascending
  std::vector<double> steps;          // Fn at each value; ends at 1
};

// Ties collapse to one entry carrying the highest step.
EcdfTable Ecdf(const Sample& sample);

// D = max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n). Throws kUnsupportedValue
// if any value lies outside the support of `dist`.
double KsStatistic(const Sample& sample, const Distribution& dist);

// A^2 = -n - (1/n) sum (2i-1) [log F(x_(i)) + log(1 - F(x_(n+1-i)))].
// Throws kBoundaryValue if F evaluates to exactly 0 or 1 at a sample point.
double AndersonDarling(const Sample& sample, const Distribution& dist);

struct InformationCriteria {
  double aic;
  double bic;
};

// Two free parameters for every family. Throws kNotConverged.
InformationCriteria ComputeInformationCriteria(const FitResult& fit);

struct GofReport {
  DistributionKind kind;
  double ks;
  double ad;  // NaN when A^2 is undefined for this fit (a boundary value)
  double aic;
  double bic;
};

GofReport EvaluateFit(const FitResult& fit, const Sample& sample);

// GofReport per converged fit, ascending by AIC, then KS, then kind order.
// Throws kNothingToRank when no fit converged.
std::vector<GofReport> RankModels(const std::vector<FitResult>& fits, const Sample& sample);

struct Histogram {
  std::vector<double> bin_edges;  // size = bins + 1
  std::vector<double> densities;  // size = bins; area sums to 1
};

struct FreedmanDiaconis {};
struct FixedCount {
  std::size_t bins;
};
using BinRule = std::variant<FreedmanDiaconis, FixedCount>;

inline constexpr std::size_t kMinFdBins = 10;
inline constexpr std::size_t kMaxFdBins = 200;

// Area-normalized histogram over [min, max]; the last bin is closed. FD uses
// width 2 IQR / n^(1/3) and the bin count is clamped to [10, 200].
Histogram MakeHistogram(const Sample& sample, const BinRule& rule);

struct QQData {
  std::vector<std::pair<double, double>> pairs;  // (theoretical, empirical)
};

// Pairs (quantile((i - 0.5)/n), x_(i)).
QQData QqPoints(const Sample& sample, const Distribution& dist);

}  // namespace franfit

#endif  // FRANFIT_GOF_HPP_
