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

// Per-ticker fit summaries, dispersion classes, and drawdown/recovery metrics,
// aggregated by franchise class.

#ifndef FRANFIT_COHORT_HPP_
#define FRANFIT_COHORT_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "franfit/estimation.hpp"
#include "franfit/gof.hpp"
#include "franfit/market_data.hpp"

namespace franfit {

enum class RowStatus { kOk, kMissing, kFailed };
std::string_view RowStatusName(RowStatus status);

struct SummaryRow {
  std::string ticker;
  FranchiseClass franchise_class;
  RowStatus status = RowStatus::kOk;
  std::string error;  // set when status != kOk

  // Valid only for status == kOk.
  double mu = 0.0;
  double sigma = 0.0;
  DistributionKind best_model = DistributionKind::kLogNormal;
  std::size_t n = 0;

  std::vector<FitAttempt> fits;
  std::vector<GofReport> ranking;
};

// FitAll + RankModels on one ticker; fit failures come back as a kFailed row.
SummaryRow SummarizeTicker(const CompanyRecord& company, const Sample& sample,
                           const FitConfig& cfg = {});

// Rows in universe order. Throws Error(kMissingSample) if a ticker has no sample.
std::vector<SummaryRow> SummarizeUniverse(const Universe& universe,
                                          const std::map<std::string, Sample>& samples,
                                          const FitConfig& cfg = {});

enum class DispersionClass { kLow, kMedium, kHigh };
std::string_view DispersionName(DispersionClass cls);

struct DispersionThresholds {
  double low_max = 0.15;
  double high_min = 0.35;
};

// sigma <= low_max -> Low, sigma >= high_min -> High, otherwise Medium.
// Throws kInvalidThresholds unless low_max < high_min.
DispersionClass ClassifyDispersion(double sigma, const DispersionThresholds& t = {});
DispersionClass ClassifyDispersion(const SummaryRow& row, const DispersionThresholds& t = {});

// Default recession window, 2007-10-01..2009-06-30.
DateWindow DefaultRecessionWindow();
// Suggested study window, 2005-01-01..2019-08-31. Nothing applies it implicitly.
DateWindow SuggestedStudyWindow();

struct DrawdownReport {
  Date peak_date;
  double peak_price;
  Date trough_date;
  double trough_price;
  double max_drawdown;  // 1 - trough/peak, in [0, 1]
  std::optional<Date> recovery_date;
  std::optional<std::int64_t> recovery_days;  // calendar days trough -> recovery
};

// Peak and trough are found inside `window` (earliest on ties); the recovery
// search continues past the window end through the rest of the series.
// Throws kTooFewPoints when the window holds fewer than two points.
DrawdownReport MaxDrawdown(const PriceSeries& series, const DateWindow& window);

struct CohortStats {
  FranchiseClass franchise_class;
  std::vector<std::string> tickers;
  std::size_t count = 0;
  double sigma_mean = 0.0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  std::array<std::size_t, 3> dispersion_tally{};  // indexed by DispersionClass
  std::size_t with_drawdown = 0;
  std::optional<double> mean_max_drawdown;
  std::size_t unrecovered = 0;
  std::optional<double> mean_recovery_days;  // over recovered tickers only
};

struct CohortComparison {
  std::vector<CohortStats> cohorts;  // classes present, in FranchiseClass order
};

// Aggregates rows with status kOk. Throws kEmptyCohort when there are none.
CohortComparison CompareCohorts(const std::vector<SummaryRow>& rows,
                                const std::map<std::string, DrawdownReport>& reports,
                                const DispersionThresholds& thresholds = {});

}  // namespace franfit

#endif  // FRANFIT_COHORT_HPP_
