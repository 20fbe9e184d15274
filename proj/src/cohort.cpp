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

#include "franfit/cohort.hpp"

#include <algorithm>
#include <cmath>

#include "franfit/error.hpp"

namespace franfit {

std::string_view RowStatusName(RowStatus status) {
  switch (status) {
    case RowStatus::kOk: return "ok";
    case RowStatus::kMissing: return "missing";
    case RowStatus::kFailed: return "failed";
  }
  return "";
}

std::string_view DispersionName(DispersionClass cls) {
  switch (cls) {
    case DispersionClass::kLow: return "Low";
    case DispersionClass::kMedium: return "Medium";
    case DispersionClass::kHigh: return "High";
  }
  return "";
}

SummaryRow SummarizeTicker(const CompanyRecord& company, const Sample& sample,
                           const FitConfig& cfg) {
  SummaryRow row;
  row.ticker = company.ticker;
  row.franchise_class = company.franchise_class;
  row.n = sample.n();
  try {
    row.fits = FitAll(sample, cfg);
    std::vector<FitResult> fitted;
    for (const auto& attempt : row.fits) {
      if (attempt.ok()) fitted.push_back(*attempt.result);
    }
    const auto lognormal = std::find_if(row.fits.begin(), row.fits.end(), [](const FitAttempt& a) {
      return a.kind == DistributionKind::kLogNormal;
    });
    if (!lognormal->ok()) {
      row.status = RowStatus::kFailed;
      row.error = lognormal->message;
      return row;
    }
    const auto& ln = std::get<LogNormalParams>(lognormal->result->params);
    row.mu = ln.mu;
    row.sigma = ln.sigma;
    row.ranking = RankModels(fitted, sample);
    row.best_model = row.ranking.front().kind;
  } catch (const Error& e) {
    row.status = RowStatus::kFailed;
    row.error = std::string(ErrorCodeName(e.code())) + ": " + e.what();
  }
  return row;
}

std::vector<SummaryRow> SummarizeUniverse(const Universe& universe,
                                          const std::map<std::string, Sample>& samples,
                                          const FitConfig& cfg) {
  for (const auto& company : universe.companies) {
    if (!samples.contains(company.ticker)) {
      throw Error(ErrorCode::kMissingSample, "no sample for " + company.ticker);
    }
  }
  std::vector<SummaryRow> rows;
  rows.reserve(universe.companies.size());
  for (const auto& company : universe.companies) {
    rows.push_back(SummarizeTicker(company, samples.at(company.ticker), cfg));
  }
  return rows;
}

DispersionClass ClassifyDispersion(double sigma, const DispersionThresholds& t) {
  if (!(t.low_max < t.high_min)) {
    throw Error(ErrorCode::kInvalidThresholds, "dispersion thresholds need low_max < high_min");
  }
  if (sigma <= t.low_max) return DispersionClass::kLow;
  if (sigma >= t.high_min) return DispersionClass::kHigh;
  return DispersionClass::kMedium;
}

DispersionClass ClassifyDispersion(const SummaryRow& row, const DispersionThresholds& t) {
  return ClassifyDispersion(row.sigma, t);
}

DateWindow DefaultRecessionWindow() {
  return {Date::FromYmd(2007, 10, 1), Date::FromYmd(2009, 6, 30)};
}

DateWindow SuggestedStudyWindow() {
  return {Date::FromYmd(2005, 1, 1), Date::FromYmd(2019, 8, 31)};
}

DrawdownReport MaxDrawdown(const PriceSeries& series, const DateWindow& window) {
  const PriceSeries w = SliceWindow(series, window.start, window.end);
  if (w.size() < 2) {
    throw Error(ErrorCode::kTooFewPoints,
                "drawdown window for " + series.ticker + " holds fewer than two points");
  }

  std::size_t running_peak = 0;
  std::size_t best_peak = 0;
  std::size_t best_trough = 0;
  double best_ratio = 1.0;  // trough / peak
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.points[i].close > w.points[running_peak].close) running_peak = i;
    const double ratio = w.points[i].close / w.points[running_peak].close;
    if (ratio < best_ratio) {
      best_ratio = ratio;
      best_peak = running_peak;
      best_trough = i;
    }
  }

  DrawdownReport report;
  report.peak_date = w.points[best_peak].date;
  report.peak_price = w.points[best_peak].close;
  report.trough_date = w.points[best_trough].date;
  report.trough_price = w.points[best_trough].close;
  report.max_drawdown = std::clamp(1.0 - report.trough_price / report.peak_price, 0.0, 1.0);

  for (const auto& p : series.points) {
    if (p.date >= report.trough_date && p.close >= report.peak_price) {
      report.recovery_date = p.date;
      report.recovery_days = DaysBetween(report.trough_date, p.date);
      break;
    }
  }
  return report;
}

CohortComparison CompareCohorts(const std::vector<SummaryRow>& rows,
                                const std::map<std::string, DrawdownReport>& reports,
                                const DispersionThresholds& thresholds) {
  constexpr std::array kClasses = {FranchiseClass::kFranchised, FranchiseClass::kMixed,
                                   FranchiseClass::kNonFranchised, FranchiseClass::kNoFoodOutlet};
  CohortComparison out;
  for (FranchiseClass cls : kClasses) {
    CohortStats stats;
    stats.franchise_class = cls;
    double sigma_sum = 0.0;
    double dd_sum = 0.0;
    double days_sum = 0.0;
    std::size_t recovered = 0;
    for (const auto& row : rows) {
      if (row.status != RowStatus::kOk || row.franchise_class != cls) continue;
      if (stats.count == 0) {
        stats.sigma_min = row.sigma;
        stats.sigma_max = row.sigma;
      }
      ++stats.count;
      stats.tickers.push_back(row.ticker);
      sigma_sum += row.sigma;
      stats.sigma_min = std::min(stats.sigma_min, row.sigma);
      stats.sigma_max = std::max(stats.sigma_max, row.sigma);
      ++stats.dispersion_tally[static_cast<std::size_t>(ClassifyDispersion(row.sigma, thresholds))];

      const auto it = reports.find(row.ticker);
      if (it == reports.end()) continue;
      ++stats.with_drawdown;
      dd_sum += it->second.max_drawdown;
      if (it->second.recovery_days) {
        ++recovered;
        days_sum += static_cast<double>(*it->second.recovery_days);
      } else {
        ++stats.unrecovered;
      }
    }
    if (stats.count == 0) continue;
    stats.sigma_mean = sigma_sum / static_cast<double>(stats.count);
    if (stats.with_drawdown > 0) {
      stats.mean_max_drawdown = dd_sum / static_cast<double>(stats.with_drawdown);
    }
    if (recovered > 0) stats.mean_recovery_days = days_sum / static_cast<double>(recovered);
    out.cohorts.push_back(std::move(stats));
  }
  if (out.cohorts.empty()) throw Error(ErrorCode::kEmptyCohort, "no successful rows to compare");
  return out;
}

}  // namespace franfit
