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

// Annual financial-statement metrics and base-window normalization.
//
// A series is normalized by the mean of |value| over the base-window years it
// has, keeping the sign: negative earnings stay negative and remain on the
// same axis as everyone else. Fiscal years are taken as labeled.

#ifndef FRANFIT_FUNDAMENTALS_HPP_
#define FRANFIT_FUNDAMENTALS_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace franfit {

enum class MetricKind {
  kRevenue,
  kCostOfGoods,
  kGrossProfit,
  kEps,
  kCurrentAssets,
  kInventory,
  kCurrentLiabilities,
  kTotalLiabilities,
};

inline constexpr std::array<MetricKind, 8> kAllMetrics = {
    MetricKind::kRevenue,       MetricKind::kCostOfGoods, MetricKind::kGrossProfit,
    MetricKind::kEps,           MetricKind::kCurrentAssets, MetricKind::kInventory,
    MetricKind::kCurrentLiabilities, MetricKind::kTotalLiabilities};

std::string_view MetricName(MetricKind metric);
// Case-insensitive on MetricName spellings; throws Error(kUnknownMetric).
MetricKind ParseMetric(std::string_view token);

struct YearValue {
  int year;
  double value;
  bool operator==(const YearValue&) const = default;
};

struct AnnualSeries {
  std::string ticker;
  MetricKind metric;
  std::vector<YearValue> points;  // strictly increasing years
};

struct YearWindow {
  int start;
  int end;
};

inline constexpr YearWindow kDefaultBaseWindow{2007, 2011};

struct NormalizedSeries {
  std::string ticker;
  MetricKind metric;
  YearWindow base;
  std::vector<YearValue> points;
};

// Header `ticker,metric,year,value`. Series come back in order of first
// appearance, each sorted by year. Any bad row rejects the whole file.
std::vector<AnnualSeries> ParseFundamentalsCsv(std::string_view content);

// Throws kEmptyBaseWindow, kZeroBaseDenominator, or kInvalidWindow.
NormalizedSeries Normalize(const AnnualSeries& series, YearWindow base);

struct MetricTable {
  MetricKind metric;
  std::vector<int> years;            // ascending union of all years
  std::vector<std::string> tickers;  // input order
  // cells[y][t]; nullopt where the ticker has no value for that year.
  std::vector<std::vector<std::optional<double>>> cells;
};

// Throws kMetricMismatch if any series has a different metric.
MetricTable Tabulate(const std::vector<NormalizedSeries>& series, MetricKind metric);

struct TableCell {
  int year;
  std::string ticker;
  double value;
  bool operator==(const TableCell&) const = default;
};

// Present cells in year-major, ticker-minor order.
std::vector<TableCell> Flatten(const MetricTable& table);

// `metric,year,ticker,value`, one row per (year, ticker); missing cells have
// an empty value field.
std::string WriteMetricTableCsv(const MetricTable& table);

}  // namespace franfit

#endif  // FRANFIT_FUNDAMENTALS_HPP_
