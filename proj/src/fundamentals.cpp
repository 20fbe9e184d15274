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

#include "franfit/fundamentals.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>

#include "franfit/csv.hpp"
#include "franfit/error.hpp"

namespace franfit {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

[[noreturn]] void Malformed(std::size_t line, std::string_view why) {
  throw Error(ErrorCode::kMalformedRow, "line " + std::to_string(line) + ": " + std::string(why));
}

}  // namespace

std::string_view MetricName(MetricKind metric) {
  switch (metric) {
    case MetricKind::kRevenue: return "Revenue";
    case MetricKind::kCostOfGoods: return "CostOfGoods";
    case MetricKind::kGrossProfit: return "GrossProfit";
    case MetricKind::kEps: return "EPS";
    case MetricKind::kCurrentAssets: return "CurrentAssets";
    case MetricKind::kInventory: return "Inventory";
    case MetricKind::kCurrentLiabilities: return "CurrentLiabilities";
    case MetricKind::kTotalLiabilities: return "TotalLiabilities";
  }
  return "";
}

MetricKind ParseMetric(std::string_view token) {
  const std::string wanted = Lower(csv::Trim(token));
  for (MetricKind m : kAllMetrics) {
    if (Lower(MetricName(m)) == wanted) return m;
  }
  throw Error(ErrorCode::kUnknownMetric, "unknown metric '" + std::string(token) + "'");
}

std::vector<AnnualSeries> ParseFundamentalsCsv(std::string_view content) {
  const auto lines = csv::SplitLines(content);
  if (lines.empty()) throw Error(ErrorCode::kEmptyFile, "file is empty");
  {
    auto header = csv::SplitFields(lines.front().text);
    const std::vector<std::string> expected = {"ticker", "metric", "year", "value"};
    bool ok = header && header->size() == expected.size();
    for (std::size_t i = 0; ok && i < expected.size(); ++i) {
      ok = Lower(csv::Trim((*header)[i])) == expected[i];
    }
    if (!ok) Malformed(lines.front().number, "unexpected header");
  }
  if (lines.size() == 1) throw Error(ErrorCode::kEmptyFile, "no fundamentals rows");

  std::vector<AnnualSeries> series;
  std::map<std::pair<std::string, MetricKind>, std::size_t> index;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto fields = csv::SplitFields(line.text);
    if (!fields || fields->size() != 4) Malformed(line.number, "expected 4 fields");
    std::string ticker(csv::Trim((*fields)[0]));
    if (ticker.empty()) Malformed(line.number, "empty ticker");
    const MetricKind metric = ParseMetric((*fields)[1]);
    const auto year = csv::ParseInt((*fields)[2]);
    if (!year) Malformed(line.number, "invalid year");
    const auto value = csv::ParseDouble((*fields)[3]);
    if (!value) Malformed(line.number, "invalid value");

    auto [it, inserted] = index.try_emplace({ticker, metric}, series.size());
    if (inserted) series.push_back({ticker, metric, {}});
    series[it->second].points.push_back({static_cast<int>(*year), *value});
  }

  for (auto& s : series) {
    std::stable_sort(s.points.begin(), s.points.end(),
                     [](const YearValue& a, const YearValue& b) { return a.year < b.year; });
    for (std::size_t i = 1; i < s.points.size(); ++i) {
      if (s.points[i].year == s.points[i - 1].year) {
        throw Error(ErrorCode::kDuplicateYear,
                    "duplicate year " + std::to_string(s.points[i].year) + " for " + s.ticker +
                        " " + std::string(MetricName(s.metric)));
      }
    }
  }
  return series;
}

NormalizedSeries Normalize(const AnnualSeries& series, YearWindow base) {
  if (base.start > base.end) {
    throw Error(ErrorCode::kInvalidWindow, "base window start is after its end");
  }
  double abs_sum = 0.0;
  std::size_t count = 0;
  for (const auto& p : series.points) {
    if (p.year >= base.start && p.year <= base.end) {
      abs_sum += std::fabs(p.value);
      ++count;
    }
  }
  if (count == 0) {
    throw Error(ErrorCode::kEmptyBaseWindow,
                series.ticker + " " + std::string(MetricName(series.metric)) +
                    " has no values inside the base window");
  }
  if (abs_sum == 0.0) {
    throw Error(ErrorCode::kZeroBaseDenominator,
                series.ticker + " " + std::string(MetricName(series.metric)) +
                    " is zero throughout the base window");
  }

  // v * count / sum|v| rather than v / mean|v|: with exactly representable
  // data the result is then identical for any rescaled copy of the series.
  const double dcount = static_cast<double>(count);
  NormalizedSeries out{series.ticker, series.metric, base, {}};
  out.points.reserve(series.points.size());
  for (const auto& p : series.points) {
    out.points.push_back({p.year, (p.value * dcount) / abs_sum});
  }
  return out;
}

MetricTable Tabulate(const std::vector<NormalizedSeries>& series, MetricKind metric) {
  MetricTable table{metric, {}, {}, {}};
  std::set<int> years;
  for (const auto& s : series) {
    if (s.metric != metric) {
      throw Error(ErrorCode::kMetricMismatch,
                  "series " + s.ticker + " carries " + std::string(MetricName(s.metric)) +
                      ", expected " + std::string(MetricName(metric)));
    }
    if (std::find(table.tickers.begin(), table.tickers.end(), s.ticker) == table.tickers.end()) {
      table.tickers.push_back(s.ticker);
    }
    for (const auto& p : s.points) years.insert(p.year);
  }
  table.years.assign(years.begin(), years.end());
  table.cells.assign(table.years.size(),
                     std::vector<std::optional<double>>(table.tickers.size()));
  for (const auto& s : series) {
    const auto t = static_cast<std::size_t>(
        std::find(table.tickers.begin(), table.tickers.end(), s.ticker) - table.tickers.begin());
    for (const auto& p : s.points) {
      const auto y = static_cast<std::size_t>(
          std::lower_bound(table.years.begin(), table.years.end(), p.year) - table.years.begin());
      table.cells[y][t] = p.value;
    }
  }
  return table;
}

std::vector<TableCell> Flatten(const MetricTable& table) {
  std::vector<TableCell> out;
  for (std::size_t y = 0; y < table.years.size(); ++y) {
    for (std::size_t t = 0; t < table.tickers.size(); ++t) {
      if (table.cells[y][t]) out.push_back({table.years[y], table.tickers[t], *table.cells[y][t]});
    }
  }
  return out;
}

std::string WriteMetricTableCsv(const MetricTable& table) {
  std::string out = "metric,year,ticker,value\n";
  const std::string metric(MetricName(table.metric));
  for (std::size_t y = 0; y < table.years.size(); ++y) {
    for (std::size_t t = 0; t < table.tickers.size(); ++t) {
      out += metric + ',' + std::to_string(table.years[y]) + ',' + table.tickers[t] + ',';
      if (table.cells[y][t]) out += csv::FormatDouble(*table.cells[y][t]);
      out += '\n';
    }
  }
  return out;
}

}  // namespace franfit
