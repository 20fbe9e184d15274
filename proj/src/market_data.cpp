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

#include "franfit/market_data.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>

#include "franfit/csv.hpp"
#include "franfit/error.hpp"

namespace franfit {
namespace {

std::string Lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

[[noreturn]] void Malformed(std::size_t line, std::string_view why) {
  throw Error(ErrorCode::kMalformedRow,
              "line " + std::to_string(line) + ": " + std::string(why));
}

void ExpectHeader(const std::vector<csv::Line>& lines,
                  const std::vector<std::string>& expected) {
  if (lines.empty()) throw Error(ErrorCode::kEmptyFile, "file is empty");
  auto fields = csv::SplitFields(lines.front().text);
  bool ok = fields && fields->size() == expected.size();
  for (std::size_t i = 0; ok && i < expected.size(); ++i) {
    ok = Lower(csv::Trim((*fields)[i])) == expected[i];
  }
  if (!ok) Malformed(lines.front().number, "unexpected header");
}

}  // namespace

Date Date::FromYmd(int year, unsigned month, unsigned day) {
  const std::chrono::year_month_day ymd{std::chrono::year{year},
                                        std::chrono::month{month},
                                        std::chrono::day{day}};
  if (!ymd.ok()) {
    throw Error(ErrorCode::kMalformedRow, "invalid calendar date");
  }
  return Date(std::chrono::sys_days{ymd});
}

std::optional<Date> Date::TryParse(std::string_view text) {
  text = csv::Trim(text);
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  }
  const auto year = csv::ParseInt(text.substr(0, 4));
  const auto month = csv::ParseInt(text.substr(5, 2));
  const auto day = csv::ParseInt(text.substr(8, 2));
  const std::chrono::year_month_day ymd{
      std::chrono::year{static_cast<int>(*year)},
      std::chrono::month{static_cast<unsigned>(*month)},
      std::chrono::day{static_cast<unsigned>(*day)}};
  if (!ymd.ok()) return std::nullopt;
  return Date(std::chrono::sys_days{ymd});
}

Date Date::Parse(std::string_view text) {
  auto date = TryParse(text);
  if (!date) {
    throw Error(ErrorCode::kMalformedRow,
                "invalid date '" + std::string(text) + "'");
  }
  return *date;
}

std::string Date::ToString() const {
  const std::chrono::year_month_day ymd{days_};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

int Date::Year() const {
  return static_cast<int>(std::chrono::year_month_day{days_}.year());
}

std::int64_t DaysBetween(Date from, Date to) {
  return to.DaysSinceEpoch() - from.DaysSinceEpoch();
}

DateWindow ParseDateWindow(std::string_view text) {
  text = csv::Trim(text);
  const auto sep = text.find("..");
  std::optional<Date> start, end;
  if (sep != std::string_view::npos) {
    start = Date::TryParse(text.substr(0, sep));
    end = Date::TryParse(text.substr(sep + 2));
  }
  if (!start || !end) {
    throw Error(ErrorCode::kInvalidWindow, "expected START..END dates, got '" + std::string(text) + "'");
  }
  if (*end < *start) throw Error(ErrorCode::kInvalidWindow, "window start is after its end");
  return {*start, *end};
}

FranchiseClass ParseFranchiseClass(std::string_view token) {
  const std::string t = Lower(csv::Trim(token));
  if (t == "yes") return FranchiseClass::kFranchised;
  if (t == "mixed") return FranchiseClass::kMixed;
  if (t == "no") return FranchiseClass::kNonFranchised;
  if (t == "no food outlet") return FranchiseClass::kNoFoodOutlet;
  throw Error(ErrorCode::kUnknownFranchiseToken,
              "unknown franchise token '" + std::string(token) + "'");
}

std::string_view FranchiseToken(FranchiseClass cls) {
  switch (cls) {
    case FranchiseClass::kFranchised: return "Yes";
    case FranchiseClass::kMixed: return "Mixed";
    case FranchiseClass::kNonFranchised: return "No";
    case FranchiseClass::kNoFoodOutlet: return "No food outlet";
  }
  return "";
}

std::string_view FranchiseClassName(FranchiseClass cls) {
  switch (cls) {
    case FranchiseClass::kFranchised: return "Franchised";
    case FranchiseClass::kMixed: return "Mixed";
    case FranchiseClass::kNonFranchised: return "NonFranchised";
    case FranchiseClass::kNoFoodOutlet: return "NoFoodOutlet";
  }
  return "";
}

bool IsValidTicker(std::string_view ticker) {
  if (ticker.empty() || ticker.size() > 8) return false;
  return std::all_of(ticker.begin(), ticker.end(),
                     [](char c) { return (c >= 'A' && c <= 'Z') || c == '.'; });
}

const CompanyRecord* Universe::Find(std::string_view ticker) const {
  for (const auto& c : companies) {
    if (c.ticker == ticker) return &c;
  }
  return nullptr;
}

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::kInvalidSample, "sample must contain at least one value");
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw Error(ErrorCode::kInvalidSample,
                  "sample values must be finite and strictly positive");
    }
  }
}

PriceSeries ParsePriceCsv(std::string_view content, std::string_view ticker) {
  const auto lines = csv::SplitLines(content);
  ExpectHeader(lines, {"date", "close"});
  if (lines.size() == 1) throw Error(ErrorCode::kEmptyFile, "no price rows");

  PriceSeries series{std::string(ticker), {}};
  series.points.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto fields = csv::SplitFields(line.text);
    if (!fields || fields->size() != 2) Malformed(line.number, "expected 2 fields");
    auto date = Date::TryParse((*fields)[0]);
    if (!date) Malformed(line.number, "invalid date");
    auto close = csv::ParseDouble((*fields)[1]);
    if (!close) Malformed(line.number, "invalid close");
    if (*close <= 0.0) {
      throw Error(ErrorCode::kNonPositiveClose,
                  "non-positive close on " + date->ToString());
    }
    series.points.push_back({*date, *close});
  }
  std::stable_sort(series.points.begin(), series.points.end(),
                   [](const PricePoint& a, const PricePoint& b) { return a.date < b.date; });
  for (std::size_t i = 1; i < series.points.size(); ++i) {
    if (series.points[i].date == series.points[i - 1].date) {
      throw Error(ErrorCode::kDuplicateDate,
                  "duplicate date " + series.points[i].date.ToString());
    }
  }
  return series;
}

std::string WritePriceCsv(const PriceSeries& series) {
  std::string out = "date,close\n";
  for (const auto& p : series.points) {
    out += p.date.ToString();
    out += ',';
    out += csv::FormatDouble(p.close);
    out += '\n';
  }
  return out;
}

Universe ParseUniverseCsv(std::string_view content) {
  const auto lines = csv::SplitLines(content);
  ExpectHeader(lines, {"ticker", "name", "franchise_class"});

  Universe universe;
  std::set<std::string, std::less<>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto fields = csv::SplitFields(line.text);
    if (!fields || fields->size() != 3) Malformed(line.number, "expected 3 fields");
    std::string ticker(csv::Trim((*fields)[0]));
    if (!IsValidTicker(ticker)) {
      throw Error(ErrorCode::kInvalidTicker, "invalid ticker '" + ticker + "'");
    }
    if (!seen.insert(ticker).second) {
      throw Error(ErrorCode::kDuplicateTicker, "duplicate ticker " + ticker);
    }
    universe.companies.push_back({ticker, std::string(csv::Trim((*fields)[1])),
                                  ParseFranchiseClass((*fields)[2])});
  }
  return universe;
}

std::string WriteUniverseCsv(const Universe& universe) {
  std::string out = "ticker,name,franchise_class\n";
  for (const auto& c : universe.companies) {
    out += c.ticker + ',' + csv::QuoteIfNeeded(c.name) + ',' +
           std::string(FranchiseToken(c.franchise_class)) + '\n';
  }
  return out;
}

PriceSeries SliceWindow(const PriceSeries& series, Date start, Date end) {
  if (end < start) {
    throw Error(ErrorCode::kInvalidWindow,
                "window start " + start.ToString() + " is after end " + end.ToString());
  }
  const auto by_date = [](const PricePoint& p, Date d) { return p.date < d; };
  auto first = std::lower_bound(series.points.begin(), series.points.end(), start, by_date);
  auto last = std::upper_bound(series.points.begin(), series.points.end(), end,
                               [](Date d, const PricePoint& p) { return d < p.date; });
  PriceSeries out{series.ticker, {}};
  if (first < last) out.points.assign(first, last);
  return out;
}

Sample StripTimestamps(const PriceSeries& series) {
  if (series.empty()) {
    throw Error(ErrorCode::kEmptySeries, "series " + series.ticker + " is empty");
  }
  std::vector<double> closes;
  closes.reserve(series.size());
  for (const auto& p : series.points) closes.push_back(p.close);
  return Sample(std::move(closes));
}

}  // namespace franfit
