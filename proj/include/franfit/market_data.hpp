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

// Price and company-universe ingestion.
//
// Closes are taken as given: no split or dividend adjustment is applied, so
// callers wanting adjusted analysis must supply adjusted closes. Missing
// trading days are not imputed.

#ifndef FRANFIT_MARKET_DATA_HPP_
#define FRANFIT_MARKET_DATA_HPP_

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace franfit {

// Calendar date stored as days since 1970-01-01.
class Date {
 public:
  constexpr Date() = default;
  explicit constexpr Date(std::chrono::sys_days days) : days_(days) {}

  // Throws Error(kMalformedRow) unless `text` is a valid YYYY-MM-DD date.
  static Date Parse(std::string_view text);
  static std::optional<Date> TryParse(std::string_view text);
  static Date FromYmd(int year, unsigned month, unsigned day);

  std::string ToString() const;
  int Year() const;
  std::int64_t DaysSinceEpoch() const { return days_.time_since_epoch().count(); }
  std::chrono::sys_days SysDays() const { return days_; }

  friend constexpr auto operator<=>(const Date&, const Date&) = default;

 private:
  std::chrono::sys_days days_{};
};

// Signed number of calendar days from `from` to `to`.
std::int64_t DaysBetween(Date from, Date to);

// Inclusive date range.
struct DateWindow {
  Date start;
  Date end;
  bool operator==(const DateWindow&) const = default;
};

// Parses "YYYY-MM-DD..YYYY-MM-DD"; throws kInvalidWindow.
DateWindow ParseDateWindow(std::string_view text);

enum class FranchiseClass { kFranchised, kMixed, kNonFranchised, kNoFoodOutlet };

// Case-insensitive on "Yes", "Mixed", "No", "No food outlet".
FranchiseClass ParseFranchiseClass(std::string_view token);
// Canonical CSV token ("Yes", "Mixed", "No", "No food outlet").
std::string_view FranchiseToken(FranchiseClass cls);
// Identifier-style name ("Franchised", "Mixed", "NonFranchised", "NoFoodOutlet").
std::string_view FranchiseClassName(FranchiseClass cls);

struct CompanyRecord {
  std::string ticker;
  std::string name;
  FranchiseClass franchise_class;

  bool operator==(const CompanyRecord&) const = default;
};

// 1-8 characters, A-Z and '.' only.
bool IsValidTicker(std::string_view ticker);

struct Universe {
  std::vector<CompanyRecord> companies;

  const CompanyRecord* Find(std::string_view ticker) const;
};

struct PricePoint {
  Date date;
  double close;

  bool operator==(const PricePoint&) const = default;
};

struct PriceSeries {
  std::string ticker;
  std::vector<PricePoint> points;  // strictly increasing by date

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
  bool operator==(const PriceSeries&) const = default;
};

// Unordered collection of strictly positive, finite values (timestamps
// already discarded). Construction validates.
class Sample {
 public:
  // Throws Error(kInvalidSample) when empty or any value is not finite and > 0.
  explicit Sample(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t n() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  bool operator==(const Sample&) const = default;

 private:
  std::vector<double> values_;
};

PriceSeries ParsePriceCsv(std::string_view content, std::string_view ticker);
std::string WritePriceCsv(const PriceSeries& series);

Universe ParseUniverseCsv(std::string_view content);
std::string WriteUniverseCsv(const Universe& universe);

// Inclusive on both ends; throws Error(kInvalidWindow) if start > end.
PriceSeries SliceWindow(const PriceSeries& series, Date start, Date end);

// Throws Error(kEmptySeries) for an empty series.
Sample StripTimestamps(const PriceSeries& series);

}  // namespace franfit

#endif  // FRANFIT_MARKET_DATA_HPP_
