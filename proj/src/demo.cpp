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

#include "franfit/demo.hpp"

#include <chrono>
#include <cmath>

#include "franfit/commands.hpp"
#include "franfit/cohort.hpp"
#include "franfit/csv.hpp"
#include "franfit/random.hpp"
#include "franfit/special_functions.hpp"

namespace franfit {
namespace {

// AR(1) persistence of the daily log-price deviation.
constexpr double kPersistence = 0.995;

double StdNormal(SplitMix64& rng) { return special::NormalQuantile(rng.NextOpenUnit()); }

std::uint64_t TickerSeed(std::uint64_t seed, std::string_view ticker) {
  // FNV-1a over the ticker, mixed with the run seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : ticker) h = (h ^ c) * 0x100000001b3ULL;
  return h ^ (seed * 0x9E3779B97F4A7C15ULL);
}

bool IsBusinessDay(Date d) {
  const std::chrono::weekday wd{d.SysDays()};
  return wd != std::chrono::Saturday && wd != std::chrono::Sunday;
}

// Piecewise-linear recession profile: +1 before the window, -1 after its
// trough, linear in between.
double RecessionShape(Date d, const DateWindow& w) {
  const Date trough = Date::FromYmd(2009, 3, 1);
  if (d < w.start) return 1.0;
  if (d >= trough) return -1.0;
  const double t = static_cast<double>(DaysBetween(w.start, d)) /
                   static_cast<double>(DaysBetween(w.start, trough));
  return 1.0 - 2.0 * t;
}

}  // namespace

const std::vector<DemoTicker>& DemoUniverse() {
  static const std::vector<DemoTicker> kUniverse = {
      {"MCD", "Mcdonald's Corp", FranchiseClass::kFranchised, 4.012, 0.096, false},
      {"WEN", "Wendys Co", FranchiseClass::kFranchised, 2.006, 0.562, true},
      {"DPZ", "Domino's Pizza, Inc.", FranchiseClass::kFranchised, 2.458, 0.5301, true},
      {"SBUX", "Starbucks Corporation", FranchiseClass::kMixed, 2.2177, 0.3835, false},
      {"CBRL", "Cracker Barrel Old Country Store, Inc.", FranchiseClass::kNonFranchised, 3.4525,
       0.0105, false},
      {"CMG", "Chipotle Mexican Grill, Inc.", FranchiseClass::kNonFranchised, 4.3901, 0.2931,
       false},
      {"K", "Kellogg Company", FranchiseClass::kNonFranchised, 3.9004, 0.10006, false},
      {"KO", "Coca-Cola Co", FranchiseClass::kNoFoodOutlet, 3.2538, 0.1161, false},
      {"PM", "Philip Morris International Inc.", FranchiseClass::kNonFranchised, 3.8179, 0.1296,
       false},
  };
  return kUniverse;
}

PriceSeries DemoPrices(const DemoTicker& t, Date start, Date end, std::uint64_t seed) {
  SplitMix64 rng(TickerSeed(seed, t.ticker));
  const DateWindow recession = DefaultRecessionWindow();
  const double innovation = std::sqrt(1.0 - kPersistence * kPersistence);
  // Declining tickers: most of the spread comes from the recession step.
  const double trend_weight = t.declines ? 0.9 : 0.0;
  const double noise_weight = std::sqrt(1.0 - trend_weight * trend_weight);

  PriceSeries series{t.ticker, {}};
  double z = StdNormal(rng);
  for (auto d = start.SysDays(); d <= end.SysDays(); d += std::chrono::days{1}) {
    const Date date{d};
    if (!IsBusinessDay(date)) continue;
    z = kPersistence * z + innovation * StdNormal(rng);
    const double dev = trend_weight * RecessionShape(date, recession) + noise_weight * z;
    const double close = std::exp(t.log_level + t.log_spread * dev);
    // Quote to the cent, as exchanges do; never below one cent.
    series.points.push_back({date, std::max(0.01, std::round(close * 100.0) / 100.0)});
  }
  return series;
}

std::vector<AnnualSeries> DemoFundamentals(std::uint64_t seed) {
  std::vector<AnnualSeries> out;
  for (const auto& t : DemoUniverse()) {
    SplitMix64 rng(TickerSeed(seed, t.ticker) ^ 0x5bd1e995ULL);
    const double size = std::exp(t.log_level);
    for (MetricKind m : kAllMetrics) {
      AnnualSeries s{t.ticker, m, {}};
      const double base = size * (1.0 + static_cast<int>(m)) * 10.0;
      const double growth = 0.02 + 0.04 * rng.NextOpenUnit();
      for (int year = 2005; year <= 2019; ++year) {
        double v = base * std::pow(1.0 + growth, year - 2005) * (1.0 + 0.05 * StdNormal(rng));
        if (m == MetricKind::kEps) v = std::round(v) / 100.0;
        if (m == MetricKind::kEps && t.ticker == "WEN" && year == 2013) v = -0.3;
        s.points.push_back({year, v});
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::string WriteFundamentalsCsv(const std::vector<AnnualSeries>& series) {
  std::string out = "ticker,metric,year,value\n";
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      out += s.ticker + ',' + std::string(MetricName(s.metric)) + ',' + std::to_string(p.year) +
             ',' + csv::FormatDouble(p.value) + '\n';
    }
  }
  return out;
}

std::filesystem::path WriteDemoTree(const std::filesystem::path& dir, std::uint64_t seed) {
  const DateWindow study = SuggestedStudyWindow();
  Universe universe;
  for (const auto& t : DemoUniverse()) {
    universe.companies.push_back({t.ticker, t.name, t.franchise_class});
    WriteTextFile(dir / "prices" / (t.ticker + ".csv"),
                  WritePriceCsv(DemoPrices(t, study.start, study.end, seed)));
  }
  WriteTextFile(dir / "universe.csv", WriteUniverseCsv(universe));
  WriteTextFile(dir / "fundamentals.csv", WriteFundamentalsCsv(DemoFundamentals(seed)));
  const auto conf = dir / "franfit.conf";
  WriteTextFile(conf, "# Synthetic demo tree (not real market data)\n"
                      "universe_path = universe.csv\n"
                      "price_dir = prices\n"
                      "fundamentals_path = fundamentals.csv\n"
                      "window = " + study.start.ToString() + ".." + study.end.ToString() + "\n"
                      "output_dir = out\n"
                      "formats = json,csv,svg\n"
                      "seed = " + std::to_string(seed) + "\n");
  return conf;
}

}  // namespace franfit
