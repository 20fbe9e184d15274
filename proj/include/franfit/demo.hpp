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

// Synthetic fixture trees for trying the pipeline without market data.
//
// The generated closes are NOT real prices. Each ticker gets a seeded
// log-price path whose level and spread are loosely patterned on published
// per-ticker log-normal estimates; WEN and DPZ additionally drop through the
// 2007-2009 recession and stay below their pre-recession peak.

#ifndef FRANFIT_DEMO_HPP_
#define FRANFIT_DEMO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "franfit/fundamentals.hpp"
#include "franfit/market_data.hpp"

namespace franfit {

struct DemoTicker {
  std::string ticker;
  std::string name;
  FranchiseClass franchise_class;
  double log_level;   // mean of log close
  double log_spread;  // approximate sd of log close
  bool declines;      // drops through the recession and never recovers
};

// The nine-company fast-food / consumer universe.
const std::vector<DemoTicker>& DemoUniverse();

// Business-day closes from `start` to `end` inclusive.
PriceSeries DemoPrices(const DemoTicker& t, Date start, Date end, std::uint64_t seed);

// Annual series for every metric, 2005..2019. WEN's EPS is negative in 2013.
std::vector<AnnualSeries> DemoFundamentals(std::uint64_t seed);
std::string WriteFundamentalsCsv(const std::vector<AnnualSeries>& series);

// Writes universe.csv, prices/<T>.csv, fundamentals.csv and franfit.conf.
// Returns the path to franfit.conf.
std::filesystem::path WriteDemoTree(const std::filesystem::path& dir, std::uint64_t seed);

}  // namespace franfit

#endif  // FRANFIT_DEMO_HPP_
