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

// Run configuration, read from a flat `key = value` file. Blank lines and
// lines starting with '#' are ignored. Keys:
//
//   universe_path          universe CSV
//   price_dir              directory holding <TICKER>.csv price files
//   fundamentals_path      fundamentals CSV (optional)
//   window                 YYYY-MM-DD..YYYY-MM-DD sample window (optional)
//   base_window            YYYY..YYYY normalization years (default 2007..2011)
//   recession_window       YYYY-MM-DD..YYYY-MM-DD (default 2007-10-01..2009-06-30)
//   dispersion_thresholds  low_max,high_min (default 0.15,0.35)
//   output_dir             where artifacts are written
//   formats                comma list from json,csv,svg (default all three)
//   seed                   unsigned 64-bit seed for synthetic data
//
// Relative paths resolve against the directory containing the config file.

#ifndef FRANFIT_CONFIG_HPP_
#define FRANFIT_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "franfit/cohort.hpp"
#include "franfit/fundamentals.hpp"
#include "franfit/market_data.hpp"

namespace franfit {

enum class OutputFormat { kJson, kCsv, kSvg };

struct RunConfig {
  std::filesystem::path universe_path;
  std::filesystem::path price_dir;
  std::optional<std::filesystem::path> fundamentals_path;
  std::optional<DateWindow> window;
  YearWindow base_window = kDefaultBaseWindow;
  DateWindow recession_window = DefaultRecessionWindow();
  DispersionThresholds dispersion_thresholds;
  std::filesystem::path output_dir = "out";
  std::set<OutputFormat> formats = {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kSvg};
  std::uint64_t seed = 0;

  bool Wants(OutputFormat f) const { return formats.contains(f); }
};

// Throws Error(kInvalidConfig) on unknown keys or unparsable values, and
// Error(kInvalidWindow) on badly ordered windows.
RunConfig ParseRunConfig(std::string_view text, const std::filesystem::path& base_dir = {});
// Throws Error(kIo) when the file cannot be read.
RunConfig LoadRunConfig(const std::filesystem::path& path);

DispersionThresholds ParseDispersionThresholds(std::string_view text);
YearWindow ParseYearWindow(std::string_view text);

}  // namespace franfit

#endif  // FRANFIT_CONFIG_HPP_
