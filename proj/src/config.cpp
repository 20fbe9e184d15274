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

#include "franfit/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "franfit/csv.hpp"
#include "franfit/error.hpp"

namespace franfit {
namespace {

[[noreturn]] void Bad(std::string_view key, std::string_view why) {
  throw Error(ErrorCode::kInvalidConfig, std::string(key) + ": " + std::string(why));
}

std::filesystem::path Resolve(const std::filesystem::path& base, std::string_view value) {
  std::filesystem::path p{std::string(value)};
  if (p.is_relative() && !base.empty()) p = base / p;
  return p.lexically_normal();
}

std::set<OutputFormat> ParseFormats(std::string_view text) {
  std::set<OutputFormat> out;
  auto fields = csv::SplitFields(text);
  if (!fields) Bad("formats", "unterminated quote");
  for (const auto& raw : *fields) {
    const auto f = csv::Trim(raw);
    if (f == "json") {
      out.insert(OutputFormat::kJson);
    } else if (f == "csv") {
      out.insert(OutputFormat::kCsv);
    } else if (f == "svg") {
      out.insert(OutputFormat::kSvg);
    } else {
      Bad("formats", "unknown format '" + std::string(f) + "'");
    }
  }
  if (out.empty()) Bad("formats", "at least one format is required");
  return out;
}

}  // namespace

DispersionThresholds ParseDispersionThresholds(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) Bad("dispersion_thresholds", "expected low_max,high_min");
  const auto lo = csv::ParseDouble(text.substr(0, comma));
  const auto hi = csv::ParseDouble(text.substr(comma + 1));
  if (!lo || !hi) Bad("dispersion_thresholds", "expected two numbers");
  if (!(*lo < *hi)) {
    throw Error(ErrorCode::kInvalidThresholds, "dispersion thresholds need low_max < high_min");
  }
  return {*lo, *hi};
}

YearWindow ParseYearWindow(std::string_view text) {
  text = csv::Trim(text);
  const auto sep = text.find("..");
  std::optional<long long> start, end;
  if (sep != std::string_view::npos) {
    start = csv::ParseInt(text.substr(0, sep));
    end = csv::ParseInt(text.substr(sep + 2));
  }
  if (!start || !end) Bad("base_window", "expected START..END years");
  if (*start > *end) throw Error(ErrorCode::kInvalidWindow, "base window start is after its end");
  return {static_cast<int>(*start), static_cast<int>(*end)};
}

RunConfig ParseRunConfig(std::string_view text, const std::filesystem::path& base_dir) {
  RunConfig cfg;
  cfg.output_dir = Resolve(base_dir, "out");
  for (const auto& line : csv::SplitLines(text)) {
    const auto body = csv::Trim(line.text);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidConfig,
                  "line " + std::to_string(line.number) + ": expected key = value");
    }
    const auto key = csv::Trim(body.substr(0, eq));
    const auto value = csv::Trim(body.substr(eq + 1));

    if (key == "universe_path") {
      cfg.universe_path = Resolve(base_dir, value);
    } else if (key == "price_dir") {
      cfg.price_dir = Resolve(base_dir, value);
    } else if (key == "fundamentals_path") {
      cfg.fundamentals_path = Resolve(base_dir, value);
    } else if (key == "window") {
      cfg.window = ParseDateWindow(value);
    } else if (key == "base_window") {
      cfg.base_window = ParseYearWindow(value);
    } else if (key == "recession_window") {
      cfg.recession_window = ParseDateWindow(value);
    } else if (key == "dispersion_thresholds") {
      cfg.dispersion_thresholds = ParseDispersionThresholds(value);
    } else if (key == "output_dir") {
      cfg.output_dir = Resolve(base_dir, value);
    } else if (key == "formats") {
      cfg.formats = ParseFormats(value);
    } else if (key == "seed") {
      std::uint64_t seed = 0;
      auto res = std::from_chars(value.data(), value.data() + value.size(), seed);
      if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
        Bad("seed", "expected an unsigned 64-bit integer");
      }
      cfg.seed = seed;
    } else {
      Bad(key, "unknown key");
    }
  }
  return cfg;
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseRunConfig(ss.str(), path.parent_path());
}

}  // namespace franfit
