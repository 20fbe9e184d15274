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

// Minimal CSV helpers shared by the ingestion and reporting code. Fields may
// be double-quoted (with "" as an escaped quote) so that company names such as
// "Domino's Pizza, Inc." survive a round trip.

#ifndef FRANFIT_CSV_HPP_
#define FRANFIT_CSV_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace franfit::csv {

struct Line {
  std::size_t number;  // 1-based line number in the source text
  std::string_view text;
};

// Splits on LF, strips a trailing CR, and drops fully blank lines.
std::vector<Line> SplitLines(std::string_view content);

// Returns nullopt on an unterminated quote.
std::optional<std::vector<std::string>> SplitFields(std::string_view line);

std::string QuoteIfNeeded(std::string_view field);

// Shortest representation that parses back to the same double.
std::string FormatDouble(double value);

std::optional<double> ParseDouble(std::string_view text);
std::optional<long long> ParseInt(std::string_view text);

std::string_view Trim(std::string_view text);

}  // namespace franfit::csv

#endif  // FRANFIT_CSV_HPP_
