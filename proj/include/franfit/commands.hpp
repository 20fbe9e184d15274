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

// The pipeline behind each CLI subcommand. Commands never throw: failures are
// written to `err` as one JSON object per line and reflected in the exit code.
//
// Exit codes: 0 success, 2 I/O, 3 fitting failure, 4 schema/metric error.

#ifndef FRANFIT_COMMANDS_HPP_
#define FRANFIT_COMMANDS_HPP_

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "franfit/config.hpp"
#include "franfit/error.hpp"
#include "franfit/estimation.hpp"
#include "franfit/fundamentals.hpp"
#include "franfit/svg.hpp"

namespace franfit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 2;
inline constexpr int kExitFit = 3;
inline constexpr int kExitSchema = 4;

int ExitCodeFor(ErrorCode code);

// {"command":...,"error":...,"message":...} on a single line.
void ReportError(std::ostream& err, std::string_view command, ErrorCode code,
                 std::string_view message);

std::string ReadTextFile(const std::filesystem::path& path);
// Creates parent directories as needed.
void WriteTextFile(const std::filesystem::path& path, std::string_view content);

std::filesystem::path PricePath(const RunConfig& cfg, std::string_view ticker);

PlotSpec PriceLinePlot(const PriceSeries& series);
// Histogram (Freedman-Diaconis) with one density curve per successful fit.
PlotSpec PdfOverlayPlot(std::string_view ticker, const Sample& sample,
                        const std::vector<FitAttempt>& fits);
PlotSpec QqPlot(std::string_view ticker, const Sample& sample, const FitResult& fit);
PlotSpec MetricPlot(const MetricTable& table, YearWindow base);

// Writes <out>/fits/<T>.json and, with svg enabled, <out>/plots/<T>_pdf.svg.
int CmdFit(const RunConfig& cfg, std::string_view ticker, std::ostream& err);

// Writes summary.csv, comparison.json, per-ticker fit documents, and plots.
int CmdCohort(const RunConfig& cfg, std::ostream& err);

// Writes <out>/fundamentals/<Metric>.csv (+ .json, .svg) per metric present.
int CmdFundamentals(const RunConfig& cfg, std::ostream& err);

// kind is one of "price", "pdf", "qq". Writes <out>/plots/<T>_<kind>.svg.
int CmdPlot(const RunConfig& cfg, std::string_view ticker, std::string_view kind,
            std::ostream& err);

}  // namespace franfit

#endif  // FRANFIT_COMMANDS_HPP_
