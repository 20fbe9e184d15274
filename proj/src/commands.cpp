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

#include "franfit/commands.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "franfit/cohort.hpp"
#include "franfit/gof.hpp"
#include "franfit/report.hpp"

namespace franfit {
namespace {

namespace fs = std::filesystem;

constexpr int kCurvePoints = 200;

PriceSeries LoadPrices(const RunConfig& cfg, std::string_view ticker) {
  return ParsePriceCsv(ReadTextFile(PricePath(cfg, ticker)), ticker);
}

Sample SampleFor(const RunConfig& cfg, const PriceSeries& series) {
  if (!cfg.window) return StripTimestamps(series);
  return StripTimestamps(SliceWindow(series, cfg.window->start, cfg.window->end));
}

std::vector<GofReport> RankAttempts(const std::vector<FitAttempt>& attempts, const Sample& sample) {
  std::vector<FitResult> fits;
  for (const auto& a : attempts) {
    if (a.ok()) fits.push_back(*a.result);
  }
  return RankModels(fits, sample);
}

struct TickerOutcome {
  SummaryRow row;
  std::optional<DrawdownReport> drawdown;
  std::optional<PriceSeries> series;
  std::optional<Sample> sample;
};

TickerOutcome AnalyzeTicker(const RunConfig& cfg, const CompanyRecord& company) {
  TickerOutcome out;
  out.row.ticker = company.ticker;
  out.row.franchise_class = company.franchise_class;
  const fs::path path = PricePath(cfg, company.ticker);
  if (!fs::exists(path)) {
    out.row.status = RowStatus::kMissing;
    out.row.error = "no price file " + path.string();
    return out;
  }
  try {
    out.series = LoadPrices(cfg, company.ticker);
    out.sample = SampleFor(cfg, *out.series);
  } catch (const Error& e) {
    out.row.status = RowStatus::kFailed;
    out.row.error = std::string(ErrorCodeName(e.code())) + ": " + e.what();
    return out;
  }
  out.row = SummarizeTicker(company, *out.sample);
  try {
    out.drawdown = MaxDrawdown(*out.series, cfg.recession_window);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kTooFewPoints) throw;
  }
  return out;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
    case ErrorCode::kEmptyFile:
      return kExitIo;
    case ErrorCode::kDegenerateSample:
    case ErrorCode::kTooFewPoints:
    case ErrorCode::kNoConvergence:
    case ErrorCode::kValueAtOrBelowTruncation:
    case ErrorCode::kAllFamiliesFailed:
    case ErrorCode::kNotConverged:
    case ErrorCode::kNothingToRank:
    case ErrorCode::kEmptySeries:
    case ErrorCode::kEmptyCohort:
    case ErrorCode::kInvalidSample:
      return kExitFit;
    default:
      return kExitSchema;
  }
}

void ReportError(std::ostream& err, std::string_view command, ErrorCode code,
                 std::string_view message) {
  nlohmann::ordered_json line = {{"command", command},
                                 {"error", ErrorCodeName(code)},
                                 {"message", message}};
  err << line.dump() << '\n';
}

std::string ReadTextFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const fs::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

fs::path PricePath(const RunConfig& cfg, std::string_view ticker) {
  return cfg.price_dir / (std::string(ticker) + ".csv");
}

PlotSpec PriceLinePlot(const PriceSeries& series) {
  return {PlotKind::kPriceLine, 800, 500, "Daily close " + series.ticker,
          PriceLinePayload{series.points}};
}

PlotSpec PdfOverlayPlot(std::string_view ticker, const Sample& sample,
                        const std::vector<FitAttempt>& fits) {
  HistogramOverlayPayload payload{MakeHistogram(sample, FreedmanDiaconis{}), {}};
  const double lo = payload.histogram.bin_edges.front();
  const double hi = payload.histogram.bin_edges.back();
  for (const auto& a : fits) {
    if (!a.ok()) continue;
    DensityCurve curve{std::string(KindName(a.kind)), {}};
    for (int i = 0; i < kCurvePoints; ++i) {
      const double x = lo + (hi - lo) * static_cast<double>(i) / (kCurvePoints - 1);
      curve.points.emplace_back(x, Pdf(a.result->params, x));
    }
    payload.curves.push_back(std::move(curve));
  }
  return {PlotKind::kHistogramOverlay, 800, 500,
          "Closing-price distribution " + std::string(ticker), std::move(payload)};
}

PlotSpec QqPlot(std::string_view ticker, const Sample& sample, const FitResult& fit) {
  return {PlotKind::kQq, 600, 600,
          "Q-Q " + std::string(ticker) + " vs " + std::string(KindName(fit.kind)),
          QqPayload{QqPoints(sample, fit.params)}};
}

PlotSpec MetricPlot(const MetricTable& table, YearWindow base) {
  NormalizedMetricPayload payload{table.years, {}};
  for (std::size_t t = 0; t < table.tickers.size(); ++t) {
    MetricLine line{table.tickers[t], {}};
    for (std::size_t y = 0; y < table.years.size(); ++y) line.values.push_back(table.cells[y][t]);
    payload.lines.push_back(std::move(line));
  }
  return {PlotKind::kNormalizedMetric, 800, 500,
          std::string(MetricName(table.metric)) + " normalized over " +
              std::to_string(base.start) + "-" + std::to_string(base.end),
          std::move(payload)};
}

int CmdFit(const RunConfig& cfg, std::string_view ticker, std::ostream& err) {
  try {
    const PriceSeries series = LoadPrices(cfg, ticker);
    const Sample sample = SampleFor(cfg, series);
    const auto attempts = FitAll(sample);
    const auto ranking = RankAttempts(attempts, sample);
    const auto doc = report::FitDocument(ticker, sample.n(), attempts, ranking, sample);
    WriteTextFile(cfg.output_dir / "fits" / (std::string(ticker) + ".json"), report::Dump(doc));
    if (cfg.Wants(OutputFormat::kSvg)) {
      WriteTextFile(cfg.output_dir / "plots" / (std::string(ticker) + "_pdf.svg"),
                    RenderSvg(PdfOverlayPlot(ticker, sample, attempts)));
    }
    return kExitOk;
  } catch (const Error& e) {
    ReportError(err, "fit", e.code(), e.what());
    return ExitCodeFor(e.code());
  }
}

int CmdCohort(const RunConfig& cfg, std::ostream& err) {
  try {
    const Universe universe = ParseUniverseCsv(ReadTextFile(cfg.universe_path));

    // Tickers are independent; results are collected back in universe order.
    std::vector<std::future<TickerOutcome>> pending;
    pending.reserve(universe.companies.size());
    for (const auto& company : universe.companies) {
      pending.push_back(std::async(std::launch::async, AnalyzeTicker, std::cref(cfg),
                                   std::cref(company)));
    }
    std::vector<TickerOutcome> outcomes;
    outcomes.reserve(pending.size());
    for (auto& f : pending) outcomes.push_back(f.get());

    std::vector<SummaryRow> rows;
    std::map<std::string, DrawdownReport> drawdowns;
    for (const auto& o : outcomes) {
      rows.push_back(o.row);
      if (o.drawdown) drawdowns.emplace(o.row.ticker, *o.drawdown);
      if (o.row.status != RowStatus::kOk) {
        ReportError(err, "cohort", o.row.status == RowStatus::kMissing ? ErrorCode::kIo
                                                                       : ErrorCode::kAllFamiliesFailed,
                    o.row.ticker + ": " + o.row.error);
      }
    }

    if (cfg.Wants(OutputFormat::kCsv)) {
      WriteTextFile(cfg.output_dir / "summary.csv",
                    report::SummaryCsv(rows, drawdowns, cfg.dispersion_thresholds));
    }
    const bool any_ok = std::any_of(rows.begin(), rows.end(),
                                    [](const SummaryRow& r) { return r.status == RowStatus::kOk; });
    if (!any_ok) {
      ReportError(err, "cohort", ErrorCode::kEmptyCohort, "no ticker could be summarized");
      return kExitFit;
    }
    const CohortComparison comparison = CompareCohorts(rows, drawdowns, cfg.dispersion_thresholds);
    if (cfg.Wants(OutputFormat::kJson)) {
      WriteTextFile(cfg.output_dir / "comparison.json",
                    report::Dump(report::ComparisonDocument(comparison, rows, drawdowns,
                                                            cfg.recession_window,
                                                            cfg.dispersion_thresholds)));
    }
    for (const auto& o : outcomes) {
      if (o.row.status != RowStatus::kOk) continue;
      const std::string& t = o.row.ticker;
      if (cfg.Wants(OutputFormat::kJson)) {
        WriteTextFile(cfg.output_dir / "fits" / (t + ".json"),
                      report::Dump(report::FitDocument(t, o.sample->n(), o.row.fits,
                                                       o.row.ranking, *o.sample)));
      }
      if (cfg.Wants(OutputFormat::kSvg)) {
        WriteTextFile(cfg.output_dir / "plots" / (t + "_price.svg"),
                      RenderSvg(PriceLinePlot(*o.series)));
        WriteTextFile(cfg.output_dir / "plots" / (t + "_pdf.svg"),
                      RenderSvg(PdfOverlayPlot(t, *o.sample, o.row.fits)));
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    ReportError(err, "cohort", e.code(), e.what());
    return ExitCodeFor(e.code());
  }
}

int CmdFundamentals(const RunConfig& cfg, std::ostream& err) {
  try {
    if (!cfg.fundamentals_path) {
      throw Error(ErrorCode::kInvalidConfig, "fundamentals_path is not configured");
    }
    const auto series = ParseFundamentalsCsv(ReadTextFile(*cfg.fundamentals_path));
    for (MetricKind metric : kAllMetrics) {
      std::vector<NormalizedSeries> normalized;
      bool present = false;
      for (const auto& s : series) {
        if (s.metric != metric) continue;
        present = true;
        try {
          normalized.push_back(Normalize(s, cfg.base_window));
        } catch (const Error& e) {
          // Series that cannot be normalized are left out of the table.
          ReportError(err, "fundamentals", e.code(), e.what());
        }
      }
      if (!present) continue;
      const MetricTable table = Tabulate(normalized, metric);
      const fs::path stem = cfg.output_dir / "fundamentals" / std::string(MetricName(metric));
      WriteTextFile(fs::path(stem).concat(".csv"), WriteMetricTableCsv(table));
      if (cfg.Wants(OutputFormat::kJson)) {
        WriteTextFile(fs::path(stem).concat(".json"),
                      report::Dump(report::MetricTableToJson(table)));
      }
      if (cfg.Wants(OutputFormat::kSvg) && !table.tickers.empty()) {
        WriteTextFile(fs::path(stem).concat(".svg"), RenderSvg(MetricPlot(table, cfg.base_window)));
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    ReportError(err, "fundamentals", e.code(), e.what());
    return ExitCodeFor(e.code());
  }
}

int CmdPlot(const RunConfig& cfg, std::string_view ticker, std::string_view kind,
            std::ostream& err) {
  try {
    if (kind != "price" && kind != "pdf" && kind != "qq") {
      throw Error(ErrorCode::kInvalidSpec,
                  "unknown plot kind '" + std::string(kind) + "' (expected price, pdf, qq)");
    }
    const PriceSeries series = LoadPrices(cfg, ticker);
    PlotSpec spec;
    if (kind == "price") {
      spec = PriceLinePlot(cfg.window ? SliceWindow(series, cfg.window->start, cfg.window->end)
                                      : series);
    } else {
      const Sample sample = SampleFor(cfg, series);
      const auto attempts = FitAll(sample);
      if (kind == "pdf") {
        spec = PdfOverlayPlot(ticker, sample, attempts);
      } else {
        const auto ranking = RankAttempts(attempts, sample);
        const auto best = std::find_if(attempts.begin(), attempts.end(), [&](const FitAttempt& a) {
          return a.kind == ranking.front().kind;
        });
        spec = QqPlot(ticker, sample, *best->result);
      }
    }
    WriteTextFile(cfg.output_dir / "plots" / (std::string(ticker) + "_" + std::string(kind) + ".svg"),
                  RenderSvg(spec));
    return kExitOk;
  } catch (const Error& e) {
    ReportError(err, "plot", e.code(), e.what());
    return ExitCodeFor(e.code());
  }
}

}  // namespace franfit
