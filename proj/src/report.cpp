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

#include "franfit/report.hpp"

#include <cmath>

#include "franfit/csv.hpp"
#include "franfit/error.hpp"

namespace franfit::report {
namespace {

using Json = nlohmann::ordered_json;

Json NumberOrNull(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

template <class T>
Json OptionalNumber(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

double Field(const Json& params, const char* name) {
  if (!params.is_object() || !params.contains(name) || !params[name].is_number()) {
    throw Error(ErrorCode::kInvalidParams, std::string("missing numeric parameter '") + name + "'");
  }
  return params[name].get<double>();
}

Json FitEntry(const FitResult& fit, const GofReport* gof) {
  Json entry;
  entry["kind"] = KindName(fit.kind);
  entry["params"] = ParamsToJson(fit.params);
  entry["loglik"] = fit.loglik;
  entry["converged"] = fit.converged;
  entry["iterations"] = fit.iterations;
  if (gof) {
    entry["gof"] = {{"ks", gof->ks}, {"ad", NumberOrNull(gof->ad)}, {"aic", gof->aic},
                    {"bic", gof->bic}};
  } else {
    entry["gof"] = nullptr;
  }
  return entry;
}

}  // namespace

Json ParamsToJson(const Distribution& dist) {
  switch (KindOf(dist)) {
    case DistributionKind::kWeibull: {
      const auto& p = std::get<WeibullParams>(dist);
      return {{"shape", p.shape}, {"scale", p.scale}};
    }
    case DistributionKind::kTruncatedWeibull: {
      const auto& p = std::get<TruncatedWeibullParams>(dist);
      return {{"shape", p.shape}, {"scale", p.scale}, {"truncation", p.truncation}};
    }
    case DistributionKind::kGamma: {
      const auto& p = std::get<GammaParams>(dist);
      return {{"shape", p.shape}, {"rate", p.rate}};
    }
    case DistributionKind::kInvGamma: {
      const auto& p = std::get<InvGammaParams>(dist);
      return {{"shape", p.shape}, {"scale", p.scale}};
    }
    case DistributionKind::kLogNormal: {
      const auto& p = std::get<LogNormalParams>(dist);
      return {{"mu", p.mu}, {"sigma", p.sigma}};
    }
  }
  return Json::object();
}

Distribution ParamsFromJson(DistributionKind kind, const Json& params) {
  Distribution dist;
  switch (kind) {
    case DistributionKind::kWeibull:
      dist = WeibullParams{Field(params, "shape"), Field(params, "scale")};
      break;
    case DistributionKind::kTruncatedWeibull:
      dist = TruncatedWeibullParams{Field(params, "shape"), Field(params, "scale"),
                                    Field(params, "truncation")};
      break;
    case DistributionKind::kGamma:
      dist = GammaParams{Field(params, "shape"), Field(params, "rate")};
      break;
    case DistributionKind::kInvGamma:
      dist = InvGammaParams{Field(params, "shape"), Field(params, "scale")};
      break;
    case DistributionKind::kLogNormal:
      dist = LogNormalParams{Field(params, "mu"), Field(params, "sigma")};
      break;
  }
  Validate(dist);
  return dist;
}

Json FitDocument(std::string_view ticker, std::size_t n, const std::vector<FitAttempt>& attempts,
                 const std::vector<GofReport>& ranking, const Sample& sample) {
  Json doc;
  doc["ticker"] = ticker;
  doc["n"] = n;
  Json fits = Json::array();
  for (const auto& gof : ranking) {
    for (const auto& a : attempts) {
      if (a.ok() && a.kind == gof.kind) fits.push_back(FitEntry(*a.result, &gof));
    }
  }
  for (const auto& a : attempts) {
    if (a.ok() && !a.result->converged) {
      // Unconverged fits are not ranked but their KS/AD are still meaningful.
      Json entry = FitEntry(*a.result, nullptr);
      entry["gof"] = {{"ks", KsStatistic(sample, a.result->params)}, {"ad", nullptr},
                      {"aic", nullptr}, {"bic", nullptr}};
      fits.push_back(std::move(entry));
    }
  }
  doc["fits"] = std::move(fits);
  Json failures = Json::array();
  for (const auto& a : attempts) {
    if (!a.ok()) {
      failures.push_back({{"kind", KindName(a.kind)},
                          {"error", a.error ? ErrorCodeName(*a.error) : "Unknown"},
                          {"message", a.message}});
    }
  }
  doc["failures"] = std::move(failures);
  return doc;
}

std::string SummaryCsv(const std::vector<SummaryRow>& rows,
                       const std::map<std::string, DrawdownReport>& drawdowns,
                       const DispersionThresholds& thresholds) {
  std::string out =
      "ticker,franchise_class,mu,sigma,best_model,dispersion,max_drawdown,recovery_days,status\n";
  for (const auto& row : rows) {
    out += row.ticker + ',' + csv::QuoteIfNeeded(FranchiseToken(row.franchise_class)) + ',';
    if (row.status == RowStatus::kOk) {
      out += csv::FormatDouble(row.mu) + ',' + csv::FormatDouble(row.sigma) + ',' +
             std::string(KindName(row.best_model)) + ',' +
             std::string(DispersionName(ClassifyDispersion(row.sigma, thresholds))) + ',';
    } else {
      out += ",,,,";
    }
    const auto it = drawdowns.find(row.ticker);
    if (it != drawdowns.end()) {
      out += csv::FormatDouble(it->second.max_drawdown) + ',';
      if (it->second.recovery_days) out += std::to_string(*it->second.recovery_days);
    } else {
      out += ',';
    }
    out += ',' + std::string(RowStatusName(row.status)) + '\n';
  }
  return out;
}

Json DrawdownToJson(const DrawdownReport& r) {
  return {{"peak_date", r.peak_date.ToString()},
          {"peak_price", r.peak_price},
          {"trough_date", r.trough_date.ToString()},
          {"trough_price", r.trough_price},
          {"max_drawdown", r.max_drawdown},
          {"recovery_date", r.recovery_date ? Json(r.recovery_date->ToString()) : Json(nullptr)},
          {"recovery_days", OptionalNumber(r.recovery_days)}};
}

Json ComparisonDocument(const CohortComparison& comparison, const std::vector<SummaryRow>& rows,
                        const std::map<std::string, DrawdownReport>& drawdowns,
                        const DateWindow& recession, const DispersionThresholds& thresholds) {
  Json doc;
  doc["recession_window"] = {{"start", recession.start.ToString()},
                             {"end", recession.end.ToString()}};
  doc["dispersion_thresholds"] = {{"low_max", thresholds.low_max},
                                  {"high_min", thresholds.high_min}};
  Json cohorts = Json::array();
  for (const auto& c : comparison.cohorts) {
    cohorts.push_back({
        {"franchise_class", FranchiseClassName(c.franchise_class)},
        {"tickers", c.tickers},
        {"count", c.count},
        {"sigma", {{"mean", c.sigma_mean}, {"min", c.sigma_min}, {"max", c.sigma_max}}},
        {"dispersion",
         {{"Low", c.dispersion_tally[0]}, {"Medium", c.dispersion_tally[1]},
          {"High", c.dispersion_tally[2]}}},
        {"with_drawdown", c.with_drawdown},
        {"mean_max_drawdown", OptionalNumber(c.mean_max_drawdown)},
        {"unrecovered", c.unrecovered},
        {"mean_recovery_days", OptionalNumber(c.mean_recovery_days)},
    });
  }
  doc["cohorts"] = std::move(cohorts);
  Json tickers = Json::array();
  for (const auto& row : rows) {
    Json t;
    t["ticker"] = row.ticker;
    t["franchise_class"] = FranchiseClassName(row.franchise_class);
    t["status"] = RowStatusName(row.status);
    if (row.status == RowStatus::kOk) {
      t["mu"] = row.mu;
      t["sigma"] = row.sigma;
      t["best_model"] = KindName(row.best_model);
      t["dispersion"] = DispersionName(ClassifyDispersion(row.sigma, thresholds));
      t["n"] = row.n;
    } else {
      t["error"] = row.error;
    }
    const auto it = drawdowns.find(row.ticker);
    t["drawdown"] = it != drawdowns.end() ? DrawdownToJson(it->second) : Json(nullptr);
    tickers.push_back(std::move(t));
  }
  doc["tickers"] = std::move(tickers);
  return doc;
}

Json MetricTableToJson(const MetricTable& table) {
  Json cells = Json::array();
  for (const auto& row : table.cells) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(OptionalNumber(c));
    cells.push_back(std::move(r));
  }
  return {{"metric", MetricName(table.metric)},
          {"years", table.years},
          {"tickers", table.tickers},
          {"cells", std::move(cells)}};
}

std::string Dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace franfit::report
