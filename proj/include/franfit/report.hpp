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

// JSON and CSV encodings of analysis results.
//
// Fit document:
//   {"ticker": str, "n": int,
//    "fits": [{"kind": str, "params": {...}, "loglik": num, "converged": bool,
//              "iterations": int,
//              "gof": {"ks": num, "ad": num|null, "aic": num, "bic": num}}],
//    "failures": [{"kind": str, "error": str, "message": str}]}
// `fits` is in rank order (converged fits by AIC, then any unconverged fits);
// "ad" is null only when A^2 is undefined for that fit.
//
// Parameter objects by kind:
//   Weibull {"shape","scale"}   TruncatedWeibull {"shape","scale","truncation"}
//   Gamma {"shape","rate"}      InvGamma {"shape","scale"}   LogNormal {"mu","sigma"}

#ifndef FRANFIT_REPORT_HPP_
#define FRANFIT_REPORT_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "franfit/cohort.hpp"
#include "franfit/distributions.hpp"
#include "franfit/estimation.hpp"
#include "franfit/fundamentals.hpp"
#include "franfit/gof.hpp"

namespace franfit::report {

nlohmann::ordered_json ParamsToJson(const Distribution& dist);
// Inverse of ParamsToJson; throws Error(kInvalidParams).
Distribution ParamsFromJson(DistributionKind kind, const nlohmann::ordered_json& params);

nlohmann::ordered_json FitDocument(std::string_view ticker, std::size_t n,
                                   const std::vector<FitAttempt>& attempts,
                                   const std::vector<GofReport>& ranking,
                                   const Sample& sample);

// ticker,franchise_class,mu,sigma,best_model,dispersion,max_drawdown,
// recovery_days,status. Fields that do not apply are left empty.
std::string SummaryCsv(const std::vector<SummaryRow>& rows,
                       const std::map<std::string, DrawdownReport>& drawdowns,
                       const DispersionThresholds& thresholds);

nlohmann::ordered_json DrawdownToJson(const DrawdownReport& report);

nlohmann::ordered_json ComparisonDocument(const CohortComparison& comparison,
                                          const std::vector<SummaryRow>& rows,
                                          const std::map<std::string, DrawdownReport>& drawdowns,
                                          const DateWindow& recession,
                                          const DispersionThresholds& thresholds);

// {"metric": str, "years": [...], "tickers": [...], "cells": [[num|null]]}
nlohmann::ordered_json MetricTableToJson(const MetricTable& table);

// dump(2) plus a trailing newline.
std::string Dump(const nlohmann::ordered_json& doc);

}  // namespace franfit::report

#endif  // FRANFIT_REPORT_HPP_
