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

#ifndef FRANFIT_ERROR_HPP_
#define FRANFIT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace franfit {

// Every failure the library reports carries one of these codes. The names are
// stable: they appear verbatim in CLI error output and JSON "status" fields.
enum class ErrorCode {
  // ingestion
  kEmptyFile,
  kMalformedRow,
  kDuplicateDate,
  kNonPositiveClose,
  kUnknownFranchiseToken,
  kDuplicateTicker,
  kInvalidTicker,
  kInvalidWindow,
  kEmptySeries,
  kInvalidSample,
  // distributions
  kInvalidParams,
  kInvalidProbability,
  // estimation
  kDegenerateSample,
  kTooFewPoints,
  kNoConvergence,
  kValueAtOrBelowTruncation,
  kAllFamiliesFailed,
  kEmptyGrid,
  // goodness of fit
  kUnsupportedValue,
  kBoundaryValue,
  kNotConverged,
  kNothingToRank,
  // fundamentals
  kUnknownMetric,
  kDuplicateYear,
  kEmptyBaseWindow,
  kZeroBaseDenominator,
  kMetricMismatch,
  // cohort
  kMissingSample,
  kInvalidThresholds,
  kEmptyCohort,
  // reporting
  kInvalidSpec,
  kInvalidConfig,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace franfit

#endif  // FRANFIT_ERROR_HPP_
