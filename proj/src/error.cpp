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

#include "franfit/error.hpp"

namespace franfit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyFile: return "EmptyFile";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kDuplicateDate: return "DuplicateDate";
    case ErrorCode::kNonPositiveClose: return "NonPositiveClose";
    case ErrorCode::kUnknownFranchiseToken: return "UnknownFranchiseToken";
    case ErrorCode::kDuplicateTicker: return "DuplicateTicker";
    case ErrorCode::kInvalidTicker: return "InvalidTicker";
    case ErrorCode::kInvalidWindow: return "InvalidWindow";
    case ErrorCode::kEmptySeries: return "EmptySeries";
    case ErrorCode::kInvalidSample: return "InvalidSample";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kInvalidProbability: return "InvalidProbability";
    case ErrorCode::kDegenerateSample: return "DegenerateSample";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kValueAtOrBelowTruncation: return "ValueAtOrBelowTruncation";
    case ErrorCode::kAllFamiliesFailed: return "AllFamiliesFailed";
    case ErrorCode::kEmptyGrid: return "EmptyGrid";
    case ErrorCode::kUnsupportedValue: return "UnsupportedValue";
    case ErrorCode::kBoundaryValue: return "BoundaryValue";
    case ErrorCode::kNotConverged: return "NotConverged";
    case ErrorCode::kNothingToRank: return "NothingToRank";
    case ErrorCode::kUnknownMetric: return "UnknownMetric";
    case ErrorCode::kDuplicateYear: return "DuplicateYear";
    case ErrorCode::kEmptyBaseWindow: return "EmptyBaseWindow";
    case ErrorCode::kZeroBaseDenominator: return "ZeroBaseDenominator";
    case ErrorCode::kMetricMismatch: return "MetricMismatch";
    case ErrorCode::kMissingSample: return "MissingSample";
    case ErrorCode::kInvalidThresholds: return "InvalidThresholds";
    case ErrorCode::kEmptyCohort: return "EmptyCohort";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace franfit
