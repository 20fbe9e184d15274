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

// Self-contained SVG 1.1 charts. Output depends only on the PlotSpec, so the
// same spec always renders to the same bytes.
//
// Element conventions, relied on by tests:
//   PriceLine          one <polyline> holding every point
//   NormalizedMetric   one <polyline> per contiguous run of present years
//   HistogramOverlay   one <rect> per bin, one <path> per fitted density
//   QQ                 one <circle> per pair plus a reference <line>
// Axes, ticks and legend swatches use <line> and <text> only.

#ifndef FRANFIT_SVG_HPP_
#define FRANFIT_SVG_HPP_

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "franfit/gof.hpp"
#include "franfit/market_data.hpp"

namespace franfit {

enum class PlotKind { kPriceLine, kNormalizedMetric, kHistogramOverlay, kQq };

struct PriceLinePayload {
  std::vector<PricePoint> points;
};

struct MetricLine {
  std::string label;
  std::vector<std::optional<double>> values;  // aligned with years
};

struct NormalizedMetricPayload {
  std::vector<int> years;
  std::vector<MetricLine> lines;
};

struct DensityCurve {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, density)
};

struct HistogramOverlayPayload {
  Histogram histogram;
  std::vector<DensityCurve> curves;
};

struct QqPayload {
  QQData data;
};

using PlotPayload = std::variant<PriceLinePayload, NormalizedMetricPayload,
                                 HistogramOverlayPayload, QqPayload>;

struct PlotSpec {
  PlotKind kind;
  int width = 800;
  int height = 500;
  std::string title;
  PlotPayload payload;
};

// Throws Error(kInvalidSpec) for non-positive dimensions, a payload that does
// not match `kind`, or an empty payload.
std::string RenderSvg(const PlotSpec& spec);

}  // namespace franfit

#endif  // FRANFIT_SVG_HPP_
