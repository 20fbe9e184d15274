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

#include "franfit/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string_view>

#include "franfit/error.hpp"

namespace franfit {
namespace {

constexpr std::array<std::string_view, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};

constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;  // room for the legend
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;
constexpr int kTicks = 5;

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string Escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void Add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  // Widens empty or zero-width ranges so scales stay finite.
  void Fix() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (lo == hi) {
      const double pad = lo == 0.0 ? 1.0 : std::fabs(lo) * 0.05;
      lo -= pad;
      hi += pad;
    }
  }
};

class Canvas {
 public:
  Canvas(const PlotSpec& spec, Range x, Range y) : w_(spec.width), h_(spec.height), x_(x), y_(y) {
    x_.Fix();
    y_.Fix();
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
            std::to_string(w_) + "\" height=\"" + std::to_string(h_) + "\" viewBox=\"0 0 " +
            std::to_string(w_) + " " + std::to_string(h_) +
            "\" style=\"background:#ffffff\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out_ += "<title>" + Escape(spec.title) + "</title>\n";
    out_ += "<text x=\"" + Num(w_ / 2.0) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" +
            Escape(spec.title) + "</text>\n";
  }

  double X(double v) const {
    return kLeft + (v - x_.lo) / (x_.hi - x_.lo) * (w_ - kLeft - kRight);
  }
  double Y(double v) const {
    return h_ - kBottom - (v - y_.lo) / (y_.hi - y_.lo) * (h_ - kTop - kBottom);
  }
  const Range& xr() const { return x_; }
  const Range& yr() const { return y_; }

  template <class XLabel>
  void Axes(XLabel x_label) {
    const std::string x0 = Num(kLeft), x1 = Num(w_ - kRight);
    const std::string y0 = Num(h_ - kBottom), y1 = Num(kTop);
    out_ += "<g stroke=\"#000000\" stroke-width=\"1\">\n";
    out_ += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x1 + "\" y2=\"" + y0 + "\"/>\n";
    out_ += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x0 + "\" y2=\"" + y1 + "\"/>\n";
    out_ += "</g>\n";
    for (int i = 0; i < kTicks; ++i) {
      const double t = static_cast<double>(i) / (kTicks - 1);
      const double xv = x_.lo + t * (x_.hi - x_.lo);
      const double yv = y_.lo + t * (y_.hi - y_.lo);
      const std::string px = Num(X(xv)), py = Num(Y(yv));
      out_ += "<line x1=\"" + px + "\" y1=\"" + y0 + "\" x2=\"" + px + "\" y2=\"" +
              Num(h_ - kBottom + 5) + "\" stroke=\"#000000\"/>\n";
      out_ += "<text x=\"" + px + "\" y=\"" + Num(h_ - kBottom + 18) +
              "\" text-anchor=\"middle\">" + Escape(x_label(xv)) + "</text>\n";
      out_ += "<line x1=\"" + Num(kLeft - 5) + "\" y1=\"" + py + "\" x2=\"" + x0 + "\" y2=\"" + py +
              "\" stroke=\"#000000\"/>\n";
      out_ += "<text x=\"" + Num(kLeft - 8) + "\" y=\"" + Num(Y(yv) + 4) +
              "\" text-anchor=\"end\">" + Label(yv) + "</text>\n";
    }
  }

  void LegendEntry(std::size_t index, std::string_view color, std::string_view label) {
    const double y = kTop + 16.0 * static_cast<double>(index);
    const double x = w_ - kRight + 10.0;
    out_ += "<line x1=\"" + Num(x) + "\" y1=\"" + Num(y) + "\" x2=\"" + Num(x + 20) + "\" y2=\"" +
            Num(y) + "\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\"/>\n";
    out_ += "<text x=\"" + Num(x + 26) + "\" y=\"" + Num(y + 4) + "\">" + Escape(label) + "</text>\n";
  }

  std::string& body() { return out_; }

  std::string Finish() {
    out_ += "</svg>\n";
    return std::move(out_);
  }

 private:
  int w_;
  int h_;
  Range x_;
  Range y_;
  std::string out_;
};

std::string_view Color(std::size_t i) { return kPalette[i % kPalette.size()]; }

std::string RenderPriceLine(const PlotSpec& spec, const PriceLinePayload& p) {
  if (p.points.empty()) throw Error(ErrorCode::kInvalidSpec, "price line needs points");
  Range x, y;
  for (const auto& pt : p.points) {
    x.Add(static_cast<double>(pt.date.DaysSinceEpoch()));
    y.Add(pt.close);
  }
  y.lo = std::min(y.lo, 0.0);
  Canvas c(spec, x, y);
  c.Axes([](double days) {
    const Date d{std::chrono::sys_days{std::chrono::days{static_cast<long>(std::lround(days))}}};
    return d.ToString().substr(0, 7);
  });
  std::string pts;
  for (const auto& pt : p.points) {
    if (!pts.empty()) pts += ' ';
    pts += Num(c.X(static_cast<double>(pt.date.DaysSinceEpoch()))) + ',' + Num(c.Y(pt.close));
  }
  c.body() += "<polyline fill=\"none\" stroke=\"" + std::string(Color(0)) +
              "\" stroke-width=\"1\" points=\"" + pts + "\"/>\n";
  return c.Finish();
}

std::string RenderNormalizedMetric(const PlotSpec& spec, const NormalizedMetricPayload& p) {
  if (p.years.empty() || p.lines.empty()) {
    throw Error(ErrorCode::kInvalidSpec, "normalized metric plot needs years and lines");
  }
  Range x, y;
  for (int yr : p.years) x.Add(yr);
  for (const auto& line : p.lines) {
    if (line.values.size() != p.years.size()) {
      throw Error(ErrorCode::kInvalidSpec, "metric line length does not match years");
    }
    for (const auto& v : line.values) {
      if (v) y.Add(*v);
    }
  }
  y.lo = std::min(y.lo, 0.0);
  Canvas c(spec, x, y);
  c.Axes([](double year) { return std::to_string(static_cast<int>(std::lround(year))); });
  if (c.yr().lo < 0.0 && c.yr().hi > 0.0) {
    c.body() += "<line x1=\"" + Num(c.X(c.xr().lo)) + "\" y1=\"" + Num(c.Y(0.0)) + "\" x2=\"" +
                Num(c.X(c.xr().hi)) + "\" y2=\"" + Num(c.Y(0.0)) +
                "\" stroke=\"#999999\" stroke-dasharray=\"4,3\"/>\n";
  }
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const auto& line = p.lines[i];
    const std::string color(Color(i));
    std::string run;
    auto flush = [&] {
      if (!run.empty()) {
        c.body() += "<polyline fill=\"none\" stroke=\"" + color +
                    "\" stroke-width=\"1.5\" points=\"" + run + "\"/>\n";
      }
      run.clear();
    };
    for (std::size_t j = 0; j < p.years.size(); ++j) {
      if (!line.values[j]) {
        flush();
        continue;
      }
      if (!run.empty()) run += ' ';
      run += Num(c.X(p.years[j])) + ',' + Num(c.Y(*line.values[j]));
    }
    flush();
    c.LegendEntry(i, color, line.label);
  }
  return c.Finish();
}

std::string RenderHistogramOverlay(const PlotSpec& spec, const HistogramOverlayPayload& p) {
  const auto& h = p.histogram;
  if (h.densities.empty() || h.bin_edges.size() != h.densities.size() + 1) {
    throw Error(ErrorCode::kInvalidSpec, "histogram edges and densities disagree");
  }
  Range x, y;
  x.Add(h.bin_edges.front());
  x.Add(h.bin_edges.back());
  y.Add(0.0);
  for (double d : h.densities) y.Add(d);
  for (const auto& curve : p.curves) {
    for (const auto& [cx, cy] : curve.points) {
      if (cx >= x.lo && cx <= x.hi) y.Add(cy);
    }
  }
  Canvas c(spec, x, y);
  c.Axes([](double v) { return Label(v); });
  c.body() += "<g fill=\"#c7d7e8\" stroke=\"#6e8cab\" stroke-width=\"0.5\">\n";
  for (std::size_t i = 0; i < h.densities.size(); ++i) {
    const double x0 = c.X(h.bin_edges[i]);
    const double x1 = c.X(h.bin_edges[i + 1]);
    const double top = c.Y(h.densities[i]);
    c.body() += "<rect x=\"" + Num(x0) + "\" y=\"" + Num(top) + "\" width=\"" + Num(x1 - x0) +
                "\" height=\"" + Num(c.Y(0.0) - top) + "\"/>\n";
  }
  c.body() += "</g>\n";
  for (std::size_t i = 0; i < p.curves.size(); ++i) {
    const auto& curve = p.curves[i];
    const std::string color(Color(i + 1));
    std::string d;
    for (const auto& [cx, cy] : curve.points) {
      if (!std::isfinite(cy)) continue;
      d += (d.empty() ? "M" : " L") + Num(c.X(cx)) + ',' + Num(c.Y(std::min(cy, c.yr().hi)));
    }
    if (d.empty()) d = "M" + Num(c.X(x.lo)) + ',' + Num(c.Y(0.0));
    c.body() += "<path fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\" d=\"" + d + "\"/>\n";
    c.LegendEntry(i, color, curve.label);
  }
  return c.Finish();
}

std::string RenderQq(const PlotSpec& spec, const QqPayload& p) {
  if (p.data.pairs.empty()) throw Error(ErrorCode::kInvalidSpec, "QQ plot needs pairs");
  Range r;
  for (const auto& [t, e] : p.data.pairs) {
    r.Add(t);
    r.Add(e);
  }
  Canvas c(spec, r, r);
  c.Axes([](double v) { return Label(v); });
  c.body() += "<line x1=\"" + Num(c.X(c.xr().lo)) + "\" y1=\"" + Num(c.Y(c.yr().lo)) + "\" x2=\"" +
              Num(c.X(c.xr().hi)) + "\" y2=\"" + Num(c.Y(c.yr().hi)) +
              "\" stroke=\"#999999\" stroke-dasharray=\"4,3\"/>\n";
  c.body() += "<g fill=\"" + std::string(Color(0)) + "\">\n";
  for (const auto& [t, e] : p.data.pairs) {
    c.body() += "<circle cx=\"" + Num(c.X(t)) + "\" cy=\"" + Num(c.Y(e)) + "\" r=\"1.5\"/>\n";
  }
  c.body() += "</g>\n";
  return c.Finish();
}

}  // namespace

std::string RenderSvg(const PlotSpec& spec) {
  if (spec.width <= 0 || spec.height <= 0) {
    throw Error(ErrorCode::kInvalidSpec, "plot dimensions must be positive");
  }
  if (static_cast<std::size_t>(spec.kind) != spec.payload.index()) {
    throw Error(ErrorCode::kInvalidSpec, "plot payload does not match its kind");
  }
  switch (spec.kind) {
    case PlotKind::kPriceLine:
      return RenderPriceLine(spec, std::get<PriceLinePayload>(spec.payload));
    case PlotKind::kNormalizedMetric:
      return RenderNormalizedMetric(spec, std::get<NormalizedMetricPayload>(spec.payload));
    case PlotKind::kHistogramOverlay:
      return RenderHistogramOverlay(spec, std::get<HistogramOverlayPayload>(spec.payload));
    case PlotKind::kQq:
      return RenderQq(spec, std::get<QqPayload>(spec.payload));
  }
  throw Error(ErrorCode::kInvalidSpec, "unknown plot kind");
}

}  // namespace franfit
