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

// Python bindings. Distributions cross the boundary as (kind, {param: value})
// with the same field names as the JSON fit documents.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <functional>
#include <optional>
#include <sstream>

#include "franfit/cohort.hpp"
#include "franfit/commands.hpp"
#include "franfit/demo.hpp"
#include "franfit/distributions.hpp"
#include "franfit/estimation.hpp"
#include "franfit/gof.hpp"
#include "franfit/report.hpp"

namespace py = pybind11;
using namespace franfit;

namespace {

Distribution ToDist(const std::string& kind, const py::dict& params) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto item : params) j[py::cast<std::string>(item.first)] = py::cast<double>(item.second);
  return report::ParamsFromJson(ParseKind(kind), j);
}

py::dict FromDist(const Distribution& d) {
  py::dict out;
  const auto j = report::ParamsToJson(d);
  for (const auto& [k, v] : j.items()) out[py::str(k)] = v.get<double>();
  return out;
}

py::dict FromFit(const FitResult& r) {
  py::dict out;
  out["kind"] = std::string(KindName(r.kind));
  out["params"] = FromDist(r.params);
  out["loglik"] = r.loglik;
  out["n"] = r.n;
  out["converged"] = r.converged;
  out["iterations"] = r.iterations;
  out["residual"] = r.residual;
  return out;
}

FitConfig MakeConfig(double rel_tol, int max_iter) {
  FitConfig cfg;
  cfg.rel_tol = rel_tol;
  cfg.max_iter = max_iter;
  return cfg;
}

int RunCommand(const std::string& config, const std::function<int(const RunConfig&, std::ostream&)>& f) {
  std::ostringstream err;
  int code;
  try {
    code = f(LoadRunConfig(config), err);
  } catch (const Error& e) {
    ReportError(err, "python", e.code(), e.what());
    code = ExitCodeFor(e.code());
  }
  if (!err.str().empty()) py::print(err.str(), py::arg("end") = "",
                                    py::arg("file") = py::module_::import("sys").attr("stderr"));
  return code;
}

}  // namespace

PYBIND11_MODULE(_franfit, m) {
  m.doc() = "franfit core bindings";

  static py::exception<Error> exc(m, "FranfitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (std::string(ErrorCodeName(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::list kinds;
  for (auto k : kAllKinds) kinds.append(std::string(KindName(k)));
  m.attr("KINDS") = kinds;

  m.def("fit_lognormal", [](std::vector<double> xs) { return FromFit(FitLogNormal(Sample(std::move(xs)))); },
        py::arg("sample"));
  m.def(
      "fit",
      [](std::vector<double> xs, const std::string& kind, std::optional<double> truncation,
         double rel_tol, int max_iter) {
        const Sample s(std::move(xs));
        const auto cfg = MakeConfig(rel_tol, max_iter);
        if (truncation) {
          if (ParseKind(kind) != DistributionKind::kTruncatedWeibull) {
            throw Error(ErrorCode::kInvalidParams, "truncation applies to TruncatedWeibull only");
          }
          return FromFit(FitTruncatedWeibull(s, *truncation, cfg));
        }
        return FromFit(FitKind(s, ParseKind(kind), cfg));
      },
      py::arg("sample"), py::arg("kind"), py::arg("truncation") = py::none(),
      py::arg("rel_tol") = 1e-10, py::arg("max_iter") = 200);
  m.def(
      "fit_all",
      [](std::vector<double> xs) {
        const Sample s(std::move(xs));
        py::list out;
        for (const auto& a : FitAll(s)) {
          if (a.ok()) {
            out.append(FromFit(*a.result));
          } else {
            py::dict d;
            d["kind"] = std::string(KindName(a.kind));
            d["error"] = a.error ? std::string(ErrorCodeName(*a.error)) : std::string("Unknown");
            d["message"] = a.message;
            out.append(d);
          }
        }
        return out;
      },
      py::arg("sample"));
  m.def(
      "log_likelihood",
      [](const std::string& kind, const py::dict& params, std::vector<double> xs) {
        return LogLikelihood(ToDist(kind, params), Sample(std::move(xs)));
      },
      py::arg("kind"), py::arg("params"), py::arg("sample"));
  m.def(
      "draw",
      [](const std::string& kind, const py::dict& params, std::size_t n, std::uint64_t seed) {
        const auto s = Draw(ToDist(kind, params), n, seed);
        return std::vector<double>(s.values().begin(), s.values().end());
      },
      py::arg("kind"), py::arg("params"), py::arg("n"), py::arg("seed"));
  m.def(
      "ks_statistic",
      [](std::vector<double> xs, const std::string& kind, const py::dict& params) {
        return KsStatistic(Sample(std::move(xs)), ToDist(kind, params));
      },
      py::arg("sample"), py::arg("kind"), py::arg("params"));
  m.def(
      "anderson_darling",
      [](std::vector<double> xs, const std::string& kind, const py::dict& params) {
        return AndersonDarling(Sample(std::move(xs)), ToDist(kind, params));
      },
      py::arg("sample"), py::arg("kind"), py::arg("params"));
  m.def(
      "classify_dispersion",
      [](double sigma, double low_max, double high_min) {
        return std::string(DispersionName(ClassifyDispersion(sigma, {low_max, high_min})));
      },
      py::arg("sigma"), py::arg("low_max") = 0.15, py::arg("high_min") = 0.35);
  m.def(
      "max_drawdown",
      [](const std::vector<std::string>& dates, const std::vector<double>& closes,
         const std::string& window) {
        if (dates.size() != closes.size()) {
          throw Error(ErrorCode::kMalformedRow, "dates and closes differ in length");
        }
        PriceSeries s{"", {}};
        for (std::size_t i = 0; i < dates.size(); ++i) s.points.push_back({Date::Parse(dates[i]), closes[i]});
        const auto r = MaxDrawdown(s, ParseDateWindow(window));
        py::dict out;
        out["max_drawdown"] = r.max_drawdown;
        out["peak_date"] = r.peak_date.ToString();
        out["trough_date"] = r.trough_date.ToString();
        out["recovery_date"] = r.recovery_date ? py::object(py::str(r.recovery_date->ToString())) : py::none();
        out["recovery_days"] = r.recovery_days ? py::object(py::int_(*r.recovery_days)) : py::none();
        return out;
      },
      py::arg("dates"), py::arg("closes"), py::arg("window"));
  m.def(
      "normalize",
      [](const std::vector<int>& years, const std::vector<double>& values, int base_start,
         int base_end) {
        if (years.size() != values.size()) {
          throw Error(ErrorCode::kMalformedRow, "years and values differ in length");
        }
        AnnualSeries s{"", MetricKind::kRevenue, {}};
        for (std::size_t i = 0; i < years.size(); ++i) s.points.push_back({years[i], values[i]});
        std::vector<double> out;
        for (const auto& p : Normalize(s, {base_start, base_end}).points) out.push_back(p.value);
        return out;
      },
      py::arg("years"), py::arg("values"), py::arg("base_start") = 2007,
      py::arg("base_end") = 2011);

  m.def(
      "cmd_fit",
      [](const std::string& config, const std::string& ticker) {
        return RunCommand(config, [&](const RunConfig& c, std::ostream& e) { return CmdFit(c, ticker, e); });
      },
      py::arg("config"), py::arg("ticker"));
  m.def(
      "cmd_cohort", [](const std::string& config) { return RunCommand(config, CmdCohort); },
      py::arg("config"));
  m.def(
      "cmd_fundamentals",
      [](const std::string& config) { return RunCommand(config, CmdFundamentals); },
      py::arg("config"));
  m.def(
      "write_demo_tree",
      [](const std::filesystem::path& dir, std::uint64_t seed) { return WriteDemoTree(dir, seed); },
      py::arg("dir"), py::arg("seed") = 0);
}
