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

#include "franfit/distributions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "franfit/error.hpp"
#include "franfit/random.hpp"
#include "franfit/special_functions.hpp"

namespace franfit {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool Positive(double v) { return std::isfinite(v) && v > 0.0; }

[[noreturn]] void Invalid(std::string_view what) {
  throw Error(ErrorCode::kInvalidParams, std::string(what));
}

// Solves P(a, y) = lower (equivalently Q(a, y) = upper, lower + upper = 1) for
// y > 0. Whichever tail is smaller is used as the target so that extreme
// probabilities keep their relative precision.
double SolveIncompleteGamma(double a, double lower, double upper) {
  const bool use_lower = lower <= upper;
  const double target = use_lower ? lower : upper;
  // Signed residual, increasing in y.
  auto residual = [&](double y) {
    return use_lower ? special::GammaP(a, y) - target : target - special::GammaQ(a, y);
  };
  auto density = [&](double y) {
    return std::exp((a - 1.0) * std::log(y) - y - std::lgamma(a));
  };

  // Wilson-Hilferty starting point, with a small-p fallback.
  const double z = special::NormalQuantile(lower);
  const double c = 1.0 - 1.0 / (9.0 * a) + z / (3.0 * std::sqrt(a));
  double y = a * c * c * c;
  if (!(y > 0.0) || !std::isfinite(y)) {
    y = std::exp((std::log(lower) + std::lgamma(a + 1.0)) / a);
  }
  if (!(y > 0.0) || !std::isfinite(y)) y = a;

  double lo = y;
  double hi = y;
  while (residual(lo) > 0.0 && lo > std::numeric_limits<double>::min()) lo *= 0.5;
  while (residual(hi) < 0.0 && hi < std::numeric_limits<double>::max() / 4) hi *= 2.0;

  for (int iter = 0; iter < 300; ++iter) {
    const double r = residual(y);
    if (r == 0.0) return y;
    if (r < 0.0) {
      lo = y;
    } else {
      hi = y;
    }
    const double slope = density(y);
    double next = slope > 0.0 ? y - r / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - y) <= 1e-15 * y || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * y) {
      return next;
    }
    y = next;
  }
  return y;
}

double NeumaierSum(std::span<const double> terms) {
  double sum = 0.0;
  double comp = 0.0;
  for (double t : terms) {
    const double s = sum + t;
    if (std::fabs(sum) >= std::fabs(t)) {
      comp += (sum - s) + t;
    } else {
      comp += (t - s) + sum;
    }
    sum = s;
  }
  return sum + comp;
}

// (a / lambda)^k, the log-survival offset of the truncation point.
double TruncationOffset(const TruncatedWeibullParams& p) {
  return p.truncation > 0.0 ? std::pow(p.truncation / p.scale, p.shape) : 0.0;
}

}  // namespace

std::string_view KindName(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::kWeibull: return "Weibull";
    case DistributionKind::kTruncatedWeibull: return "TruncatedWeibull";
    case DistributionKind::kGamma: return "Gamma";
    case DistributionKind::kInvGamma: return "InvGamma";
    case DistributionKind::kLogNormal: return "LogNormal";
  }
  return "";
}

DistributionKind ParseKind(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  const std::string wanted = lower(name);
  for (auto kind : kAllKinds) {
    if (lower(KindName(kind)) == wanted) return kind;
  }
  throw Error(ErrorCode::kInvalidParams, "unknown distribution '" + std::string(name) + "'");
}

DistributionKind KindOf(const Distribution& dist) {
  return static_cast<DistributionKind>(dist.index());
}

void Validate(const Distribution& dist) {
  std::visit(Overloaded{
                 [](const WeibullParams& p) {
                   if (!Positive(p.shape) || !Positive(p.scale)) Invalid("Weibull needs k > 0, lambda > 0");
                 },
                 [](const TruncatedWeibullParams& p) {
                   if (!Positive(p.shape) || !Positive(p.scale) || !std::isfinite(p.truncation) ||
                       p.truncation < 0.0) {
                     Invalid("TruncatedWeibull needs k > 0, lambda > 0, a >= 0");
                   }
                 },
                 [](const GammaParams& p) {
                   if (!Positive(p.shape) || !Positive(p.rate)) Invalid("Gamma needs alpha > 0, beta > 0");
                 },
                 [](const InvGammaParams& p) {
                   if (!Positive(p.shape) || !Positive(p.scale)) Invalid("InvGamma needs alpha > 0, beta > 0");
                 },
                 [](const LogNormalParams& p) {
                   if (!std::isfinite(p.mu) || !Positive(p.sigma)) Invalid("LogNormal needs finite mu, sigma > 0");
                 },
             },
             dist);
}

std::array<double, 2> FreeParams(const Distribution& dist) {
  return std::visit(Overloaded{
                        [](const WeibullParams& p) { return std::array{p.shape, p.scale}; },
                        [](const TruncatedWeibullParams& p) { return std::array{p.shape, p.scale}; },
                        [](const GammaParams& p) { return std::array{p.shape, p.rate}; },
                        [](const InvGammaParams& p) { return std::array{p.shape, p.scale}; },
                        [](const LogNormalParams& p) { return std::array{p.mu, p.sigma}; },
                    },
                    dist);
}

Distribution WithFreeParams(const Distribution& like, std::array<double, 2> v) {
  return std::visit(Overloaded{
                        [&](const WeibullParams&) -> Distribution { return WeibullParams{v[0], v[1]}; },
                        [&](const TruncatedWeibullParams& p) -> Distribution {
                          return TruncatedWeibullParams{v[0], v[1], p.truncation};
                        },
                        [&](const GammaParams&) -> Distribution { return GammaParams{v[0], v[1]}; },
                        [&](const InvGammaParams&) -> Distribution { return InvGammaParams{v[0], v[1]}; },
                        [&](const LogNormalParams&) -> Distribution { return LogNormalParams{v[0], v[1]}; },
                    },
                    like);
}

double SupportLowerBound(const Distribution& dist) {
  if (const auto* t = std::get_if<TruncatedWeibullParams>(&dist)) return t->truncation;
  return 0.0;
}

bool InSupport(const Distribution& dist, double x) {
  return std::isfinite(x) && x > SupportLowerBound(dist);
}

double LogPdf(const Distribution& dist, double x) {
  Validate(dist);
  if (!InSupport(dist, x)) return kNegInf;
  return std::visit(
      Overloaded{
          [x](const WeibullParams& p) {
            const double z = x / p.scale;
            return std::log(p.shape / p.scale) + (p.shape - 1.0) * std::log(z) - std::pow(z, p.shape);
          },
          [x](const TruncatedWeibullParams& p) {
            const double z = x / p.scale;
            return std::log(p.shape / p.scale) + (p.shape - 1.0) * std::log(z) - std::pow(z, p.shape) +
                   TruncationOffset(p);
          },
          [x](const GammaParams& p) {
            return p.shape * std::log(p.rate) - std::lgamma(p.shape) + (p.shape - 1.0) * std::log(x) -
                   p.rate * x;
          },
          [x](const InvGammaParams& p) {
            return p.shape * std::log(p.scale) - std::lgamma(p.shape) - (p.shape + 1.0) * std::log(x) -
                   p.scale / x;
          },
          [x](const LogNormalParams& p) {
            const double z = (std::log(x) - p.mu) / p.sigma;
            return -std::log(x) - std::log(p.sigma) - 0.5 * std::log(2.0 * std::numbers::pi) - 0.5 * z * z;
          },
      },
      dist);
}

double Pdf(const Distribution& dist, double x) {
  const double lp = LogPdf(dist, x);
  return lp == kNegInf ? 0.0 : std::exp(lp);
}

double Cdf(const Distribution& dist, double x) {
  Validate(dist);
  if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x <= SupportLowerBound(dist)) return 0.0;
  if (std::isinf(x)) return 1.0;
  return std::visit(
      Overloaded{
          [x](const WeibullParams& p) { return -std::expm1(-std::pow(x / p.scale, p.shape)); },
          [x](const TruncatedWeibullParams& p) {
            return -std::expm1(-(std::pow(x / p.scale, p.shape) - TruncationOffset(p)));
          },
          [x](const GammaParams& p) { return special::GammaP(p.shape, p.rate * x); },
          [x](const InvGammaParams& p) { return special::GammaQ(p.shape, p.scale / x); },
          [x](const LogNormalParams& p) { return special::NormalCdf((std::log(x) - p.mu) / p.sigma); },
      },
      dist);
}

double Sf(const Distribution& dist, double x) {
  Validate(dist);
  if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x <= SupportLowerBound(dist)) return 1.0;
  if (std::isinf(x)) return 0.0;
  return std::visit(
      Overloaded{
          [x](const WeibullParams& p) { return std::exp(-std::pow(x / p.scale, p.shape)); },
          [x](const TruncatedWeibullParams& p) {
            return std::exp(-(std::pow(x / p.scale, p.shape) - TruncationOffset(p)));
          },
          [x](const GammaParams& p) { return special::GammaQ(p.shape, p.rate * x); },
          [x](const InvGammaParams& p) { return special::GammaP(p.shape, p.scale / x); },
          [x](const LogNormalParams& p) { return special::NormalSf((std::log(x) - p.mu) / p.sigma); },
      },
      dist);
}

double Quantile(const Distribution& dist, double p) {
  Validate(dist);
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::kInvalidProbability, "probability must lie in (0, 1)");
  }
  return std::visit(
      Overloaded{
          [p](const WeibullParams& w) { return w.scale * std::pow(-std::log1p(-p), 1.0 / w.shape); },
          [p](const TruncatedWeibullParams& w) {
            const double x =
                w.scale * std::pow(TruncationOffset(w) - std::log1p(-p), 1.0 / w.shape);
            return std::max(x, std::nextafter(w.truncation, std::numeric_limits<double>::infinity()));
          },
          [p](const GammaParams& g) { return SolveIncompleteGamma(g.shape, p, 1.0 - p) / g.rate; },
          [p](const InvGammaParams& g) {
            // cdf(x) = Q(alpha, beta / x), so beta / x is the (1 - p) gamma quantile.
            return g.scale / SolveIncompleteGamma(g.shape, 1.0 - p, p);
          },
          [p](const LogNormalParams& l) { return std::exp(l.mu + l.sigma * special::NormalQuantile(p)); },
      },
      dist);
}

double LogLikelihood(const Distribution& dist, std::span<const double> values) {
  Validate(dist);
  std::vector<double> terms;
  terms.reserve(values.size());
  for (double x : values) {
    const double lp = LogPdf(dist, x);
    if (lp == kNegInf) return kNegInf;
    terms.push_back(lp);
  }
  return NeumaierSum(terms);
}

double LogLikelihood(const Distribution& dist, const Sample& sample) {
  return LogLikelihood(dist, sample.values());
}

Sample Draw(const Distribution& dist, std::size_t n, std::uint64_t seed) {
  Validate(dist);
  if (n == 0) throw Error(ErrorCode::kInvalidSample, "cannot draw an empty sample");
  SplitMix64 rng(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(std::max(Quantile(dist, rng.NextOpenUnit()), std::numeric_limits<double>::min()));
  }
  return Sample(std::move(out));
}

Moments ComputeMoments(const Distribution& dist) {
  Validate(dist);
  return std::visit(
      Overloaded{
          [](const WeibullParams& p) {
            const double g1 = std::tgamma(1.0 + 1.0 / p.shape);
            const double g2 = std::tgamma(1.0 + 2.0 / p.shape);
            return Moments{p.scale * g1, p.scale * p.scale * (g2 - g1 * g1)};
          },
          [](const TruncatedWeibullParams& p) {
            // E[X^r | X > a] = lambda^r e^t Gamma(1 + r/k) Q(1 + r/k, t), t = (a/lambda)^k
            const double t = TruncationOffset(p);
            auto raw = [&](double r) {
              const double s = 1.0 + r / p.shape;
              return std::pow(p.scale, r) * std::exp(t + std::lgamma(s)) * special::GammaQ(s, t);
            };
            const double m1 = raw(1.0);
            return Moments{m1, raw(2.0) - m1 * m1};
          },
          [](const GammaParams& p) {
            return Moments{p.shape / p.rate, p.shape / (p.rate * p.rate)};
          },
          [](const InvGammaParams& p) {
            Moments m;
            if (p.shape > 1.0) m.mean = p.scale / (p.shape - 1.0);
            if (p.shape > 2.0) {
              const double d = p.shape - 1.0;
              m.variance = p.scale * p.scale / (d * d * (p.shape - 2.0));
            }
            return m;
          },
          [](const LogNormalParams& p) {
            const double s2 = p.sigma * p.sigma;
            return Moments{std::exp(p.mu + 0.5 * s2), std::expm1(s2) * std::exp(2.0 * p.mu + s2)};
          },
      },
      dist);
}

}  // namespace franfit
