#include "expmodel/scattering.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "expmodel/error.hpp"
#include "expmodel/numeric.hpp"

namespace expmodel {

SpanConfig::SpanConfig(double half_width) : half_width_(half_width) {
  if (!std::isfinite(half_width) || half_width <= 0.0) {
    throw Error(ErrorKind::InvalidParameter, "span half-width must be finite and > 0, got " + std::to_string(half_width));
  }
}

ScatteringFunction::ScatteringFunction(double sigma, SpanConfig span) : sigma_(sigma), span_(span) {
  if (!std::isfinite(sigma) || sigma <= 0.0) {
    throw Error(ErrorKind::InvalidParameter, "sigma must be finite and > 0, got " + std::to_string(sigma));
  }
  if (sigma >= span.half_width()) {
    throw Error(ErrorKind::InvalidParameter,
                "sigma must be smaller than the span half-width L (sigma=" + std::to_string(sigma) +
                    ", L=" + std::to_string(span.half_width()) + ")");
  }
}

double ScatteringFunction::operator()(Point2 z, Point2 u) const {
  return gaussian_eval(z.x, u.x, sigma_) * gaussian_eval(z.y, u.y, sigma_);
}

double ScatteringFunction::log_eval(Point2 z, Point2 u) const {
  return log_gaussian_unchecked(z.x, u.x, sigma_) + log_gaussian_unchecked(z.y, u.y, sigma_);
}

double gaussian_eval(double x, double u, double sigma) {
  if (!std::isfinite(x) || !std::isfinite(u) || !std::isfinite(sigma)) {
    throw Error(ErrorKind::InvalidParameter, "gaussian_eval: non-finite argument");
  }
  if (sigma <= 0.0) throw Error(ErrorKind::InvalidParameter, "gaussian_eval: sigma must be > 0");
  const double d = (x - u) / sigma;
  return std::exp(-0.5 * d * d) / (std::sqrt(2.0 * std::numbers::pi) * sigma);
}

double log_gaussian_unchecked(double x, double u, double sigma) noexcept {
  const double d = (x - u) / sigma;
  return -0.5 * d * d - numeric::kLogSqrtTwoPi - std::log(sigma);
}

double sf_eval(const ScatteringFunction& sf, Point2 z, Point2 u) { return sf(z, u); }

double calibration_entropy(const ScatteringFunction& sf) noexcept {
  return 2.0 * std::log(sf.sigma() / sf.span().half_width()) + std::log(std::numbers::pi / 2.0) + 1.0;
}

}  // namespace expmodel
