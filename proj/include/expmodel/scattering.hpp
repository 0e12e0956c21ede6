#pragma once

// Calibrated instrument kernel: two equal, independent Gaussian channels
// over the square span (-L, L) x (-L, L).

namespace expmodel {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

class SpanConfig {
 public:
  explicit SpanConfig(double half_width);

  [[nodiscard]] double half_width() const noexcept { return half_width_; }
  [[nodiscard]] double width() const noexcept { return 2.0 * half_width_; }
  // Uniform reference density 1/(2L)^2 on the span.
  [[nodiscard]] double reference_density() const noexcept { return 1.0 / (width() * width()); }

 private:
  double half_width_;
};

class ScatteringFunction {
 public:
  // Throws InvalidParameter unless 0 < sigma < L.
  ScatteringFunction(double sigma, SpanConfig span);

  [[nodiscard]] double sigma() const noexcept { return sigma_; }
  [[nodiscard]] const SpanConfig& span() const noexcept { return span_; }

  // psi(z - u) = g(x - u_x) g(y - u_y); never truncated to the span.
  [[nodiscard]] double operator()(Point2 z, Point2 u) const;
  [[nodiscard]] double log_eval(Point2 z, Point2 u) const;

 private:
  double sigma_;
  SpanConfig span_;
};

// 1-D Gaussian density with mean u and standard deviation sigma.
// Throws InvalidParameter on non-finite input or sigma <= 0.
[[nodiscard]] double gaussian_eval(double x, double u, double sigma);

// Logarithm of gaussian_eval without the exp; no validation (hot path).
[[nodiscard]] double log_gaussian_unchecked(double x, double u, double sigma) noexcept;

[[nodiscard]] double sf_eval(const ScatteringFunction& sf, Point2 z, Point2 u);

// Closed-form calibration uncertainty 2 log(sigma/L) + log(pi/2) + 1 in nats.
// Exact up to the kernel mass leaking outside the span.
[[nodiscard]] double calibration_entropy(const ScatteringFunction& sf) noexcept;

}  // namespace expmodel
