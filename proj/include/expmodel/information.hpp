#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "expmodel/dataset.hpp"
#include "expmodel/density.hpp"
#include "expmodel/scattering.hpp"

namespace expmodel {

// Uniform tensor grid over the span [-L, L]^2 for trapezoid quadrature.
class QuadratureGrid {
 public:
  static constexpr std::size_t kMinPointsPerAxis = 129;

  // Throws InvalidGrid if points_per_axis < 129.
  QuadratureGrid(SpanConfig span, std::size_t points_per_axis);

  [[nodiscard]] const SpanConfig& span() const noexcept { return span_; }
  [[nodiscard]] std::size_t points_per_axis() const noexcept { return points_; }
  [[nodiscard]] double step() const noexcept { return step_; }
  [[nodiscard]] double node(std::size_t k) const noexcept;
  [[nodiscard]] std::vector<double> axis() const;
  // Trapezoid weight of node k along one axis (h, or h/2 at the ends).
  [[nodiscard]] double weight(std::size_t k) const noexcept;

  // Throws InvalidGrid unless step <= sigma/4 and the span matches sf's.
  void check_resolution(const ScatteringFunction& sf) const;

 private:
  SpanConfig span_;
  std::size_t points_;
  double step_;
};

using Density2 = std::function<double(double x, double y)>;

// Trapezoid estimate of -integral f log f over the span; f <= 1e-300 counts as 0.
[[nodiscard]] double entropy_quadrature(const Density2& pdf, const QuadratureGrid& grid);

// Same sum over precomputed row-major values f(node(p), node(q)).
[[nodiscard]] double entropy_from_grid_values(std::span<const double> values, const QuadratureGrid& grid);

// Joint density of the model sampled on the grid (row index = x node).
[[nodiscard]] std::vector<double> joint_pdf_on_grid(const DensityModel& model, const QuadratureGrid& grid);

// H_z: entropy of f relative to the uniform reference on the span.
[[nodiscard]] double indeterminacy(const DensityModel& model, const QuadratureGrid& grid);

// I = H_z - H_u with H_u the closed-form calibration entropy.
[[nodiscard]] double experimental_information(const DensityModel& model, const QuadratureGrid& grid);

struct InfoRecord {
  std::size_t n = 0;
  double log_n = 0.0;
  double info = 0.0;
  double redundancy = 0.0;  // log_n - info
  double cost = 0.0;        // log_n - 2 info
  double complexity = 0.0;  // exp(info)

  [[nodiscard]] static InfoRecord from_info(std::size_t n, double info);
};

struct InfoCurve {
  std::vector<InfoRecord> records;
  std::size_t n_opt = 0;
  double info_limit = 0.0;
  double complexity_limit = 0.0;
};

// Roughly geometric schedule 1, 2, 3, 4, 6, ..., 180 clipped below n_max,
// with n_max appended.
[[nodiscard]] std::vector<std::size_t> default_schedule(std::size_t n_max);

// Throws InvalidSchedule unless strictly increasing within [1, n_max].
void validate_schedule(std::span<const std::size_t> schedule, std::size_t n_max);

// Information statistics over nested prefixes of data. n_opt is the global
// argmin of the cost (smallest n on ties); info_limit averages the records in
// the top decile of the schedule, at least the last three.
[[nodiscard]] InfoCurve info_curve(const Dataset& data, const ScatteringFunction& sf, const QuadratureGrid& grid,
                                   std::span<const std::size_t> schedule);

// N,logN,I,R,C,K
void write_info_curve_csv(std::ostream& os, const InfoCurve& curve);
// N_opt,I_inf,K_inf
void write_info_summary_csv(std::ostream& os, const InfoCurve& curve);

}  // namespace expmodel
