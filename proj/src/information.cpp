#include "expmodel/information.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "expmodel/dataset_io.hpp"
#include "expmodel/error.hpp"
#include "expmodel/parallel.hpp"

namespace expmodel {

namespace {

constexpr double kDensityFloor = 1e-300;

double neg_f_log_f(double f) { return f > kDensityFloor ? -f * std::log(f) : 0.0; }

}  // namespace

QuadratureGrid::QuadratureGrid(SpanConfig span, std::size_t points_per_axis)
    : span_(span), points_(points_per_axis), step_(0.0) {
  if (points_per_axis < kMinPointsPerAxis) {
    throw Error(ErrorKind::InvalidGrid, "points_per_axis must be >= " + std::to_string(kMinPointsPerAxis) +
                                            ", got " + std::to_string(points_per_axis));
  }
  step_ = span_.width() / static_cast<double>(points_ - 1);
}

double QuadratureGrid::node(std::size_t k) const noexcept {
  // Last node pinned to +L exactly.
  if (k + 1 == points_) return span_.half_width();
  return -span_.half_width() + static_cast<double>(k) * step_;
}

std::vector<double> QuadratureGrid::axis() const {
  std::vector<double> out(points_);
  for (std::size_t k = 0; k < points_; ++k) out[k] = node(k);
  return out;
}

double QuadratureGrid::weight(std::size_t k) const noexcept {
  return (k == 0 || k + 1 == points_) ? 0.5 * step_ : step_;
}

void QuadratureGrid::check_resolution(const ScatteringFunction& sf) const {
  if (sf.span().half_width() != span_.half_width()) {
    throw Error(ErrorKind::InvalidGrid, "grid span does not match the scattering function span");
  }
  if (step_ > sf.sigma() / 4.0) {
    throw Error(ErrorKind::InvalidGrid, "grid step " + format_real(step_) + " exceeds sigma/4 = " +
                                            format_real(sf.sigma() / 4.0) + "; increase grid points");
  }
}

double entropy_from_grid_values(std::span<const double> values, const QuadratureGrid& grid) {
  const std::size_t p = grid.points_per_axis();
  if (values.size() != p * p) throw Error(ErrorKind::ShapeMismatch, "grid value count does not match the grid");
  double total = 0.0;
  for (std::size_t i = 0; i < p; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < p; ++j) row += grid.weight(j) * neg_f_log_f(values[i * p + j]);
    total += grid.weight(i) * row;
  }
  return total;
}

double entropy_quadrature(const Density2& pdf, const QuadratureGrid& grid) {
  const std::size_t p = grid.points_per_axis();
  const auto axis = grid.axis();
  std::vector<double> values(p * p);
  parallel_for(p, [&](std::size_t i) {
    for (std::size_t j = 0; j < p; ++j) {
      const double f = pdf(axis[i], axis[j]);
      if (!(f >= 0.0) || !std::isfinite(f)) {
        throw Error(ErrorKind::InvalidParameter, "density must be finite and non-negative on the grid");
      }
      values[i * p + j] = f;
    }
  });
  return entropy_from_grid_values(values, grid);
}

std::vector<double> joint_pdf_on_grid(const DensityModel& model, const QuadratureGrid& grid) {
  const std::size_t p = grid.points_per_axis();
  const std::size_t n = model.size();
  const auto axis = grid.axis();
  const double sigma = model.sf().sigma();
  const auto samples = model.data().samples();

  // The kernel factors per axis: tabulate g(node - x_i) and g(node - y_i) once.
  const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * sigma);
  auto g = [&](double d) {
    const double t = d / sigma;
    return norm * std::exp(-0.5 * t * t);
  };
  std::vector<double> gx(n * p), gy(n * p);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t k = 0; k < p; ++k) {
      gx[s * p + k] = g(axis[k] - samples[s].x);
      gy[s * p + k] = g(axis[k] - samples[s].y);
    }
  }

  std::vector<double> values(p * p, 0.0);
  const double inv_n = 1.0 / static_cast<double>(n);
  parallel_for(p, [&](std::size_t i) {
    double* row = values.data() + i * p;
    for (std::size_t s = 0; s < n; ++s) {
      const double wx = gx[s * p + i];
      if (wx == 0.0) continue;
      const double* col = gy.data() + s * p;
      for (std::size_t j = 0; j < p; ++j) row[j] += wx * col[j];
    }
    for (std::size_t j = 0; j < p; ++j) row[j] *= inv_n;
  });
  return values;
}

double indeterminacy(const DensityModel& model, const QuadratureGrid& grid) {
  grid.check_resolution(model.sf());
  const auto values = joint_pdf_on_grid(model, grid);
  return entropy_from_grid_values(values, grid) - 2.0 * std::log(grid.span().width());
}

double experimental_information(const DensityModel& model, const QuadratureGrid& grid) {
  return indeterminacy(model, grid) - calibration_entropy(model.sf());
}

InfoRecord InfoRecord::from_info(std::size_t n, double info) {
  InfoRecord r;
  r.n = n;
  r.log_n = std::log(static_cast<double>(n));
  r.info = info;
  r.redundancy = r.log_n - info;
  r.cost = r.log_n - 2.0 * info;
  r.complexity = std::exp(info);
  return r;
}

std::vector<std::size_t> default_schedule(std::size_t n_max) {
  static constexpr std::size_t kBase[] = {1, 2, 3, 4, 6, 8, 11, 16, 22, 32, 45, 64, 90, 128, 180};
  std::vector<std::size_t> out;
  for (auto n : kBase) {
    if (n < n_max) out.push_back(n);
  }
  if (n_max >= 1) out.push_back(n_max);
  return out;
}

void validate_schedule(std::span<const std::size_t> schedule, std::size_t n_max) {
  if (schedule.empty()) throw Error(ErrorKind::InvalidSchedule, "schedule is empty");
  if (schedule.front() < 1) throw Error(ErrorKind::InvalidSchedule, "schedule entries must be >= 1");
  for (std::size_t k = 1; k < schedule.size(); ++k) {
    if (schedule[k] <= schedule[k - 1]) throw Error(ErrorKind::InvalidSchedule, "schedule must be strictly increasing");
  }
  if (schedule.back() > n_max) {
    throw Error(ErrorKind::InvalidSchedule, "schedule entry " + std::to_string(schedule.back()) +
                                                " exceeds dataset size " + std::to_string(n_max));
  }
}

InfoCurve info_curve(const Dataset& data, const ScatteringFunction& sf, const QuadratureGrid& grid,
                     std::span<const std::size_t> schedule) {
  validate_schedule(schedule, data.size());
  grid.check_resolution(sf);

  InfoCurve curve;
  curve.records.reserve(schedule.size());
  for (auto n : schedule) {
    const DensityModel model(data.prefix(n), sf);
    curve.records.push_back(InfoRecord::from_info(n, experimental_information(model, grid)));
  }

  const auto best = std::min_element(curve.records.begin(), curve.records.end(),
                                     [](const InfoRecord& a, const InfoRecord& b) { return a.cost < b.cost; });
  curve.n_opt = best->n;

  const std::size_t count = curve.records.size();
  const std::size_t decile = (count + 9) / 10;
  const std::size_t tail = std::min(count, std::max<std::size_t>(3, decile));
  double sum = 0.0;
  for (std::size_t k = count - tail; k < count; ++k) sum += curve.records[k].info;
  curve.info_limit = sum / static_cast<double>(tail);
  curve.complexity_limit = std::exp(curve.info_limit);
  return curve;
}

void write_info_curve_csv(std::ostream& os, const InfoCurve& curve) {
  os << "N,logN,I,R,C,K\n";
  for (const auto& r : curve.records) {
    write_csv_row(os, {std::to_string(r.n), format_real(r.log_n), format_real(r.info), format_real(r.redundancy),
                       format_real(r.cost), format_real(r.complexity)});
  }
}

void write_info_summary_csv(std::ostream& os, const InfoCurve& curve) {
  os << "N_opt,I_inf,K_inf\n";
  write_csv_row(os, {std::to_string(curve.n_opt), format_real(curve.info_limit), format_real(curve.complexity_limit)});
}

}  // namespace expmodel
