#include "expmodel/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "expmodel/dataset_io.hpp"
#include "expmodel/error.hpp"
#include "expmodel/information.hpp"
#include "expmodel/parallel.hpp"

namespace expmodel {

CaPredictor::CaPredictor(Dataset data, ScatteringFunction sf)
    : data_(std::move(data)), sf_(sf), xs_(data_.xs()), ys_(data_.ys()) {
  if (data_.empty()) throw Error(ErrorKind::EmptyDataset, "predictor needs at least one basic sample");
  const auto [lo, hi] = std::minmax_element(ys_.begin(), ys_.end());
  y_min_ = *lo;
  y_max_ = *hi;
}

std::vector<double> CaPredictor::weights(double x) const {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidParameter, "non-finite query");
  // Gaussian normalization cancels in the ratio; only exponents matter.
  const double inv_two_var = 1.0 / (2.0 * sf_.sigma() * sf_.sigma());
  std::vector<double> w(xs_.size());
  double max_exp = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    const double d = x - xs_[i];
    w[i] = -d * d * inv_two_var;
    max_exp = std::max(max_exp, w[i]);
  }
  double sum = 0.0;
  for (auto& v : w) {
    v = std::exp(v - max_exp);
    sum += v;
  }
  for (auto& v : w) v /= sum;
  return w;
}

double CaPredictor::predict(double x) const {
  const auto w = weights(x);
  double y = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) y += w[i] * ys_[i];
  // Rounding may step a hair outside the convex hull.
  return std::clamp(y, y_min_, y_max_);
}

std::vector<double> CaPredictor::predict(std::span<const double> xs) const {
  std::vector<double> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { out[i] = predict(xs[i]); });
  return out;
}

double QualityReport::q_from_moments() const noexcept {
  const double denom = var_true + var_pred;
  const double bias = mean_true - mean_pred;
  return 2.0 * cov / denom - bias * bias / denom;
}

QualityReport predictor_quality(std::span<const double> y_true, std::span<const double> y_pred) {
  if (y_true.size() != y_pred.size()) {
    throw Error(ErrorKind::ShapeMismatch, "y_true has " + std::to_string(y_true.size()) + " values, y_pred " +
                                              std::to_string(y_pred.size()));
  }
  if (y_true.size() < 2) throw Error(ErrorKind::ShapeMismatch, "quality needs at least two test points");

  const auto n = static_cast<double>(y_true.size());
  QualityReport r;
  r.n_test = y_true.size();
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    r.mean_true += y_true[i];
    r.mean_pred += y_pred[i];
  }
  r.mean_true /= n;
  r.mean_pred /= n;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const double dt = y_true[i] - r.mean_true;
    const double dp = y_pred[i] - r.mean_pred;
    const double e = y_true[i] - y_pred[i];
    r.var_true += dt * dt;
    r.var_pred += dp * dp;
    r.cov += dt * dp;
    r.mse += e * e;
  }
  r.var_true /= n;
  r.var_pred /= n;
  r.cov /= n;
  r.mse /= n;

  const double denom = r.var_true + r.var_pred;
  if (!(denom > 0.0)) throw Error(ErrorKind::DegenerateVariance, "Var(y) + Var(y_p) is zero");
  r.q = 1.0 - r.mse / denom;
  return r;
}

double ca_quality_theoretical(double var_true, double var_pred) {
  if (!std::isfinite(var_true) || !std::isfinite(var_pred) || var_true < 0.0 || var_pred < 0.0) {
    throw Error(ErrorKind::InvalidParameter, "variances must be finite and >= 0");
  }
  const double denom = var_true + var_pred;
  if (!(denom > 0.0)) throw Error(ErrorKind::DegenerateVariance, "Var(y) + Var(y_p) is zero");
  return 2.0 * var_pred / denom;
}

std::vector<QualityPoint> quality_sweep(const Dataset& basic, const Dataset& test, const ScatteringFunction& sf,
                                        std::span<const std::size_t> schedule) {
  validate_schedule(schedule, basic.size());
  const auto test_x = test.xs();
  const auto test_y = test.ys();

  std::vector<QualityPoint> out(schedule.size());
  parallel_for(schedule.size(), [&](std::size_t k) {
    const CaPredictor predictor(basic.prefix(schedule[k]), sf);
    std::vector<double> y_pred(test_x.size());
    for (std::size_t i = 0; i < test_x.size(); ++i) y_pred[i] = predictor.predict(test_x[i]);
    out[k] = {schedule[k], predictor_quality(test_y, y_pred)};
  });
  return out;
}

void write_predictions_csv(std::ostream& os, const Dataset& test, std::span<const double> y_pred) {
  if (y_pred.size() != test.size()) throw Error(ErrorKind::ShapeMismatch, "one prediction per test sample required");
  os << "x_t,y_t,y_p,err\n";
  for (std::size_t i = 0; i < test.size(); ++i) {
    write_csv_row(os, {format_real(test[i].x), format_real(test[i].y), format_real(y_pred[i]),
                       format_real(y_pred[i] - test[i].y)});
  }
}

void write_quality_header(std::ostream& os) { os << "N,seed,Q,var_y,var_yp,cov,mse\n"; }

void write_quality_rows(std::ostream& os, std::uint64_t seed, std::span<const QualityPoint> sweep) {
  for (const auto& p : sweep) {
    const auto& r = p.report;
    write_csv_row(os, {std::to_string(p.n), std::to_string(seed), format_real(r.q), format_real(r.var_true),
                       format_real(r.var_pred), format_real(r.cov), format_real(r.mse)});
  }
}

}  // namespace expmodel
