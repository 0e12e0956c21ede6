#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "expmodel/dataset.hpp"
#include "expmodel/scattering.hpp"

namespace expmodel {

// Conditional-average predictor y_p(x) = sum_i y_i C_i(x), where the
// similarity weights C_i(x) are the normalized x-kernels of the basic set.
class CaPredictor {
 public:
  // Throws EmptyDataset.
  CaPredictor(Dataset data, ScatteringFunction sf);

  [[nodiscard]] const Dataset& data() const noexcept { return data_; }
  [[nodiscard]] const ScatteringFunction& sf() const noexcept { return sf_; }

  // Log-domain normalized weights; they sum to 1 and lie in [0, 1] for any
  // finite x, however far from the data.
  [[nodiscard]] std::vector<double> weights(double x) const;
  [[nodiscard]] double predict(double x) const;
  [[nodiscard]] std::vector<double> predict(std::span<const double> xs) const;

 private:
  Dataset data_;
  ScatteringFunction sf_;
  std::vector<double> xs_;
  std::vector<double> ys_;
  double y_min_ = 0.0;
  double y_max_ = 0.0;
};

[[nodiscard]] inline std::vector<double> ca_weights(const CaPredictor& p, double x) { return p.weights(x); }
[[nodiscard]] inline double ca_predict(const CaPredictor& p, double x) { return p.predict(x); }

// Population moments of a test run and the quality
//   Q = 1 - E[(y - y_p)^2] / (Var(y) + Var(y_p)).
struct QualityReport {
  double q = 0.0;
  double mean_true = 0.0;
  double mean_pred = 0.0;
  double var_true = 0.0;
  double var_pred = 0.0;
  double cov = 0.0;
  double mse = 0.0;
  std::size_t n_test = 0;

  // 2 Cov/(Var+Var) - (m - m_p)^2/(Var+Var); equals q up to rounding.
  [[nodiscard]] double q_from_moments() const noexcept;
};

// Throws ShapeMismatch (unequal lengths or fewer than 2 points) or
// DegenerateVariance (both variances zero).
[[nodiscard]] QualityReport predictor_quality(std::span<const double> y_true, std::span<const double> y_pred);

// Quality implied by the conditional-average identities m(y) = m(y_p) and
// Cov(y, y_p) = Var(y_p): 2 Var(y_p) / (Var(y) + Var(y_p)).
[[nodiscard]] double ca_quality_theoretical(double var_true, double var_pred);

struct QualityPoint {
  std::size_t n = 0;
  QualityReport report;
};

// Predictor quality of each n-prefix of basic, scored on the full test set.
[[nodiscard]] std::vector<QualityPoint> quality_sweep(const Dataset& basic, const Dataset& test,
                                                      const ScatteringFunction& sf,
                                                      std::span<const std::size_t> schedule);

// x_t,y_t,y_p,err
void write_predictions_csv(std::ostream& os, const Dataset& test, std::span<const double> y_pred);

// N,seed,Q,var_y,var_yp,cov,mse
void write_quality_header(std::ostream& os);
void write_quality_rows(std::ostream& os, std::uint64_t seed, std::span<const QualityPoint> sweep);

}  // namespace expmodel
