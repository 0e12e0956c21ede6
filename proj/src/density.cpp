#include "expmodel/density.hpp"

#include <cmath>
#include <utility>

#include "expmodel/error.hpp"
#include "expmodel/numeric.hpp"

namespace expmodel {

DensityModel::DensityModel(Dataset data, ScatteringFunction sf)
    : data_(std::move(data)), sf_(sf), xs_(data_.xs()), ys_(data_.ys()) {
  if (data_.empty()) throw Error(ErrorKind::EmptyDataset, "density model needs at least one sample");
}

double DensityModel::log_joint_pdf(Point2 z) const {
  if (!std::isfinite(z.x) || !std::isfinite(z.y)) throw Error(ErrorKind::InvalidParameter, "non-finite query");
  std::vector<double> terms(xs_.size());
  const double s = sf_.sigma();
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    terms[i] = log_gaussian_unchecked(z.x, xs_[i], s) + log_gaussian_unchecked(z.y, ys_[i], s);
  }
  return numeric::log_sum_exp(terms) - std::log(static_cast<double>(xs_.size()));
}

double DensityModel::log_marginal_pdf(double x) const {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidParameter, "non-finite query");
  std::vector<double> terms(xs_.size());
  const double s = sf_.sigma();
  for (std::size_t i = 0; i < xs_.size(); ++i) terms[i] = log_gaussian_unchecked(x, xs_[i], s);
  return numeric::log_sum_exp(terms) - std::log(static_cast<double>(xs_.size()));
}

double DensityModel::log_conditional_pdf(double y, double given_x) const {
  return log_joint_pdf({given_x, y}) - log_marginal_pdf(given_x);
}

double DensityModel::joint_pdf(Point2 z) const { return std::exp(log_joint_pdf(z)); }

double DensityModel::marginal_pdf(double x) const { return std::exp(log_marginal_pdf(x)); }

double DensityModel::conditional_pdf(double y, double given_x) const {
  return std::exp(log_conditional_pdf(y, given_x));
}

}  // namespace expmodel
