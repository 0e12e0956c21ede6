#pragma once

#include <vector>

#include "expmodel/dataset.hpp"
#include "expmodel/scattering.hpp"

namespace expmodel {

// Kernel estimates of the joint, marginal and conditional densities built
// from a dataset and the calibrated scattering function:
//
//   f(z)   = 1/N sum_i psi(z - z_i)
//   f(x)   = 1/N sum_i g(x - x_i)
//   f(y|x) = f(z) / f(x)
//
// All sums are taken in log domain so that queries far from every sample
// still produce a finite log-density and a well-defined conditional.
class DensityModel {
 public:
  // Throws EmptyDataset.
  DensityModel(Dataset data, ScatteringFunction sf);

  [[nodiscard]] const Dataset& data() const noexcept { return data_; }
  [[nodiscard]] const ScatteringFunction& sf() const noexcept { return sf_; }
  [[nodiscard]] std::size_t size() const noexcept { return xs_.size(); }

  [[nodiscard]] double joint_pdf(Point2 z) const;
  [[nodiscard]] double marginal_pdf(double x) const;
  [[nodiscard]] double conditional_pdf(double y, double given_x) const;

  [[nodiscard]] double log_joint_pdf(Point2 z) const;
  [[nodiscard]] double log_marginal_pdf(double x) const;
  [[nodiscard]] double log_conditional_pdf(double y, double given_x) const;

 private:
  Dataset data_;
  ScatteringFunction sf_;
  std::vector<double> xs_;
  std::vector<double> ys_;
};

}  // namespace expmodel
