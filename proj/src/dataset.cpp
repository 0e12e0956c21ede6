#include "expmodel/dataset.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "expmodel/error.hpp"

namespace expmodel {

void GenerationMeta::validate() const {
  if (!std::isfinite(sigma_noise) || sigma_noise < 0.0) {
    throw Error(ErrorKind::InvalidParameter, "sigma_noise must be finite and >= 0");
  }
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "n must be >= 1");
  if (initial_x && !(std::abs(*initial_x) < 1.0)) {
    throw Error(ErrorKind::InvalidParameter, "initial_x must lie inside (-1, 1)");
  }
  if (map_name != "ulam") throw Error(ErrorKind::InvalidParameter, "unsupported map '" + map_name + "'");
}

namespace {

void check_finite(Sample s) {
  if (!std::isfinite(s.x) || !std::isfinite(s.y)) {
    throw Error(ErrorKind::InvalidParameter, "sample coordinates must be finite");
  }
}

}  // namespace

Dataset::Dataset(std::vector<Sample> samples) : samples_(std::move(samples)) {
  for (const auto& s : samples_) check_finite(s);
}

Dataset::Dataset(std::vector<Sample> samples, std::vector<Sample> clean)
    : samples_(std::move(samples)), clean_(std::move(clean)) {
  if (!clean_.empty() && clean_.size() != samples_.size()) {
    throw Error(ErrorKind::ShapeMismatch, "clean columns must match the sample count");
  }
  for (const auto& s : samples_) check_finite(s);
  for (const auto& s : clean_) check_finite(s);
}

void Dataset::push_back(Sample s) {
  if (!clean_.empty()) throw Error(ErrorKind::ShapeMismatch, "dataset carries clean columns; supply the clean value");
  check_finite(s);
  samples_.push_back(s);
}

void Dataset::push_back(Sample s, Sample clean) {
  if (clean_.size() != samples_.size()) {
    throw Error(ErrorKind::ShapeMismatch, "dataset has no clean columns");
  }
  check_finite(s);
  check_finite(clean);
  samples_.push_back(s);
  clean_.push_back(clean);
}

Dataset Dataset::prefix(std::size_t n) const {
  if (n > samples_.size()) {
    throw Error(ErrorKind::InvalidParameter,
                "prefix of " + std::to_string(n) + " requested from " + std::to_string(samples_.size()) + " samples");
  }
  Dataset out;
  out.samples_.assign(samples_.begin(), samples_.begin() + static_cast<std::ptrdiff_t>(n));
  if (!clean_.empty()) out.clean_.assign(clean_.begin(), clean_.begin() + static_cast<std::ptrdiff_t>(n));
  out.meta_ = meta_;
  return out;
}

std::vector<double> Dataset::xs() const {
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) out.push_back(s.x);
  return out;
}

std::vector<double> Dataset::ys() const {
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) out.push_back(s.y);
  return out;
}

}  // namespace expmodel
