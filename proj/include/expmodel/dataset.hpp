#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace expmodel {

// One measured pair z_i = (x_i, y_i).
struct Sample {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

// Provenance of a synthetic dataset; written into the CSV comment line.
struct GenerationMeta {
  std::uint64_t seed = 1;
  double sigma_noise = 0.2;
  std::size_t n = 200;
  std::string map_name = "ulam";
  std::optional<double> initial_x;  // drawn from the seeded stream when absent
  std::string prng_name = "mt19937_64";

  // Throws InvalidParameter.
  void validate() const;
};

// Ordered list of samples. Order matters: the information curve and the
// quality sweep are defined over nested prefixes.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<Sample> samples);
  Dataset(std::vector<Sample> samples, std::vector<Sample> clean);

  void push_back(Sample s);
  void push_back(Sample s, Sample clean);

  [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
  [[nodiscard]] bool empty() const noexcept { return samples_.empty(); }
  [[nodiscard]] const Sample& operator[](std::size_t i) const { return samples_[i]; }
  [[nodiscard]] std::span<const Sample> samples() const noexcept { return samples_; }

  // Noise-free values, present only for generated data.
  [[nodiscard]] bool has_clean() const noexcept { return !clean_.empty(); }
  [[nodiscard]] std::span<const Sample> clean() const noexcept { return clean_; }

  [[nodiscard]] const std::optional<GenerationMeta>& meta() const noexcept { return meta_; }
  void set_meta(GenerationMeta meta) { meta_ = std::move(meta); }

  // First n samples; throws InvalidParameter if n > size().
  [[nodiscard]] Dataset prefix(std::size_t n) const;

  [[nodiscard]] std::vector<double> xs() const;
  [[nodiscard]] std::vector<double> ys() const;

 private:
  std::vector<Sample> samples_;
  std::vector<Sample> clean_;
  std::optional<GenerationMeta> meta_;
};

}  // namespace expmodel
