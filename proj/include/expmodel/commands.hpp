#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "expmodel/dataset.hpp"
#include "expmodel/information.hpp"
#include "expmodel/predictor.hpp"

namespace expmodel::cli {

struct RunConfig {
  double sigma = 0.2;
  std::optional<std::size_t> n;  // 200 when unset, except predict (whole basic set)
  std::uint64_t seed = 1;
  double span_l = 2.0;
  std::size_t grid_points = 257;
  std::vector<std::size_t> schedule;  // empty: command default
  std::filesystem::path out_dir = ".";
  std::optional<std::filesystem::path> basic;
  std::optional<std::filesystem::path> test;

  [[nodiscard]] std::size_t n_or_default() const { return n.value_or(200); }
};

inline constexpr std::size_t kDefaultSampleCount = 200;
inline constexpr int kSeedsPerExperiment = 3;
inline constexpr std::size_t kFig4BasicSize = 50;

// Test sets use a seed disjoint from the basic sets of the same run.
[[nodiscard]] std::uint64_t test_seed(std::uint64_t basic_seed) noexcept;

// Kernel, span and grid built from the config; throws InvalidParameter or
// InvalidGrid if the config invariants fail for the given sigma.
[[nodiscard]] ScatteringFunction make_sf(const RunConfig& cfg, double sigma);
[[nodiscard]] QuadratureGrid make_grid(const RunConfig& cfg, const ScatteringFunction& sf);

[[nodiscard]] Dataset generate_dataset(std::uint64_t seed, double sigma_noise, std::size_t n);

// Each command writes its artifacts under cfg.out_dir and returns the main result.
Dataset cmd_generate(const RunConfig& cfg);
InfoCurve cmd_info(const RunConfig& cfg);
std::vector<double> cmd_predict(const RunConfig& cfg, std::ostream& warn);

struct SeedQuality {
  std::uint64_t seed = 0;
  std::vector<QualityPoint> sweep;
};
std::vector<SeedQuality> cmd_quality(const RunConfig& cfg);

struct ReproduceSummary {
  bool all_pass = false;
};
ReproduceSummary cmd_reproduce(const RunConfig& cfg);

}  // namespace expmodel::cli
