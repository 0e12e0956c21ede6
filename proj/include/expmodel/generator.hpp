#pragma once

#include <cstdint>

#include "expmodel/dataset.hpp"

namespace expmodel {

// Ulam form of the fully chaotic logistic map, 1 - 2x^2 on [-1, 1].
// Throws OutOfDomain outside [-1, 1].
[[nodiscard]] double logistic_step(double x);

inline constexpr int kTransientIterations = 100;
inline constexpr const char* kPrngName = "mt19937_64";

// Seed of independent substream `stream` derived from a master seed
// (splitmix64 finalizer over seed and stream id).
[[nodiscard]] std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

// Noisy chaotic benchmark: successive clean map values (x_o, y_o = step(x_o))
// with independent Gaussian noise of std sigma_noise on each coordinate.
// The initial condition, x noise and y noise come from separate substreams,
// so a longer run extends a shorter one without changing its samples.
// Identical meta gives a bit-identical dataset.
[[nodiscard]] Dataset generate(const GenerationMeta& meta);

}  // namespace expmodel
