#include "expmodel/generator.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "expmodel/error.hpp"

namespace expmodel {

namespace {

enum Stream : std::uint64_t { kInitialStream = 0, kNoiseXStream = 1, kNoiseYStream = 2 };

// Uniform doubles from the top 53 bits and Box-Muller normals, spelled out so
// that the stream does not depend on the standard library's distributions.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace

double logistic_step(double x) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw Error(ErrorKind::OutOfDomain, "logistic_step expects x in [-1, 1], got " + std::to_string(x));
  }
  return 1.0 - 2.0 * x * x;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Dataset generate(const GenerationMeta& meta) {
  meta.validate();

  double x = 0.0;
  if (meta.initial_x) {
    x = *meta.initial_x;
  } else {
    NormalStream init(substream_seed(meta.seed, kInitialStream));
    x = -0.99 + 1.98 * init.uniform();
  }
  for (int k = 0; k < kTransientIterations; ++k) x = logistic_step(x);

  NormalStream noise_x(substream_seed(meta.seed, kNoiseXStream));
  NormalStream noise_y(substream_seed(meta.seed, kNoiseYStream));

  Dataset out({}, {});
  for (std::size_t i = 0; i < meta.n; ++i) {
    const double x_o = x;
    const double y_o = logistic_step(x_o);
    const double nx = meta.sigma_noise * noise_x.normal();
    const double ny = meta.sigma_noise * noise_y.normal();
    out.push_back({x_o + nx, y_o + ny}, {x_o, y_o});
    x = y_o;
  }

  GenerationMeta recorded = meta;
  recorded.prng_name = kPrngName;
  out.set_meta(std::move(recorded));
  return out;
}

}  // namespace expmodel
