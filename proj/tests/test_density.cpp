#include <doctest.h>

#include <cmath>
#include <random>

#include "expmodel/density.hpp"
#include "expmodel/error.hpp"
#include "expmodel/generator.hpp"

using namespace expmodel;

namespace {

const ScatteringFunction kSf(0.2, SpanConfig(2.0));

// Trapezoid over [lo, hi] with the given step (test-side oracle).
template <typename F>
double trapezoid(F f, double lo, double hi, double step) {
  const int n = static_cast<int>(std::ceil((hi - lo) / step));
  const double h = (hi - lo) / n;
  double sum = 0.5 * (f(lo) + f(hi));
  for (int k = 1; k < n; ++k) sum += f(lo + k * h);
  return sum * h;
}

Dataset logistic(std::size_t n, std::uint64_t seed = 1) {
  GenerationMeta meta;
  meta.seed = seed;
  meta.n = n;
  meta.sigma_noise = 0.2;
  return generate(meta);
}

}  // namespace

TEST_CASE("empty dataset is rejected") {
  try {
    DensityModel m(Dataset{}, kSf);
    FAIL("expected EmptyDataset");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyDataset);
  }
}

TEST_CASE("single sample reduces to the kernel") {
  const DensityModel m(Dataset({{0.3, -0.5}}), kSf);
  CHECK(m.joint_pdf({0.3, -0.5}) == doctest::Approx(3.9788735773).epsilon(1e-10));
  CHECK(m.marginal_pdf(0.3) == doctest::Approx(1.9947114020).epsilon(1e-10));
  for (double x : {-3.0, -0.2, 0.3, 1.7, 6.0}) {
    for (double y : {-1.0, -0.5, 0.4}) {
      CHECK(m.conditional_pdf(y, x) == doctest::Approx(gaussian_eval(y, -0.5, 0.2)).epsilon(1e-12));
    }
  }
}

TEST_CASE("two samples: linearity and marginal between them") {
  const DensityModel m(Dataset({{-1.0, 0.0}, {1.0, 0.0}}), kSf);
  const double a = kSf({0.0, 0.0}, {-1.0, 0.0});
  const double b = kSf({0.0, 0.0}, {1.0, 0.0});
  CHECK(m.joint_pdf({0.0, 0.0}) == doctest::Approx(0.5 * (a + b)).epsilon(1e-12));
  CHECK(m.marginal_pdf(0.0) == doctest::Approx(1.9947114020 * std::exp(-12.5)).epsilon(1e-9));
}

TEST_CASE("joint pdf is normalized on the extended span") {
  const DensityModel m(logistic(200), kSf);
  const double lim = 2.0 + 8 * 0.2;
  const double step = 0.2 / 4;
  const double mass = trapezoid(
      [&](double x) { return trapezoid([&](double y) { return m.joint_pdf({x, y}); }, -lim, lim, step); }, -lim, lim,
      step);
  CHECK(std::abs(mass - 1.0) <= 1e-4);
}

TEST_CASE("analytic marginal equals the y-integral of the joint") {
  const DensityModel m(logistic(200), kSf);
  const double lim = 2.0 + 8 * 0.2;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1.8, 1.8);
  for (int k = 0; k < 10; ++k) {
    const double x = dist(rng);
    const double integral = trapezoid([&](double y) { return m.joint_pdf({x, y}); }, -lim, lim, 0.2 / 8);
    CHECK(std::abs(m.marginal_pdf(x) - integral) <= 1e-6);
  }
}

TEST_CASE("conditional pdf normalizes over y") {
  const DensityModel m(logistic(200), kSf);
  const double lim = 2.0 + 8 * 0.2;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-1.8, 1.8);
  for (int k = 0; k < 10; ++k) {
    const double x = dist(rng);
    const double integral = trapezoid([&](double y) { return m.conditional_pdf(y, x); }, -lim, lim, 0.2 / 8);
    CHECK(std::abs(integral - 1.0) <= 1e-6);
  }
}

TEST_CASE("conditional pdf peaks at the common y value") {
  const double c = 0.35;
  const DensityModel m(Dataset({{-0.9, c}, {-0.1, c}, {0.4, c}, {1.2, c}}), kSf);
  for (double x : {-1.5, -0.5, 0.0, 0.8, 2.5}) {
    const double peak = m.conditional_pdf(c, x);
    CHECK(peak > m.conditional_pdf(c + 0.01, x));
    CHECK(peak > m.conditional_pdf(c - 0.01, x));
  }
}

TEST_CASE("conditional times marginal reproduces the joint") {
  const DensityModel m(logistic(50), kSf);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int k = 0; k < 200; ++k) {
    const double x = dist(rng), y = dist(rng);
    const double joint = m.joint_pdf({x, y});
    if (joint < 1e-200) continue;
    CHECK(m.conditional_pdf(y, x) * m.marginal_pdf(x) == doctest::Approx(joint).epsilon(1e-12));
  }
}

TEST_CASE("densities positive and finite; conditional stays defined far away") {
  const DensityModel m(logistic(100), kSf);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dist(-2.0 - 8 * 0.2, 2.0 + 8 * 0.2);
  for (int k = 0; k < 500; ++k) {
    const double x = dist(rng), y = dist(rng);
    const double j = m.joint_pdf({x, y}), mx = m.marginal_pdf(x), c = m.conditional_pdf(y, x);
    CHECK((j > 0.0 && std::isfinite(j)));
    CHECK((mx > 0.0 && std::isfinite(mx)));
    CHECK((c > 0.0 && std::isfinite(c)));
  }
  // Direct ratio is 0/0 here.
  const double c_far = m.conditional_pdf(0.0, 40.0);
  CHECK(std::isfinite(c_far));
  CHECK(c_far > 0.0);
  CHECK(std::isfinite(m.log_joint_pdf({40.0, 40.0})));
}

TEST_CASE("mixture linearity over concatenated datasets") {
  const auto a = logistic(30, 1);
  const auto b = logistic(20, 2);
  std::vector<Sample> all(a.samples().begin(), a.samples().end());
  all.insert(all.end(), b.samples().begin(), b.samples().end());
  const DensityModel ma(a, kSf), mb(b, kSf), mab(Dataset(all), kSf);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int k = 0; k < 100; ++k) {
    const Point2 z{dist(rng), dist(rng)};
    const double mixed = (30 * ma.joint_pdf(z) + 20 * mb.joint_pdf(z)) / 50;
    CHECK(mab.joint_pdf(z) == doctest::Approx(mixed).epsilon(1e-12));
  }
}

TEST_CASE("dataset prefix and sample validation") {
  const auto d = logistic(10);
  const auto p = d.prefix(4);
  CHECK(p.size() == 4);
  CHECK(p.has_clean());
  for (std::size_t i = 0; i < 4; ++i) CHECK(p[i] == d[i]);
  CHECK_THROWS_AS((void)d.prefix(11), Error);
  CHECK_THROWS_AS(Dataset({{NAN, 0.0}}), Error);
}
