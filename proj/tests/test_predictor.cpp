#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "expmodel/density.hpp"
#include "expmodel/error.hpp"
#include "expmodel/generator.hpp"
#include "expmodel/predictor.hpp"

using namespace expmodel;

namespace {

const ScatteringFunction kSf(0.2, SpanConfig(2.0));

Dataset logistic(std::size_t n, std::uint64_t seed = 1) {
  GenerationMeta meta;
  meta.seed = seed;
  meta.n = n;
  meta.sigma_noise = 0.2;
  return generate(meta);
}

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an expmodel::Error");
  return ErrorKind::NumericalFailure;
}

double population_variance(const std::vector<double>& v) {
  const double m = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size());
}

// Moments of y and y_p(x) under the kernel model f(z), by 2-D trapezoid
// quadrature over the extended span (test oracle).
struct ModelMoments {
  double mean_y = 0.0, mean_yp = 0.0, var_y = 0.0, var_yp = 0.0, cov = 0.0;
};

ModelMoments model_moments(const DensityModel& model, const CaPredictor& predictor) {
  const double lim = 2.0 + 8 * 0.2;
  const double step = 0.2 / 8;
  const int n = static_cast<int>(std::round(2 * lim / step));
  const double h = 2 * lim / n;
  double s1 = 0, sy = 0, syy = 0, syp = 0, sypyp = 0, syyp = 0;
  for (int i = 0; i <= n; ++i) {
    const double x = -lim + i * h;
    const double wx = (i == 0 || i == n) ? 0.5 : 1.0;
    const double yp = predictor.predict(x);
    for (int j = 0; j <= n; ++j) {
      const double y = -lim + j * h;
      const double w = wx * ((j == 0 || j == n) ? 0.5 : 1.0) * h * h * model.joint_pdf({x, y});
      s1 += w;
      sy += w * y;
      syy += w * y * y;
      syp += w * yp;
      sypyp += w * yp * yp;
      syyp += w * y * yp;
    }
  }
  ModelMoments m;
  m.mean_y = sy / s1;
  m.mean_yp = syp / s1;
  m.var_y = syy / s1 - m.mean_y * m.mean_y;
  m.var_yp = sypyp / s1 - m.mean_yp * m.mean_yp;
  m.cov = syyp / s1 - m.mean_y * m.mean_yp;
  return m;
}

}  // namespace

TEST_CASE("predictor rejects an empty basic set") {
  CHECK(kind_of([] { CaPredictor p(Dataset{}, kSf); }) == ErrorKind::EmptyDataset);
}

TEST_CASE("weights: single sample, symmetric pair, isolated sample") {
  const CaPredictor one(Dataset({{0.5, 0.1}}), kSf);
  for (double x : {-10.0, 0.0, 0.5, 3.0}) CHECK(ca_weights(one, x) == std::vector<double>{1.0});

  const CaPredictor pair(Dataset({{-0.4, 1.0}, {0.6, -1.0}}), kSf);
  const auto w = ca_weights(pair, 0.1);
  CHECK(w[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-14));

  // Others at least 10 sigma away.
  const CaPredictor isolated(Dataset({{-1.5, 0.2}, {0.0, 0.9}, {2.0, -0.4}, {-3.5, 0.0}}), kSf);
  CHECK(ca_weights(isolated, 0.0)[1] >= 1.0 - 1e-9);
  const double range = 0.9 - (-0.4);
  CHECK(std::abs(ca_predict(isolated, 0.0) - 0.9) <= 1e-6 * range);
}

TEST_CASE("weights sum to one and stay in [0,1] far outside the span") {
  const auto data = logistic(200);
  const CaPredictor p(data, kSf);
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  std::vector<double> queries{-20.0, 20.0, 19.999, -19.5};
  while (queries.size() < 1000) queries.push_back(dist(rng));
  const auto ys = data.ys();
  const auto [lo, hi] = std::minmax_element(ys.begin(), ys.end());
  for (double x : queries) {
    const auto w = ca_weights(p, x);
    double sum = 0.0;
    for (double c : w) {
      CHECK(c >= 0.0);
      CHECK(c <= 1.0);
      sum += c;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    const double y = ca_predict(p, x);
    CHECK(y >= *lo);
    CHECK(y <= *hi);
  }
}

TEST_CASE("constant targets are reproduced everywhere") {
  const double c = -0.37;
  std::vector<Sample> s;
  for (double x : {-1.2, -0.4, 0.3, 0.9, 1.4}) s.push_back({x, c});
  const CaPredictor p(Dataset(s), kSf);
  for (double x : {-5.0, -1.0, 0.0, 0.77, 12.0}) CHECK(ca_predict(p, x) == doctest::Approx(c).epsilon(1e-14));
}

TEST_CASE("translation equivariance") {
  const auto data = logistic(60);
  const double shift = 0.75;
  std::vector<Sample> shifted_y, shifted_x;
  for (const auto& s : data.samples()) {
    shifted_y.push_back({s.x, s.y + shift});
    shifted_x.push_back({s.x + shift, s.y});
  }
  const CaPredictor p(data, kSf), py(Dataset(shifted_y), kSf), px(Dataset(shifted_x), kSf);
  for (double x : {-1.3, -0.2, 0.0, 0.45, 1.1}) {
    CHECK(ca_predict(py, x) == doctest::Approx(ca_predict(p, x) + shift).epsilon(1e-12));
    CHECK(ca_predict(px, x + shift) == doctest::Approx(ca_predict(p, x)).epsilon(1e-12));
  }
}

TEST_CASE("predictions over the training inputs are smoother than the targets") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto data = logistic(100, seed);
    const CaPredictor p(data, kSf);
    const auto fitted = p.predict(data.xs());
    CHECK(population_variance(fitted) <= population_variance(data.ys()));
  }
}

TEST_CASE("predictor_quality special cases") {
  const std::vector<double> y{0.3, -0.1, 0.8, 0.5, -0.6};
  CHECK(predictor_quality(y, y).q == doctest::Approx(1.0).epsilon(1e-15));

  const double mean = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
  const std::vector<double> flat(y.size(), mean);
  const auto r0 = predictor_quality(y, flat);
  CHECK(std::abs(r0.q) <= 1e-12);
  CHECK(r0.var_pred == 0.0);
  CHECK(r0.mse == doctest::Approx(r0.var_true).epsilon(1e-12));

  const std::vector<double> a{0.0, 1.0}, b{10.0, 11.0};
  const auto neg = predictor_quality(a, b);
  CHECK(neg.q == -199.0);
  CHECK(neg.mse == 100.0);
  CHECK(neg.var_true + neg.var_pred == 0.5);
}

TEST_CASE("predictor_quality errors") {
  const std::vector<double> zeros{0.0, 0.0}, ones{1.0, 1.0}, three{1.0, 2.0, 3.0};
  CHECK(kind_of([&] { (void)predictor_quality(zeros, ones); }) == ErrorKind::DegenerateVariance);
  CHECK(kind_of([&] { (void)predictor_quality(three, ones); }) == ErrorKind::ShapeMismatch);
  const std::vector<double> single{1.0};
  CHECK(kind_of([&] { (void)predictor_quality(single, single); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("quality report identities on random data") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> yt(40), yp(40);
    const double bias = 0.1 * trial - 2.0;
    for (std::size_t i = 0; i < yt.size(); ++i) {
      yt[i] = noise(rng);
      yp[i] = 0.6 * yt[i] + 0.3 * noise(rng) + bias;
    }
    const auto r = predictor_quality(yt, yp);
    CHECK(r.n_test == 40);
    CHECK(std::abs(r.q - (1.0 - r.mse / (r.var_true + r.var_pred))) <= 1e-12);
    CHECK(std::abs(r.q - r.q_from_moments()) <= 1e-9);
  }
}

TEST_CASE("theoretical quality") {
  CHECK(ca_quality_theoretical(0.7, 0.7) == 1.0);
  CHECK(ca_quality_theoretical(0.7, 0.0) == 0.0);
  CHECK(ca_quality_theoretical(1.0, 0.5) == doctest::Approx(2.0 / 3.0));
  CHECK(kind_of([] { (void)ca_quality_theoretical(0.0, 0.0); }) == ErrorKind::DegenerateVariance);
  CHECK(kind_of([] { (void)ca_quality_theoretical(-1.0, 0.5); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("conditional-average identities hold under the model distribution") {
  const auto data = logistic(50);
  const DensityModel model(data, kSf);
  const CaPredictor predictor(data, kSf);
  const auto m = model_moments(model, predictor);
  CHECK(std::abs(m.mean_yp - m.mean_y) <= 1e-3);
  CHECK(std::abs(m.cov - m.var_yp) <= 1e-3 * m.var_y);
  CHECK(m.var_yp <= m.var_y);
  const double q_model = ca_quality_theoretical(m.var_y, m.var_yp);
  CHECK(q_model >= 0.0);
  CHECK(q_model <= 1.0);
}

TEST_CASE("quality sweep") {
  const auto basic = logistic(200, 1);
  const auto test = logistic(200, 1001);
  const std::vector<std::size_t> schedule{1, 2, 8, 32, 200};
  const auto sweep = quality_sweep(basic, test, kSf, schedule);
  REQUIRE(sweep.size() == schedule.size());
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    CHECK(sweep[k].n == schedule[k]);
    CHECK(sweep[k].report.n_test == 200);
  }
  // Constant predictor at y_1: no covariance, only a mean offset.
  CHECK(sweep[0].report.var_pred <= 1e-20);
  CHECK(sweep[0].report.q <= 0.1);

  CHECK(kind_of([&] { (void)quality_sweep(basic, test, kSf, std::vector<std::size_t>{1, 300}); }) ==
        ErrorKind::InvalidSchedule);
}
