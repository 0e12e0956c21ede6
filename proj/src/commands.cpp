#include "expmodel/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "expmodel/dataset_io.hpp"
#include "expmodel/error.hpp"
#include "expmodel/generator.hpp"

namespace expmodel::cli {

namespace {

std::ofstream open_output(const std::filesystem::path& dir, const std::string& name) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = dir / name;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::InvalidParameter, "cannot write '" + path.string() + "'");
  return os;
}

std::vector<std::size_t> full_schedule(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), std::size_t{1});
  return out;
}

Dataset require_dataset(const std::optional<std::filesystem::path>& path, const char* flag) {
  if (!path) throw Error(ErrorKind::InvalidParameter, std::string("missing required ") + flag);
  return load_dataset_csv(*path);
}

const QualityReport* find_quality(const std::vector<QualityPoint>& sweep, std::size_t n) {
  for (const auto& p : sweep) {
    if (p.n == n) return &p.report;
  }
  return nullptr;
}

}  // namespace

std::uint64_t test_seed(std::uint64_t basic_seed) noexcept { return basic_seed + 1000; }

ScatteringFunction make_sf(const RunConfig& cfg, double sigma) {
  return ScatteringFunction(sigma, SpanConfig(cfg.span_l));
}

QuadratureGrid make_grid(const RunConfig& cfg, const ScatteringFunction& sf) {
  QuadratureGrid grid(SpanConfig(cfg.span_l), cfg.grid_points);
  grid.check_resolution(sf);
  return grid;
}

Dataset generate_dataset(std::uint64_t seed, double sigma_noise, std::size_t n) {
  GenerationMeta meta;
  meta.seed = seed;
  meta.sigma_noise = sigma_noise;
  meta.n = n;
  return generate(meta);
}

Dataset cmd_generate(const RunConfig& cfg) {
  if (cfg.n && *cfg.n == 0) throw Error(ErrorKind::InvalidParameter, "--n must be >= 1");
  auto data = generate_dataset(cfg.seed, cfg.sigma, cfg.n_or_default());
  auto os = open_output(cfg.out_dir, "samples.csv");
  write_dataset_csv(os, data);
  return data;
}

InfoCurve cmd_info(const RunConfig& cfg) {
  const auto sf = make_sf(cfg, cfg.sigma);
  const auto grid = make_grid(cfg, sf);
  const Dataset data = cfg.basic ? load_dataset_csv(*cfg.basic) : generate_dataset(cfg.seed, cfg.sigma, cfg.n_or_default());
  if (data.empty()) throw Error(ErrorKind::EmptyDataset, "no samples to analyse");
  const auto schedule = cfg.schedule.empty() ? default_schedule(data.size()) : cfg.schedule;
  auto curve = info_curve(data, sf, grid, schedule);

  auto os = open_output(cfg.out_dir, "info_curve.csv");
  write_info_curve_csv(os, curve);
  auto summary = open_output(cfg.out_dir, "summary.csv");
  write_info_summary_csv(summary, curve);
  return curve;
}

std::vector<double> cmd_predict(const RunConfig& cfg, std::ostream& warn) {
  const auto sf = make_sf(cfg, cfg.sigma);
  Dataset basic = require_dataset(cfg.basic, "--basic");
  const Dataset test = require_dataset(cfg.test, "--test");
  if (basic.empty()) throw Error(ErrorKind::EmptyDataset, "basic set has no samples");
  if (cfg.n) basic = basic.prefix(*cfg.n);

  const CaPredictor predictor(std::move(basic), sf);
  const auto xs = test.xs();
  const auto outside = std::count_if(xs.begin(), xs.end(), [&](double x) { return std::abs(x) > cfg.span_l; });
  if (outside > 0) {
    warn << "warning: " << outside << " test inputs lie outside the span (|x| > " << format_real(cfg.span_l)
         << "); predictions there are extrapolated\n";
  }
  auto y_pred = predictor.predict(xs);
  auto os = open_output(cfg.out_dir, "predictions.csv");
  write_predictions_csv(os, test, y_pred);
  return y_pred;
}

std::vector<SeedQuality> cmd_quality(const RunConfig& cfg) {
  const auto sf = make_sf(cfg, cfg.sigma);
  const std::size_t n = cfg.n_or_default();
  const auto schedule = cfg.schedule.empty() ? full_schedule(n) : cfg.schedule;

  std::vector<SeedQuality> out;
  for (int k = 0; k < kSeedsPerExperiment; ++k) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
    const auto basic = generate_dataset(seed, cfg.sigma, n);
    const auto test = generate_dataset(test_seed(seed), cfg.sigma, n);
    out.push_back({seed, quality_sweep(basic, test, sf, schedule)});
  }

  auto os = open_output(cfg.out_dir, "quality.csv");
  write_quality_header(os);
  for (const auto& s : out) write_quality_rows(os, s.seed, s.sweep);
  return out;
}

ReproduceSummary cmd_reproduce(const RunConfig& cfg) {
  static constexpr double kSigmas[] = {0.1, 0.2, 0.4};
  const std::size_t n = cfg.n_or_default();

  // Validate every kernel/grid pair up front so a bad config fails before any output.
  for (double s : kSigmas) (void)make_grid(cfg, make_sf(cfg, s));

  struct InfoRun {
    double sigma;
    std::uint64_t seed;
    InfoCurve curve;
  };
  std::vector<InfoRun> runs;
  for (double s : kSigmas) {
    const auto sf = make_sf(cfg, s);
    const auto grid = make_grid(cfg, sf);
    for (int k = 0; k < kSeedsPerExperiment; ++k) {
      const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
      const auto data = generate_dataset(seed, s, n);
      const auto schedule = cfg.schedule.empty() ? default_schedule(n) : cfg.schedule;
      runs.push_back({s, seed, info_curve(data, sf, grid, schedule)});
    }
  }
  auto run_for = [&](double s, std::uint64_t seed) -> const InfoCurve& {
    for (const auto& r : runs) {
      if (r.sigma == s && r.seed == seed) return r.curve;
    }
    throw Error(ErrorKind::NumericalFailure, "missing info run");
  };

  {
    auto os = open_output(cfg.out_dir, "fig2.csv");
    write_info_curve_csv(os, run_for(0.2, cfg.seed));
  }
  {
    auto os = open_output(cfg.out_dir, "fig3.csv");
    os << "sigma,seed,N,logN,I,R,C,K\n";
    for (const auto& run : runs) {
      for (const auto& r : run.curve.records) {
        write_csv_row(os, {format_real(run.sigma), std::to_string(run.seed), std::to_string(r.n), format_real(r.log_n),
                           format_real(r.info), format_real(r.redundancy), format_real(r.cost),
                           format_real(r.complexity)});
      }
    }
  }

  const auto sf = make_sf(cfg, 0.2);
  {
    const auto basic = generate_dataset(cfg.seed, 0.2, n);
    const auto test = generate_dataset(test_seed(cfg.seed), 0.2, n);
    const CaPredictor predictor(basic.prefix(std::min(kFig4BasicSize, n)), sf);
    const auto y_pred = predictor.predict(test.xs());
    auto os = open_output(cfg.out_dir, "fig4.csv");
    write_predictions_csv(os, test, y_pred);
  }

  std::vector<SeedQuality> quality;
  for (int k = 0; k < kSeedsPerExperiment; ++k) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
    const auto basic = generate_dataset(seed, 0.2, n);
    const auto test = generate_dataset(test_seed(seed), 0.2, n);
    quality.push_back({seed, quality_sweep(basic, test, sf, full_schedule(n))});
  }
  {
    auto os = open_output(cfg.out_dir, "fig5.csv");
    write_quality_header(os);
    for (const auto& s : quality) write_quality_rows(os, s.seed, s.sweep);
  }

  // Report: reference values next to computed ones, checked against the
  // acceptance bands.
  std::ostringstream rep;
  bool all_pass = true;
  auto verdict = [&](bool ok) {
    all_pass = all_pass && ok;
    return ok ? "PASS" : "FAIL";
  };
  auto line = [&](const std::string& name, std::uint64_t seed, double value, const std::string& reference,
                  const std::string& band, bool ok) {
    rep << name << " seed=" << seed << " computed=" << format_real(value) << " reference=" << reference
        << " band=" << band << ' ' << (ok ? "ok" : "out") << '\n';
  };

  rep << "# sigma=0.2 L=" << format_real(cfg.span_l) << " N=" << n << " grid=" << cfg.grid_points
      << " map=ulam prng=" << kPrngName << " seeds=" << cfg.seed << ".." << cfg.seed + kSeedsPerExperiment - 1 << '\n';
  int plateau_ok = 0;
  int nopt_ok = 0;
  for (int k = 0; k < kSeedsPerExperiment; ++k) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
    const auto& c = run_for(0.2, seed);
    const double i_last = c.records.back().info;
    const bool i_ok = i_last >= 3.3 && i_last <= 4.3;
    const bool k_ok = c.complexity_limit >= 30.0 && c.complexity_limit <= 60.0;
    const bool n_ok = c.n_opt >= 15 && c.n_opt <= 64 && static_cast<double>(c.n_opt) <= c.complexity_limit + 10.0;
    plateau_ok += (i_ok && k_ok) ? 1 : 0;
    nopt_ok += n_ok ? 1 : 0;
    line("I_N", seed, i_last, "3.8", "[3.3,4.3]", i_ok);
    line("I_inf", seed, c.info_limit, "3.8", "[3.3,4.3]", c.info_limit >= 3.3 && c.info_limit <= 4.3);
    line("K_inf", seed, c.complexity_limit, "45", "[30,60]", k_ok);
    line("N_opt", seed, static_cast<double>(c.n_opt), "32", "[15,64] and <= K_inf+10", n_ok);
  }

  bool monotone = true;
  for (int k = 0; k < kSeedsPerExperiment; ++k) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
    const auto& a = run_for(0.1, seed);
    const auto& b = run_for(0.2, seed);
    const auto& c = run_for(0.4, seed);
    const bool ok = a.info_limit > b.info_limit && b.info_limit > c.info_limit && a.n_opt >= b.n_opt &&
                    b.n_opt >= c.n_opt;
    monotone = monotone && ok;
    rep << "sigma_response seed=" << seed << " I_inf(0.1,0.2,0.4)=" << format_real(a.info_limit) << ','
        << format_real(b.info_limit) << ',' << format_real(c.info_limit) << " N_opt=" << a.n_opt << ',' << b.n_opt
        << ',' << c.n_opt << ' ' << (ok ? "ok" : "out") << '\n';
  }

  bool q32_ok = true;
  for (const auto& s : quality) {
    const auto* r = find_quality(s.sweep, 32);
    const double q = r ? r->q : std::nan("");
    const bool ok = r && q >= 0.98;
    q32_ok = q32_ok && ok;
    line("Q(32)", s.seed, q, "0.99", "[0.98,1]", ok);
  }
  double spread = 0.0;
  for (std::size_t m = 50; m <= n; ++m) {
    double lo = 1e300, hi = -1e300;
    for (const auto& s : quality) {
      const auto* r = find_quality(s.sweep, m);
      if (!r) continue;
      lo = std::min(lo, r->q);
      hi = std::max(hi, r->q);
    }
    if (hi >= lo) spread = std::max(spread, hi - lo);
  }
  rep << "Q_spread(N>=50) computed=" << format_real(spread) << " band=[0,0.02] " << (spread <= 0.02 ? "ok" : "out")
      << '\n';

  rep << "criterion information_plateau " << verdict(plateau_ok >= 2) << '\n';
  rep << "criterion optimal_sample_count " << verdict(nopt_ok >= 2) << '\n';
  rep << "criterion sigma_monotonicity " << verdict(monotone) << '\n';
  rep << "criterion predictor_quality " << verdict(q32_ok && spread <= 0.02) << '\n';

  auto os = open_output(cfg.out_dir, "report.txt");
  os << rep.str();
  return {all_pass};
}

}  // namespace expmodel::cli
