// expmodel: generate noisy chaotic data, compute information statistics,
// fit the conditional-average predictor and emit figure data as CSV.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "expmodel/commands.hpp"
#include "expmodel/error.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;

void add_common(CLI::App* cmd, expmodel::cli::RunConfig& cfg) {
  cmd->add_option("--sigma", cfg.sigma, "Scattering width (kernel and noise std)")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  cmd->add_option("--span-l", cfg.span_l, "Span half-width L")->capture_default_str();
  cmd->add_option("--grid-points", cfg.grid_points, "Quadrature points per axis")->capture_default_str();
  cmd->add_option("--schedule", cfg.schedule, "Sample counts N to evaluate (strictly increasing)")->delimiter(',');
  cmd->add_option("--out-dir", cfg.out_dir, "Output directory")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information statistics and conditional-average modeling of noisy paired measurements"};
  app.require_subcommand(1);

  expmodel::cli::RunConfig cfg;
  std::size_t n = 0;

  auto* generate = app.add_subcommand("generate", "Write samples.csv from the noisy chaotic generator");
  auto* info = app.add_subcommand("info", "Information curve (info_curve.csv) and summary.csv");
  auto* predict = app.add_subcommand("predict", "Conditional-average predictions on a test set");
  auto* quality = app.add_subcommand("quality", "Predictor quality sweep over three seeds");
  auto* reproduce = app.add_subcommand("reproduce", "All figure data plus report.txt");

  for (auto* cmd : {generate, info, predict, quality, reproduce}) {
    add_common(cmd, cfg);
    cmd->add_option("--n", n, "Number of samples (predict: prefix of the basic set)");
  }
  for (auto* cmd : {info, predict}) {
    cmd->add_option("--basic", cfg.basic, "Basic dataset CSV");
  }
  predict->add_option("--test", cfg.test, "Test dataset CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  for (auto* cmd : {generate, info, predict, quality, reproduce}) {
    if (cmd->parsed() && cmd->count("--n") > 0) cfg.n = n;
  }

  try {
    if (generate->parsed()) {
      const auto data = expmodel::cli::cmd_generate(cfg);
      std::cout << "wrote " << (cfg.out_dir / "samples.csv").string() << " (" << data.size() << " samples)\n";
    } else if (info->parsed()) {
      const auto curve = expmodel::cli::cmd_info(cfg);
      std::cout << "N_opt=" << curve.n_opt << " I_inf=" << curve.info_limit << " K_inf=" << curve.complexity_limit
                << '\n';
    } else if (predict->parsed()) {
      const auto y = expmodel::cli::cmd_predict(cfg, std::cerr);
      std::cout << "wrote " << (cfg.out_dir / "predictions.csv").string() << " (" << y.size() << " rows)\n";
    } else if (quality->parsed()) {
      const auto runs = expmodel::cli::cmd_quality(cfg);
      for (const auto& r : runs) {
        std::cout << "seed=" << r.seed << " Q(N=" << r.sweep.back().n << ")=" << r.sweep.back().report.q << '\n';
      }
    } else if (reproduce->parsed()) {
      const auto summary = expmodel::cli::cmd_reproduce(cfg);
      std::cout << "wrote figure data and report.txt to " << cfg.out_dir.string()
                << (summary.all_pass ? " (all checks in band)\n" : " (some checks out of band, see report.txt)\n");
    }
  } catch (const expmodel::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_input_error() ? kExitInvalid : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
