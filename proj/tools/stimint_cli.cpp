#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "stimint/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("STIMINT_SEED");
  if (!raw || !*raw) return std::nullopt;
  return std::strtoull(raw, nullptr, 10);
}

stimint::ScanPattern parse_pattern(const std::string& name) {
  if (name == "abcd") return stimint::ScanPattern::abcd;
  if (name == "abd") return stimint::ScanPattern::abd;
  throw std::invalid_argument("pattern must be abcd or abd");
}

template <typename Config>
Config load_config(const std::string& path, Config (*parse)(std::istream&),
                   const std::optional<std::uint64_t>& cli_seed) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  Config cfg = parse(in);
  // Precedence: CLI flag, then environment, then the config file.
  if (auto s = env_seed()) cfg.seed = *s;
  if (cli_seed) cfg.seed = *cli_seed;
  return cfg;
}

void write_csv_file(const std::string& path, const std::vector<stimint::ScanPoint>& points) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  stimint::write_scan_csv(out, points);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stimulated-emission / multi-photon-interference scan simulator"};
  app.require_subcommand(1);

  int n_max = 2;
  int cutoff = 6;
  auto* enhance = app.add_subcommand("enhance", "Print the N vs enhancement table");
  enhance->add_option("--n-max", n_max, "Largest input photon number")->capture_default_str();
  enhance->add_option("--cutoff", cutoff, "Total photon-number cutoff")->capture_default_str();

  std::string config_path, pattern_name = "abcd", out_path;
  std::optional<std::uint64_t> cli_seed;
  auto add_scan_options = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "Config file (key = value)")->required();
    cmd->add_option("--pattern", pattern_name, "abcd or abd")->capture_default_str();
    cmd->add_option("--out", out_path, "Output CSV path")->required();
    cmd->add_option("--seed", cli_seed, "RNG seed (overrides env and config)");
  };
  auto* scan_amp = app.add_subcommand("scan-amp", "Amplifier stimulated-emission scan");
  add_scan_options(scan_amp);
  auto* scan_bs = app.add_subcommand("scan-bs", "Beam-splitter interference scan");
  add_scan_options(scan_bs);

  std::string fit_in;
  bool unweighted = false;
  auto* fit = app.add_subcommand("fit", "Fit a Gaussian bunching peak to a scan CSV");
  fit->add_option("--in", fit_in, "Input scan CSV")->required();
  fit->add_flag("--unweighted", unweighted, "Ignore per-point sigmas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enhance->parsed()) {
      std::cout << stimint::format_enhancement_report(stimint::report_enhancement(n_max, cutoff));
      return kExitOk;
    }
    if (scan_amp->parsed()) {
      auto cfg = load_config(config_path, stimint::parse_amplifier_config, cli_seed);
      auto result = stimint::run_amplifier_scan(cfg, parse_pattern(pattern_name));
      write_csv_file(out_path, result.points);
      return kExitOk;
    }
    if (scan_bs->parsed()) {
      auto cfg = load_config(config_path, stimint::parse_beamsplitter_config, cli_seed);
      auto result = stimint::run_beamsplitter_scan(cfg, parse_pattern(pattern_name));
      write_csv_file(out_path, result.points);
      return kExitOk;
    }
    if (fit->parsed()) {
      std::ifstream in(fit_in);
      if (!in) throw std::invalid_argument("cannot open input file " + fit_in);
      auto points = stimint::read_scan_csv(in);
      auto result = stimint::fit_gaussian_peak(points, !unweighted);
      std::cout << stimint::fit_report(result);
      if (!result.converged && result.v != 0.0) return kExitNumerical;
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
