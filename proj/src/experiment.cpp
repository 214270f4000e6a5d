#include "stimint/experiment.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace stimint {

namespace {

int min_photons(ScanPattern pattern) { return pattern == ScanPattern::abcd ? 4 : 3; }

int signal_clicks(ScanPattern pattern) { return pattern == ScanPattern::abcd ? 3 : 2; }

void check_cutoff(const ScanSettings& s, ScanPattern pattern) {
  if (s.cutoff < min_photons(pattern)) {
    throw std::invalid_argument(std::string("cutoff too small for pattern ") +
                                (pattern == ScanPattern::abcd ? "abcd" : "abd"));
  }
  if (!(s.beta_max >= 0.0 && s.beta_max <= 1.0)) {
    throw std::invalid_argument("beta_max must lie in [0, 1]");
  }
  if (s.shots < 0) throw std::invalid_argument("shots must be >= 0");
}

std::map<std::string, DetectorGroup> scan_groups(const ScanSettings& s,
                                                 std::vector<std::string> signal_modes,
                                                 const std::string& herald_mode) {
  DetectorFanout signal =
      s.cascade_fanout ? DetectorFanout::cascade(s.efficiency) : DetectorFanout::symmetric(3, s.efficiency);
  DetectorFanout herald{1, {1.0}, s.efficiency};
  return {{"signal", {std::move(signal_modes), signal}}, {"herald", {{herald_mode}, herald}}};
}

CoincidencePattern scan_pattern(ScanPattern pattern) {
  return {{{"signal", signal_clicks(pattern)}, {"herald", 1}}};
}

ScanPoint sample_point(double delay, double probability, const ScanSettings& s, std::size_t index) {
  if (s.shots == 0) {
    return {delay, probability, std::sqrt(std::max(probability, 1e-300))};
  }
  // Per-point stream derived from (seed, index) so scheduling never matters.
  std::uint64_t stream = s.seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL * (index + 1);
  std::mt19937_64 rng(stream);
  std::poisson_distribution<long long> poisson(probability * double(s.shots));
  double counts = double(poisson(rng));
  return {delay, counts, std::sqrt(std::max(counts, 1.0))};
}

const std::vector<double>& resolve_delays(const ScanSettings& s, std::vector<double>& storage) {
  if (!s.delays.empty()) return s.delays;
  storage = default_delay_grid(s.overlap);
  return storage;
}

}  // namespace

std::vector<double> default_delay_grid(const OverlapModel& overlap, int n_points,
                                       double halfspan_in_tc) {
  std::vector<double> delays;
  delays.reserve(n_points);
  double span = halfspan_in_tc * overlap.tc;
  for (int i = 0; i < n_points; ++i) {
    delays.push_back(overlap.t0 - span + 2.0 * span * i / (n_points - 1));
  }
  return delays;
}

ScanResult run_amplifier_scan(const AmplifierScanConfig& config, ScanPattern pattern) {
  check_cutoff(config, pattern);
  RegistryPtr reg = make_registry({"s", "s_perp", "i"});
  ModePair pair{"s", "s_perp"};
  AmplifierSpec amp{config.g, "s", "i", config.order};
  auto groups = scan_groups(config, {"s", "s_perp"}, "i");
  CoincidencePattern coincidence = scan_pattern(pattern);

  std::vector<double> storage;
  const std::vector<double>& delays = resolve_delays(config, storage);

  ScanResult result;
  for (std::size_t i = 0; i < delays.size(); ++i) {
    double beta = config.beta_max * overlap_amplitude(config.overlap, delays[i]);
    QuantumState input =
        inject_coherent_partial(reg, config.alpha, beta, pair, config.cutoff);
    QuantumState output = apply_amplifier(input, amp);
    result.truncated = result.truncated || output.truncated();
    double p = coincidence_probability(output, coincidence, groups);
    result.points.push_back(sample_point(delays[i], p, config, i));
  }
  return result;
}

ScanResult run_beamsplitter_scan(const BeamSplitterScanConfig& config, ScanPattern pattern) {
  check_cutoff(config, pattern);
  RegistryPtr reg = make_registry({"a_m", "a_p", "b_m", "b_p", "d"});
  ModePair pair{"b_m", "b_p"};
  AmplifierSpec source{config.g, "a_m", "d", config.order};
  BeamSplitterSpec matched{config.bs_t, config.bs_r, "a_m", "b_m"};
  BeamSplitterSpec orthogonal{config.bs_t, config.bs_r, "a_p", "b_p"};
  auto groups = scan_groups(config, {"a_m", "a_p"}, "d");
  CoincidencePattern coincidence = scan_pattern(pattern);

  std::vector<double> storage;
  const std::vector<double>& delays = resolve_delays(config, storage);

  ScanResult result;
  for (std::size_t i = 0; i < delays.size(); ++i) {
    double beta = config.beta_max * overlap_amplitude(config.overlap, delays[i]);
    QuantumState state = QuantumState::vacuum(reg, config.cutoff);
    state = apply_amplifier(state, source);  // heralded pair source
    state = with_coherent_partial(state, config.alpha, beta, pair);
    state = apply_beam_splitter(state, matched);
    state = apply_beam_splitter(state, orthogonal);
    result.truncated = result.truncated || state.truncated();
    double p = coincidence_probability(state, coincidence, groups);
    result.points.push_back(sample_point(delays[i], p, config, i));
  }
  return result;
}

EnhancementReport report_enhancement(int n_max, int cutoff) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  if (n_max + 1 > cutoff) throw std::invalid_argument("n_max + 1 exceeds cutoff");

  RegistryPtr reg = make_registry({"a_m", "a_p", "b_m", "b_p"});
  BeamSplitterSpec matched = BeamSplitterSpec::fifty_fifty("a_m", "b_m");
  BeamSplitterSpec orthogonal = BeamSplitterSpec::fifty_fifty("a_p", "b_p");
  std::size_t ia_m = reg->index("a_m");
  std::size_t ia_p = reg->index("a_p");
  std::size_t ib_m = reg->index("b_m");
  std::size_t ib_p = reg->index("b_p");

  auto all_port1_probability = [&](int n, bool indistinguishable) {
    // One photon in port a, N photons in port b (matched or orthogonal
    // temporal mode), then the splitter; sum |amp|^2 with port b empty.
    QuantumState st = QuantumState::vacuum(reg, cutoff);
    st = create(st, "a_m");
    const std::string b_mode = indistinguishable ? "b_m" : "b_p";
    double norm = 1.0;
    for (int k = 0; k < n; ++k) {
      st = create(st, b_mode);
      norm *= k + 1;
    }
    st = scale_and_add({{Complex(1.0 / std::sqrt(norm), 0.0), st}});
    st = apply_beam_splitter(st, matched);
    st = apply_beam_splitter(st, orthogonal);
    double p = 0.0;
    for (const auto& [basis, amp] : st.terms()) {
      if (basis.occupations[ib_m] == 0 && basis.occupations[ib_p] == 0 &&
          basis.occupations[ia_m] + basis.occupations[ia_p] == n + 1) {
        p += std::norm(amp);
      }
    }
    return p;
  };

  EnhancementReport report;
  for (int n = 0; n <= n_max; ++n) {
    EnhancementRow row;
    row.n = n;
    row.amplifier_rate = ideal_enhancement(n);
    row.bs_indistinguishable = all_port1_probability(n, true);
    row.bs_distinguishable = all_port1_probability(n, false);
    row.ratio = row.bs_indistinguishable / row.bs_distinguishable;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace stimint
