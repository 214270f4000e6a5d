#pragma once

#include <cstdint>

#include "stimint/detection.hpp"
#include "stimint/distinguishability.hpp"
#include "stimint/elements.hpp"
#include "stimint/fit.hpp"

namespace stimint {

/// Coincidence pattern of the scans: ABCD is the four-fold (three signal
/// fanout clicks plus the idler/herald), ABD the three-fold.
enum class ScanPattern { abcd, abd };

/// Knobs shared by both scan experiments.
struct ScanSettings {
  Complex alpha{0.31622776601683794, 0.0};  // |alpha|^2 = 0.1 per pulse
  Complex g{0.1, 0.0};
  OverlapModel overlap{0.0, 1.0};
  double beta_max = 1.0;        // peak overlap amplitude at T = t0
  std::vector<double> delays;   // empty -> 21 points over t0 +- 3 tc
  bool cascade_fanout = false;  // (1/2,1/4,1/4) instead of (1/3,1/3,1/3)
  double efficiency = 1.0;
  int order = 2;
  int cutoff = 6;
  long long shots = 0;  // 0 = exact probabilities
  std::uint64_t seed = 0;
};

struct AmplifierScanConfig : ScanSettings {};

struct BeamSplitterScanConfig : ScanSettings {
  double bs_t = 0.7071067811865476;
  double bs_r = 0.7071067811865476;
};

struct ScanResult {
  std::vector<ScanPoint> points;
  bool truncated = false;
};

std::vector<double> default_delay_grid(const OverlapModel& overlap, int n_points = 21,
                                       double halfspan_in_tc = 3.0);

/// Stimulated-emission scan: partially overlapped coherent injection into the
/// signal port of the perturbative amplifier, delay-scanned coincidences.
ScanResult run_amplifier_scan(const AmplifierScanConfig& config, ScanPattern pattern);

/// Interference analogue: heralded single photon combined with the partially
/// overlapped coherent field on a beam splitter, same coincidence patterns.
ScanResult run_beamsplitter_scan(const BeamSplitterScanConfig& config, ScanPattern pattern);

struct EnhancementRow {
  int n;
  double amplifier_rate;         // in units of the spontaneous rate R
  double bs_indistinguishable;   // all N+1 photons out of port 1
  double bs_distinguishable;
  double ratio;                  // indistinguishable / distinguishable
};

struct EnhancementReport {
  std::vector<EnhancementRow> rows;
};

/// N = 0..n_max table comparing the amplifier enhancement with the
/// beam-splitter bunching probabilities, all by state evolution.
EnhancementReport report_enhancement(int n_max, int cutoff = 6);

}  // namespace stimint
