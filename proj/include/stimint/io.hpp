#pragma once

#include <iosfwd>
#include <string>

#include "stimint/experiment.hpp"

namespace stimint {

/// Flat "key = value" config text. '#' starts a comment; unknown keys are
/// errors. Shared keys: alpha, g (real or "a+bi"), t0, tc, beta_max, delays
/// (comma list) or delay_points / delay_halfspan, fanout (symmetric|cascade),
/// efficiency, order, cutoff, shots, seed. The beam-splitter config adds
/// bs_t and bs_r.
AmplifierScanConfig parse_amplifier_config(std::istream& in);
BeamSplitterScanConfig parse_beamsplitter_config(std::istream& in);

Complex parse_complex(const std::string& text);

/// CSV contract: header "delay,value,sigma", one row per point, 17
/// significant digits, LF line endings.
void write_scan_csv(std::ostream& out, const std::vector<ScanPoint>& points);
std::vector<ScanPoint> read_scan_csv(std::istream& in);

std::string format_enhancement_report(const EnhancementReport& report);

}  // namespace stimint
