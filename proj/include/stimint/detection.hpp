#pragma once

#include <map>

#include "stimint/fock.hpp"

namespace stimint {

/// Passive fanout of one physical beam onto `arms` threshold detectors.
/// Each photon is routed to arm j with probability splitting[j] and survives
/// with probability efficiency; detectors report click / no click only.
struct DetectorFanout {
  int arms = 1;
  std::vector<double> splitting = {1.0};
  double efficiency = 1.0;

  static DetectorFanout symmetric(int arms, double efficiency = 1.0);
  static DetectorFanout cascade(double efficiency = 1.0);  // (1/2, 1/4, 1/4)

  void validate() const;
};

/// One detector group: the fanout plus the modes whose photons feed it.
/// Matched and orthogonal temporal companions share a group, so their photon
/// numbers add for routing.
struct DetectorGroup {
  std::vector<std::string> modes;
  DetectorFanout fanout;
};

/// Coincidence requirement: at least `min_clicks` distinct arms of the named
/// group click, for every listed group.
struct CoincidencePattern {
  std::vector<std::pair<std::string, int>> requirements;
};

/// P(at least required_clicks distinct arms click | n photons enter the
/// fanout), by exact multinomial enumeration over photon routings.
double click_probability_given_photons(int n, const DetectorFanout& fanout, int required_clicks);

/// Post-selected coincidence probability: sum over basis states of
/// |amplitude|^2 times the product of per-group click probabilities.
double coincidence_probability(const QuantumState& state, const CoincidencePattern& pattern,
                               const std::map<std::string, DetectorGroup>& groups);

struct HeraldResult {
  QuantumState state;   // unnormalized conditional state, herald mode removed
  double probability;   // success probability of the herald click
};

/// Projects onto herald occupation >= 1 and drops the herald mode from the
/// registry of the surviving branch.
HeraldResult herald_single_photon(const QuantumState& state, const std::string& herald_mode);

}  // namespace stimint
