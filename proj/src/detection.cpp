#include "stimint/detection.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace stimint {

DetectorFanout DetectorFanout::symmetric(int arms, double efficiency) {
  return {arms, std::vector<double>(arms, 1.0 / arms), efficiency};
}

DetectorFanout DetectorFanout::cascade(double efficiency) {
  return {3, {0.5, 0.25, 0.25}, efficiency};
}

void DetectorFanout::validate() const {
  if (arms < 1) throw std::invalid_argument("fanout needs at least one arm");
  if (int(splitting.size()) != arms) {
    throw std::invalid_argument("splitting size must equal number of arms");
  }
  double sum = 0.0;
  for (double p : splitting) {
    if (p < 0.0) throw std::invalid_argument("splitting entries must be >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("splitting must sum to 1");
  if (!(efficiency > 0.0 && efficiency <= 1.0)) {
    throw std::invalid_argument("efficiency must lie in (0, 1]");
  }
}

double click_probability_given_photons(int n, const DetectorFanout& fanout, int required_clicks) {
  if (n < 0) throw std::invalid_argument("photon number must be >= 0");
  fanout.validate();
  if (required_clicks > fanout.arms) {
    throw std::invalid_argument("required clicks exceed number of arms");
  }
  if (required_clicks <= 0) return 1.0;

  // Bin 0 is photon loss; bins 1..arms are detector arms.
  std::vector<double> probs(fanout.arms + 1);
  probs[0] = 1.0 - fanout.efficiency;
  for (int j = 0; j < fanout.arms; ++j) probs[j + 1] = fanout.efficiency * fanout.splitting[j];

  double total = 0.0;
  std::vector<int> counts(probs.size(), 0);
  std::function<void(int, int, double, int)> walk = [&](int bin, int left, double weight,
                                                        int clicked) {
    if (bin == int(probs.size()) - 1) {
      counts[bin] = left;
      double w = weight * std::pow(probs[bin], left);
      for (int k = 2; k <= left; ++k) w /= k;  // finish the multinomial coefficient
      if (clicked + (bin > 0 && left > 0 ? 1 : 0) >= required_clicks) total += w;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      double w = weight * std::pow(probs[bin], k);
      for (int j = 2; j <= k; ++j) w /= j;
      walk(bin + 1, left - k, w, clicked + (bin > 0 && k > 0 ? 1 : 0));
    }
  };
  double nfact = 1.0;
  for (int k = 2; k <= n; ++k) nfact *= k;
  walk(0, n, nfact, 0);
  return total;
}

double coincidence_probability(const QuantumState& state, const CoincidencePattern& pattern,
                               const std::map<std::string, DetectorGroup>& groups) {
  // Resolve mode indices once.
  struct Resolved {
    std::vector<std::size_t> indices;
    const DetectorGroup* group;
    int min_clicks;
  };
  std::vector<Resolved> resolved;
  for (const auto& [name, min_clicks] : pattern.requirements) {
    auto it = groups.find(name);
    if (it == groups.end()) {
      throw std::invalid_argument("no detector group named " + name);
    }
    Resolved r{{}, &it->second, min_clicks};
    for (const auto& mode : it->second.modes) {
      r.indices.push_back(state.registry()->index(mode));
    }
    resolved.push_back(std::move(r));
  }

  double total = 0.0;
  for (const auto& [basis, amp] : state.terms()) {
    double p = std::norm(amp);
    for (const auto& r : resolved) {
      int n = 0;
      for (std::size_t idx : r.indices) n += basis.occupations[idx];
      p *= click_probability_given_photons(n, r.group->fanout, r.min_clicks);
      if (p == 0.0) break;
    }
    total += p;
  }
  return total;
}

HeraldResult herald_single_photon(const QuantumState& state, const std::string& herald_mode) {
  std::size_t idx = state.registry()->index(herald_mode);

  std::vector<std::string> remaining;
  for (std::size_t i = 0; i < state.registry()->size(); ++i) {
    if (i != idx) remaining.push_back(state.registry()->name(i));
  }
  RegistryPtr reduced = make_registry(std::move(remaining));

  QuantumState out(reduced, state.cutoff());
  if (state.truncated()) out.mark_truncated();
  double probability = 0.0;
  for (const auto& [basis, amp] : state.terms()) {
    if (basis.occupations[idx] < 1) continue;
    probability += std::norm(amp);
    FockBasisState next;
    next.occupations.reserve(basis.occupations.size() - 1);
    for (std::size_t i = 0; i < basis.occupations.size(); ++i) {
      if (i != idx) next.occupations.push_back(basis.occupations[i]);
    }
    out.add_term(next, amp);
  }
  return {out, probability};
}

}  // namespace stimint
