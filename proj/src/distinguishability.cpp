#include "stimint/distinguishability.hpp"

#include <cmath>
#include <stdexcept>

namespace stimint {

namespace {

void check_beta(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("overlap beta must lie in [0, 1]");
  }
}

void check_pair(const ModePair& modes) {
  if (modes.matched == modes.orthogonal) {
    throw std::invalid_argument("matched and orthogonal modes must differ");
  }
}

}  // namespace

double overlap_amplitude(const OverlapModel& model, double t_h) {
  if (!(model.tc > 0.0)) throw std::invalid_argument("overlap tc must be positive");
  double d = (t_h - model.t0) / model.tc;
  return std::exp(-0.5 * d * d);
}

QuantumState inject_fock_partial(const RegistryPtr& registry, int n, double beta,
                                 const ModePair& modes, int cutoff) {
  if (n < 0) throw std::invalid_argument("photon number must be >= 0");
  check_beta(beta);
  check_pair(modes);
  std::size_t im = registry->index(modes.matched);
  std::size_t io = registry->index(modes.orthogonal);
  double gamma = std::sqrt(std::max(0.0, 1.0 - beta * beta));

  QuantumState out(registry, cutoff);
  std::vector<int> occ(registry->size(), 0);
  for (int k = 0; k <= n; ++k) {
    double c = 1.0;  // sqrt(C(n,k))
    for (int j = 1; j <= k; ++j) c *= std::sqrt(double(n - j + 1) / j);
    occ[im] = k;
    occ[io] = n - k;
    out.add_term({occ}, c * std::pow(beta, k) * std::pow(gamma, n - k));
  }
  return out;
}

QuantumState inject_coherent_partial(const RegistryPtr& registry, Complex alpha, double beta,
                                     const ModePair& modes, int cutoff) {
  return with_coherent_partial(QuantumState::vacuum(registry, cutoff), alpha, beta, modes);
}

QuantumState with_coherent_partial(const QuantumState& state, Complex alpha, double beta,
                                   const ModePair& modes) {
  check_beta(beta);
  check_pair(modes);
  double gamma = std::sqrt(std::max(0.0, 1.0 - beta * beta));
  QuantumState out = with_coherent(state, modes.matched, beta * alpha);
  return with_coherent(out, modes.orthogonal, gamma * alpha);
}

}  // namespace stimint
