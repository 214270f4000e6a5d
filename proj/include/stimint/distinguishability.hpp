#pragma once

#include "stimint/fock.hpp"

namespace stimint {

/// Gaussian map from delay to mode-overlap amplitude:
///   beta(T) = exp(-(T - t0)^2 / (2 tc^2)).
/// The squared overlap then traces the exp(-dT^2/Tc^2) profile that the
/// bunching-peak fits assume.
struct OverlapModel {
  double t0 = 0.0;
  double tc = 1.0;
};

double overlap_amplitude(const OverlapModel& model, double t_h);

/// Matched / orthogonal companion pair for one physical channel. Detectors
/// downstream cannot tell the two apart; only interference can.
struct ModePair {
  std::string matched;
  std::string orthogonal;
};

/// |n> photons in the mode c = beta * matched + sqrt(1-beta^2) * orthogonal,
/// expanded over the pair: sum_k sqrt(C(n,k)) beta^k (1-beta^2)^((n-k)/2)
/// |k, n-k>. Normalized.
QuantumState inject_fock_partial(const RegistryPtr& registry, int n, double beta,
                                 const ModePair& modes, int cutoff);

/// Coherent state in the partially overlapped mode; factorizes into coherent
/// states beta*alpha on matched and sqrt(1-beta^2)*alpha on orthogonal.
QuantumState inject_coherent_partial(const RegistryPtr& registry, Complex alpha, double beta,
                                     const ModePair& modes, int cutoff);

/// Same factorization multiplied onto an existing state whose pair modes are
/// vacuum in every term.
QuantumState with_coherent_partial(const QuantumState& state, Complex alpha, double beta,
                                   const ModePair& modes);

}  // namespace stimint
