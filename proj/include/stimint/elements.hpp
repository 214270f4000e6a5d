#pragma once

#include "stimint/fock.hpp"

namespace stimint {

/// Perturbative parametric amplifier acting on a signal/idler mode pair.
/// The exponent is g a_s† a_i† - g* a_s a_i; `order` truncates its Taylor
/// series, so order 1 is the usual 1 + (g a_s† a_i† + h.c.) on an empty idler.
struct AmplifierSpec {
  Complex g;
  std::string signal;
  std::string idler;
  int order = 1;
};

/// Real symmetric beam splitter convention:
///   a1† -> t a1† - r a2†,  a2† -> r a1† + t a2†.
/// With this choice a single photon entering in2 bunches into port 1 with a
/// positive amplitude, and |1,1> through 50:50 gives (|2,0> - |0,2>)/sqrt2.
struct BeamSplitterSpec {
  double t;
  double r;
  std::string in1;
  std::string in2;

  static BeamSplitterSpec fifty_fifty(std::string in1, std::string in2);
};

QuantumState apply_amplifier(const QuantumState& state, const AmplifierSpec& spec);

QuantumState apply_beam_splitter(const QuantumState& state, const BeamSplitterSpec& spec);

/// Probability that all N+1 photons (N in one port, 1 in the other) leave
/// port 1 of a 50:50 splitter: (N+1)/2^(N+1) if indistinguishable, 1/2^(N+1)
/// if not.
double bunching_probability(int n_photons_port_a, bool indistinguishable);

/// Exact Bogoliubov mean output photon number for Fock input |n_in> and
/// vacuum idler: |G|^2 n_in + |g|^2 (n_in + 1) with |G|^2 = 1 + |g|^2.
double mean_gain_photon_number(int n_in, Complex g);

/// Ratio of pair-emission probability with an n-photon matched input to the
/// spontaneous (vacuum-input) probability, computed by first-order state
/// evolution. Equals n+1.
double ideal_enhancement(int n_input_photons);

}  // namespace stimint
