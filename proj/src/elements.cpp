#include "stimint/elements.hpp"

#include <cmath>
#include <stdexcept>

namespace stimint {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) {
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// K = g a_s† a_i† - g* a_s a_i applied once.
QuantumState apply_exponent(const QuantumState& state, const AmplifierSpec& spec) {
  QuantumState up = create(create(state, spec.signal), spec.idler);
  QuantumState down = annihilate(annihilate(state, spec.signal), spec.idler);
  return scale_and_add({{spec.g, up}, {-std::conj(spec.g), down}});
}

}  // namespace

BeamSplitterSpec BeamSplitterSpec::fifty_fifty(std::string in1, std::string in2) {
  return {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), std::move(in1), std::move(in2)};
}

QuantumState apply_amplifier(const QuantumState& state, const AmplifierSpec& spec) {
  if (spec.signal == spec.idler) {
    throw std::invalid_argument("amplifier signal and idler must differ");
  }
  if (spec.order < 1) throw std::invalid_argument("amplifier order must be >= 1");
  if (std::abs(spec.g) >= 1.0) {
    throw std::invalid_argument("amplifier gain |g| must be < 1 (perturbative regime)");
  }
  state.registry()->index(spec.signal);
  state.registry()->index(spec.idler);

  std::vector<std::pair<Complex, QuantumState>> series;
  series.emplace_back(Complex(1.0, 0.0), state);
  QuantumState power = state;
  for (int j = 1; j <= spec.order; ++j) {
    power = apply_exponent(power, spec);
    series.emplace_back(Complex(1.0 / factorial(j), 0.0), power);
  }
  return scale_and_add(series);
}

QuantumState apply_beam_splitter(const QuantumState& state, const BeamSplitterSpec& spec) {
  if (spec.in1 == spec.in2) throw std::invalid_argument("beam splitter ports must differ");
  if (std::abs(spec.t * spec.t + spec.r * spec.r - 1.0) > 1e-12) {
    throw std::invalid_argument("beam splitter requires t^2 + r^2 = 1");
  }
  std::size_t i1 = state.registry()->index(spec.in1);
  std::size_t i2 = state.registry()->index(spec.in2);

  QuantumState out(state.registry(), state.cutoff());
  if (state.truncated()) out.mark_truncated();
  for (const auto& [basis, amp] : state.terms()) {
    int n1 = basis.occupations[i1];
    int n2 = basis.occupations[i2];
    double base = 1.0 / std::sqrt(factorial(n1) * factorial(n2));
    // (t a1† - r a2†)^n1 (r a1† + t a2†)^n2 expanded binomially.
    for (int j = 0; j <= n1; ++j) {
      for (int k = 0; k <= n2; ++k) {
        int m1 = j + k;
        int m2 = n1 + n2 - m1;
        double coeff = binomial(n1, j) * std::pow(spec.t, j) * std::pow(-spec.r, n1 - j) *
                       binomial(n2, k) * std::pow(spec.r, k) * std::pow(spec.t, n2 - k) *
                       std::sqrt(factorial(m1) * factorial(m2));
        FockBasisState next = basis;
        next.occupations[i1] = m1;
        next.occupations[i2] = m2;
        out.add_term(next, amp * base * coeff);
      }
    }
  }
  return out;
}

double bunching_probability(int n_photons_port_a, bool indistinguishable) {
  if (n_photons_port_a < 0) throw std::invalid_argument("photon number must be >= 0");
  int total = n_photons_port_a + 1;
  double numer = indistinguishable ? double(total) : 1.0;
  return std::ldexp(numer, -total);
}

double mean_gain_photon_number(int n_in, Complex g) {
  if (n_in < 0) throw std::invalid_argument("photon number must be >= 0");
  double g2 = std::norm(g);
  return (1.0 + g2) * n_in + g2 * (n_in + 1);
}

namespace {

// Probability of any idler-occupied outcome after a first-order pass with a
// matched |n>-photon signal input.
double pair_emission_probability(int n) {
  RegistryPtr reg = make_registry({"s", "i"});
  QuantumState input = QuantumState::vacuum(reg, n + 2);
  for (int k = 0; k < n; ++k) input = create(input, "s");
  input = scale_and_add({{Complex(1.0 / std::sqrt(factorial(n)), 0.0), input}});
  QuantumState output = apply_amplifier(input, {Complex(0.1, 0.0), "s", "i", 1});
  double p = 0.0;
  std::size_t idler = reg->index("i");
  for (const auto& [basis, amp] : output.terms()) {
    if (basis.occupations[idler] >= 1) p += std::norm(amp);
  }
  return p;
}

}  // namespace

double ideal_enhancement(int n_input_photons) {
  if (n_input_photons < 0) throw std::invalid_argument("photon number must be >= 0");
  return pair_emission_probability(n_input_photons) / pair_emission_probability(0);
}

}  // namespace stimint
