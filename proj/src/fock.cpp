#include "stimint/fock.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stimint {

ModeRegistry::ModeRegistry(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) {
        throw std::invalid_argument("duplicate mode label: " + names_[i]);
      }
    }
  }
}

bool ModeRegistry::contains(const std::string& label) const {
  for (const auto& n : names_) {
    if (n == label) return true;
  }
  return false;
}

std::size_t ModeRegistry::index(const std::string& label) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == label) return i;
  }
  throw std::invalid_argument("unknown mode label: " + label);
}

RegistryPtr make_registry(std::vector<std::string> names) {
  return std::make_shared<const ModeRegistry>(std::move(names));
}

int FockBasisState::total() const {
  return std::accumulate(occupations.begin(), occupations.end(), 0);
}

QuantumState::QuantumState(RegistryPtr registry, int cutoff)
    : registry_(std::move(registry)), cutoff_(cutoff) {
  if (!registry_) throw std::invalid_argument("null registry");
  if (cutoff_ < 0) throw std::invalid_argument("cutoff must be non-negative");
}

QuantumState QuantumState::vacuum(RegistryPtr registry, int cutoff) {
  QuantumState st(std::move(registry), cutoff);
  FockBasisState vac{std::vector<int>(st.registry_->size(), 0)};
  st.terms_[vac] = Complex(1.0, 0.0);
  return st;
}

Complex QuantumState::amplitude(const FockBasisState& basis) const {
  auto it = terms_.find(basis);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

double QuantumState::squared_norm() const {
  double s = 0.0;
  for (const auto& [basis, amp] : terms_) s += std::norm(amp);
  return s;
}

void QuantumState::add_term(const FockBasisState& basis, Complex amp) {
  if (basis.occupations.size() != registry_->size()) {
    throw std::invalid_argument("basis state has wrong mode count");
  }
  if (basis.total() > cutoff_) {
    truncated_ = true;
    return;
  }
  auto it = terms_.find(basis);
  Complex sum = (it == terms_.end() ? amp : it->second + amp);
  if (std::abs(sum) < kPruneThreshold) {
    if (it != terms_.end()) terms_.erase(it);
    return;
  }
  terms_[basis] = sum;
}

std::string QuantumState::debug_text() const {
  std::ostringstream out;
  out.precision(17);
  for (const auto& [basis, amp] : terms_) {
    for (std::size_t i = 0; i < basis.occupations.size(); ++i) {
      if (i) out << ' ';
      out << basis.occupations[i];
    }
    out << ' ' << amp.real() << ' ' << amp.imag() << '\n';
  }
  return out.str();
}

QuantumState create(const QuantumState& state, const std::string& mode) {
  std::size_t idx = state.registry()->index(mode);
  QuantumState out(state.registry(), state.cutoff());
  if (state.truncated()) out.mark_truncated();
  for (const auto& [basis, amp] : state.terms()) {
    FockBasisState next = basis;
    int n = next.occupations[idx];
    next.occupations[idx] = n + 1;
    out.add_term(next, amp * std::sqrt(double(n + 1)));
  }
  return out;
}

QuantumState annihilate(const QuantumState& state, const std::string& mode) {
  std::size_t idx = state.registry()->index(mode);
  QuantumState out(state.registry(), state.cutoff());
  if (state.truncated()) out.mark_truncated();
  for (const auto& [basis, amp] : state.terms()) {
    int n = basis.occupations[idx];
    if (n == 0) continue;
    FockBasisState next = basis;
    next.occupations[idx] = n - 1;
    out.add_term(next, amp * std::sqrt(double(n)));
  }
  return out;
}

Complex inner_product(const QuantumState& a, const QuantumState& b) {
  if (!(*a.registry() == *b.registry())) {
    throw std::invalid_argument("inner_product: registry mismatch");
  }
  Complex s(0.0, 0.0);
  for (const auto& [basis, amp] : a.terms()) {
    s += std::conj(amp) * b.amplitude(basis);
  }
  return s;
}

QuantumState scale_and_add(const std::vector<std::pair<Complex, QuantumState>>& parts) {
  if (parts.empty()) throw std::invalid_argument("scale_and_add: empty input");
  const QuantumState& first = parts.front().second;
  QuantumState out(first.registry(), first.cutoff());
  for (const auto& [coeff, st] : parts) {
    if (!(*st.registry() == *first.registry())) {
      throw std::invalid_argument("scale_and_add: registry mismatch");
    }
    if (st.truncated()) out.mark_truncated();
    for (const auto& [basis, amp] : st.terms()) {
      out.add_term(basis, coeff * amp);
    }
  }
  return out;
}

QuantumState coherent_state_truncated(const RegistryPtr& registry, const std::string& mode,
                                      Complex alpha, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  return with_coherent(QuantumState::vacuum(registry, cutoff), mode, alpha);
}

QuantumState with_coherent(const QuantumState& state, const std::string& mode, Complex alpha) {
  std::size_t idx = state.registry()->index(mode);
  QuantumState out(state.registry(), state.cutoff());
  if (state.truncated()) out.mark_truncated();
  double prefactor = std::exp(-0.5 * std::norm(alpha));
  for (const auto& [basis, amp] : state.terms()) {
    if (basis.occupations[idx] != 0) {
      throw std::invalid_argument("with_coherent: mode " + mode + " already occupied");
    }
    Complex an(1.0, 0.0);  // alpha^n / sqrt(n!)
    for (int n = 0; basis.total() + n <= state.cutoff(); ++n) {
      FockBasisState next = basis;
      next.occupations[idx] = n;
      out.add_term(next, amp * prefactor * an);
      an *= alpha / std::sqrt(double(n + 1));
    }
    if (std::abs(alpha) > 0.0) out.mark_truncated();  // coherent tail dropped
  }
  return out;
}

}  // namespace stimint
