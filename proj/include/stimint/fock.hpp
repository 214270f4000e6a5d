#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace stimint {

using Complex = std::complex<double>;

/// Ordered set of named optical modes. States refer to modes by index into
/// a shared registry; label lookup is exact string comparison.
class ModeRegistry {
 public:
  explicit ModeRegistry(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t idx) const { return names_.at(idx); }
  bool contains(const std::string& label) const;
  std::size_t index(const std::string& label) const;  // throws on unknown label

  bool operator==(const ModeRegistry& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using RegistryPtr = std::shared_ptr<const ModeRegistry>;

RegistryPtr make_registry(std::vector<std::string> names);

/// Occupation-number vector over the modes of a registry.
struct FockBasisState {
  std::vector<int> occupations;

  int total() const;
  bool operator==(const FockBasisState& other) const = default;
  // Lexicographic order; fixes the iteration order of QuantumState terms.
  bool operator<(const FockBasisState& other) const { return occupations < other.occupations; }
};

/// Sparse superposition of Fock basis states with a global total-photon cutoff.
/// Immutable after construction; every operation returns a new state.
class QuantumState {
 public:
  static constexpr double kPruneThreshold = 1e-15;

  QuantumState(RegistryPtr registry, int cutoff);

  static QuantumState vacuum(RegistryPtr registry, int cutoff);

  const RegistryPtr& registry() const { return registry_; }
  int cutoff() const { return cutoff_; }
  const std::map<FockBasisState, Complex>& terms() const { return terms_; }
  bool truncated() const { return truncated_; }

  Complex amplitude(const FockBasisState& basis) const;
  double squared_norm() const;

  /// Accumulate amplitude onto a basis state. Terms beyond the cutoff are
  /// dropped and the truncation flag is raised; magnitudes below the prune
  /// threshold are removed.
  void add_term(const FockBasisState& basis, Complex amp);
  void mark_truncated() { truncated_ = true; }

  /// One line per term: "n0 n1 ... re im", lexicographic in occupations.
  std::string debug_text() const;

 private:
  RegistryPtr registry_;
  int cutoff_;
  std::map<FockBasisState, Complex> terms_;
  bool truncated_ = false;
};

/// a†_mode: |...n...> -> sqrt(n+1)|...n+1...>.
QuantumState create(const QuantumState& state, const std::string& mode);

/// a_mode: |...n...> -> sqrt(n)|...n-1...>.
QuantumState annihilate(const QuantumState& state, const std::string& mode);

/// <a|b> = sum conj(a_k) b_k. Registries must match.
Complex inner_product(const QuantumState& a, const QuantumState& b);

/// Linear combination of states over a shared registry.
QuantumState scale_and_add(const std::vector<std::pair<Complex, QuantumState>>& parts);

/// Truncated coherent state exp(-|alpha|^2/2) sum alpha^n/sqrt(n!) |n> on one
/// mode (vacuum elsewhere). Not renormalized after truncation.
QuantumState coherent_state_truncated(const RegistryPtr& registry, const std::string& mode,
                                      Complex alpha, int cutoff);

/// Multiply a coherent-state expansion onto a mode that is vacuum in every
/// existing term of `state`. Used to build product states mode by mode.
QuantumState with_coherent(const QuantumState& state, const std::string& mode, Complex alpha);

}  // namespace stimint
