#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esgames/strategy.hpp"

namespace esgames {

/// φ(α, x) = (φ_α[x], φ_α x), with the image stored as a configuration index.
struct PhiEntry {
  Elem response = 0;
  std::uint32_t image = 0;

  friend bool operator==(const PhiEntry&, const PhiEntry&) = default;
};

/// A strategy with a bi-invariance structure φ : N × C(σ) → P × C(σ).
struct UniformStrategy {
  Strategy strategy;
  /// Entry α·|C(σ)| + x.
  std::vector<PhiEntry> phi;

  std::size_t configuration_count() const { return strategy.internal->configurations().size(); }
  const PhiEntry& at(Elem alpha, std::size_t x) const { return phi[alpha * configuration_count() + x]; }

  friend bool operator==(const UniformStrategy&, const UniformStrategy&) = default;
};

/// Builds φ from event maps φ_α and response tables (indexed like
/// configurations). Throws InputError when an image is not a configuration.
UniformStrategy uniform_from_slices(const Strategy& s, const std::vector<EventMap>& maps,
                                    const std::vector<std::vector<Elem>>& responses);

/// The event map realising φ_α: s ↦ the single event of φ_α[s] \ φ_α[s),
/// read off prime configurations. Empty when some difference is not a
/// single event.
std::optional<EventMap> phi_event_map(const UniformStrategy& u, Elem alpha);

/// The slice φ_α as a weak map α·σ → σ. Throws InputError when the event
/// map cannot be reconstructed.
WeakMap phi_slice(const UniformStrategy& u, Elem alpha);

/// Axioms "strategy", "totality", "event-map" (φ_α is realised by one event
/// map agreeing with every configuration image), "weak-map", "unit-law" and
/// "multiplication-law".
Report validate_uniform(const UniformStrategy& u);

/// Algebra homomorphism square for w : (σ, φ) → (τ, ψ). Axioms "weak-map"
/// and "homomorphism".
Report validate_uniform_map(const WeakMap& w, const UniformStrategy& u, const UniformStrategy& v);

struct LocalityWitness {
  Elem alpha;
  EventSet x;
};

/// Whether act(α) fixing p x pointwise forces φ_α to fix x pointwise.
/// nullopt means local; otherwise the first failing (α, x).
std::optional<LocalityWitness> locality_witness(const UniformStrategy& u);
inline bool is_local(const UniformStrategy& u) { return !locality_witness(u); }
std::string describe(const UniformStrategy& u, const LocalityWitness& w);
/// Axiom "locality", carrying the witness.
Report validate_locality(const UniformStrategy& u);

/// What the exhaustive search looked at.
struct SearchCertificate {
  std::vector<std::string> generators;
  /// The generators closed under s ↦ λ_N(s, p).
  std::vector<std::string> twisted;
  /// Per twisted generator: automorphisms of σ tracking it eventwise.
  std::vector<std::size_t> event_map_candidates;
  /// Per twisted generator: number of (event map, response table) pairs.
  std::vector<double> slice_candidates;
  /// Product of slice_candidates.
  double search_size = 0;
  std::uint64_t examined = 0;
  bool exhaustive = false;
};

struct SearchResult {
  std::optional<UniformStrategy> uniform;
  SearchCertificate certificate;
};

/// Exhaustive search for a uniform structure. φ is fixed on the twisted
/// generators and extended to N by the multiplication law; every candidate
/// that survives is checked with validate_uniform. Ties are broken by the
/// lexicographically least event maps, with the unit response tried first.
/// Throws BoundExceeded when the search size passes limits.max_search.
SearchResult search_uniform_structure(const Strategy& s, const Limits& limits = Limits::defaults());

/// Least generating set of N: scan elements in index order, keep those not
/// yet generated.
std::vector<Elem> greedy_generators(const FiniteGroup& g);

}  // namespace esgames
