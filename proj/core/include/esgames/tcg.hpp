#pragma once

#include <map>
#include <memory>
#include <vector>

#include "esgames/uniform.hpp"

namespace esgames {

/// θ : source ≅ target, stored as its graph sorted by source event.
struct ConfigBijection {
  EventSet source;
  EventSet target;
  std::vector<EventPair> graph;

  bool is_identity() const;
  /// Restriction to a subset of the source.
  ConfigBijection restrict_to(EventSet x) const;
  /// Image of e under θ; e must lie in the source.
  EventIndex operator()(EventIndex e) const;

  friend bool operator==(const ConfigBijection&, const ConfigBijection&) = default;
  friend auto operator<=>(const ConfigBijection& a, const ConfigBijection& b) {
    if (auto c = a.source <=> b.source; c != 0) return c;
    return a.graph <=> b.graph;
  }
};

ConfigBijection identity_bijection(EventSet x);
/// Graph of f restricted to x.
ConfigBijection restriction_of(const EventMap& f, EventSet x);
ConfigBijection inverse(const ConfigBijection& t);
/// second ∘ first; first.target must equal second.source.
ConfigBijection compose(const ConfigBijection& second, const ConfigBijection& first);
/// (f a, f θ(a)) for a in the source: the image of θ along a map.
ConfigBijection push_forward(const EventMap& f, const ConfigBijection& t);
std::string format_bijection(const EventStructure& es, const ConfigBijection& t);

/// A set of bijections between configurations of one structure. Members are
/// kept sorted and deduplicated by graph.
class IsomorphismFamily {
 public:
  IsomorphismFamily() = default;
  IsomorphismFamily(EventStructurePtr es, std::vector<ConfigBijection> members);

  const EventStructurePtr& es() const { return es_; }
  const std::vector<ConfigBijection>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const ConfigBijection& t) const;
  /// Indices of members with the given source.
  const std::vector<std::size_t>& from(EventSet source) const;

  friend bool operator==(const IsomorphismFamily& a, const IsomorphismFamily& b) {
    return *a.es_ == *b.es_ && a.members_ == b.members_;
  }

 private:
  EventStructurePtr es_;
  std::vector<ConfigBijection> members_;
  std::map<EventSet, std::vector<std::size_t>> by_source_;
};

/// Axioms "well-formed" (sources and targets are configurations, graphs are
/// bijections), "polarity", "identities", "inverse", "composition",
/// "restriction" and "extension".
Report validate_iso_family(const IsomorphismFamily& f);

/// All restrictions of all act(g) to configurations.
IsomorphismFamily family_from_action(const GroupAction& a);

struct ThinConcurrentGame {
  EventStructurePtr es;
  IsomorphismFamily full;
  IsomorphismFamily pos;
  IsomorphismFamily neg;

  friend bool operator==(const ThinConcurrentGame& a, const ThinConcurrentGame& b) {
    return *a.es == *b.es && a.full == b.full && a.pos == b.pos && a.neg == b.neg;
  }
};

/// The three families are checked as isomorphism families ("full/...",
/// "pos/...", "neg/..."), then "inclusion", "intersection",
/// "pos-extension" and "neg-extension".
Report validate_thin_game(const ThinConcurrentGame& g);

/// neg and pos from the actions, full the composition closure of their
/// union, closed under restriction. Extension is not forced; a failure shows
/// up in validate_thin_game.
ThinConcurrentGame tcg_from_game(const Game& a);

/// Restrictions of every φ_α to configurations of σ. Throws InputError when
/// some φ_α is not realised by an event map.
IsomorphismFamily family_from_uniform(const UniformStrategy& u);

struct SimStrategy {
  Strategy strategy;
  IsomorphismFamily family;
  std::shared_ptr<const ThinConcurrentGame> game;
};

/// Axiom "thinness": id_x ⊆+ θ forces θ to be an identity.
Report check_thin(const SimStrategy& s);
/// Axiom "sim-receptivity".
Report check_sim_receptivity(const SimStrategy& s);
/// Axiom "symmetry-preservation": p maps family members into the game's
/// full family.
Report check_projection_symmetry(const SimStrategy& s);
/// Strategy, family, symmetry preservation, thinness and ~-receptivity.
Report validate_sim_strategy(const SimStrategy& s);

/// Pairs σ with family_from_uniform(u). Throws PreconditionError
/// ("uniformity not local: ...") with the locality witness.
SimStrategy to_sim_strategy(const UniformStrategy& u);

/// Axioms "map", "symmetry" (members go to members) and
/// "positive-reindexing" (p_σ x ≅ p_τ f x through f lies in the positive
/// family).
Report check_weak_map_sim(const EventMap& f, const SimStrategy& s, const SimStrategy& t);

}  // namespace esgames
