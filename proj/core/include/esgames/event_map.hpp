#pragma once

#include <vector>

#include "esgames/event_structure.hpp"

namespace esgames {

/// A total function on event indices, image[e] being the image of event e.
using EventMap = std::vector<EventIndex>;

EventMap identity_map(std::size_t n);
/// outer ∘ inner.
EventMap compose(const EventMap& outer, const EventMap& inner);
/// Inverse of a bijection on {0..n-1}.
EventMap inverse(const EventMap& permutation);
EventSet image(const EventMap& f, EventSet x);
/// Events e of the domain with f(e) ∈ target.
EventSet preimage(const EventMap& f, EventSet target, std::size_t domain_size);

/// A map of event structures together with its endpoints.
struct EsMap {
  EventStructurePtr source;
  EventStructurePtr target;
  EventMap map;

  EventIndex operator()(EventIndex e) const { return map[e]; }
  friend bool operator==(const EsMap& a, const EsMap& b) {
    return *a.source == *b.source && *a.target == *b.target && a.map == b.map;
  }
};

EsMap identity_es_map(const EventStructurePtr& es);
/// g ∘ f; throws InputError when f's target is not g's source.
EsMap compose(const EsMap& g, const EsMap& f);

/// Checks totality, polarity preservation, that images of configurations
/// are configurations, and local injectivity, by enumerating the source's
/// configurations.
Report validate_map(const EventStructure& source, const EventStructure& target, const EventMap& f);
Report validate_map(const EsMap& f);

/// The graph of f restricted to x, sorted by source event. Throws InputError
/// if x is not a configuration of the source or f is not injective on x.
std::vector<EventPair> restrict_map(const EsMap& f, EventSet x);

/// Bijective, polarity-, order- and conflict-preserving in both directions.
bool is_automorphism(const EventStructure& es, const EventMap& f);

/// All automorphisms, identity first, then lexicographic in the image table.
std::vector<EventMap> enumerate_automorphisms(const EventStructure& es);

}  // namespace esgames
