#pragma once

#include <utility>
#include <vector>

#include "esgames/game.hpp"

namespace esgames {

/// An event structure σ with a projection onto the events of a game.
struct Strategy {
  EventStructurePtr internal;
  GamePtr game;
  EventMap proj;

  const EventStructure& es() const { return *internal; }
  EventSet display(EventSet x) const { return image(proj, x); }

  friend bool operator==(const Strategy& a, const Strategy& b) {
    return *a.internal == *b.internal && *a.game == *b.game && a.proj == b.proj;
  }
};

/// σ = A with the identity projection.
Strategy identity_strategy(const GamePtr& game);

/// Axioms: "projection-map" (the projection is a map of event structures),
/// "receptivity" (each p x ⊆- z has exactly one y ⊇ x with p y = z),
/// "courtesy" (each z ⊆+ p x has some y ⊆ x with p y = z) and
/// "uniqueness" (that y is unique; failures are internal inconsistencies).
Report validate_strategy(const Strategy& s);

/// A map f : σ → τ with a response f[x] ∈ P for every configuration x of σ,
/// stored in the order of σ.configurations().
struct WeakMap {
  Strategy source;
  Strategy target;
  EventMap f;
  std::vector<Elem> responses;

  friend bool operator==(const WeakMap&, const WeakMap&) = default;
};

/// p_τ ∘ f = p_σ. Axioms "same-game", "map", "strict".
Report validate_strict_map(const EventMap& f, const Strategy& s, const Strategy& t);

/// For every x and s ∈ x: p_σ(s) = act(f[x])(p_τ(f(s))). Axioms
/// "same-game", "map", "responses" (table shape) and "square".
Report validate_weak_map(const WeakMap& w);

/// f with every response the unit of P.
WeakMap strict_as_weak(const Strategy& s, const Strategy& t, EventMap f);
WeakMap identity_weak_map(const Strategy& s);
/// Every response equal to beta.
WeakMap global_weak_map(const Strategy& s, const Strategy& t, EventMap f, Elem beta);

/// α · σ: same internal structure, projection act(α) ∘ p_σ.
Strategy act_on_strategy(Elem alpha, const Strategy& s);

/// x ↦ (f[x], f x), indexed like source configurations.
using KleisliMap = std::vector<std::pair<Elem, EventSet>>;
KleisliMap weak_map_to_kleisli(const WeakMap& w);
/// Kleisli composition in Set_{P × (-)}: x ↦ (r1 · r2, y2) where
/// (r1, y1) = k1(x) and (r2, y2) = k2(y1).
KleisliMap compose_kleisli(const KleisliMap& k2, const KleisliMap& k1, const Strategy& middle,
                           const FiniteGroup& p);

/// f = f2 ∘ f1 and responses[x] = responses1[x] · responses2[f1 x]. Throws
/// InputError when w1's target is not w2's source.
WeakMap compose_weak_maps(const WeakMap& w2, const WeakMap& w1);

}  // namespace esgames
