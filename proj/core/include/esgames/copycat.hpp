#pragma once

#include <vector>

#include "esgames/uniform.hpp"

namespace esgames {

/// Events of A⊥ ∥ A ("0:a" on the dual side, "1:a" on the original side),
/// with (0,a) ≤ (1,a) for positive a and (1,a) ≤ (0,a) for negative a,
/// transitively closed. Inherited conflict is closed hereditarily under the
/// new order; when that adds pairs, each addition is recorded in `log` under
/// "conflict-closure".
EventStructure copycat_es(const EventStructure& a, Report* log = nullptr);

/// The game A⊥ ∥ A.
Game copycat_game(const Game& a);

/// cc_A with the identity projection onto A⊥ ∥ A.
Strategy copycat_strategy(const GamePtr& a);

/// f⊥ ∥ f read as a map cc_A → cc_B.
EventMap copycat_functor(const EventMap& f, std::size_t a_size, std::size_t b_size);

/// φ_(β,α) = cc_ε with ε = δβ = γα where (γ⁻¹, δ) = λ(α, β⁻¹), and global
/// response (δ⁻¹, γ⁻¹). Throws InternalError when δβ ≠ γα.
UniformStrategy uniform_copycat(const GamePtr& a);

/// Data for lifting a map f : A → B. For a lift, L : N_B → N_A and
/// M : P_A → P_B. A colift is described by the same fields read on dual
/// games: L : P_B → P_A and M : N_A → N_B.
struct LiftWitness {
  GamePtr a;
  GamePtr b;
  EventMap map;
  std::vector<Elem> L;
  std::vector<Elem> M;

  friend bool operator==(const LiftWitness& x, const LiftWitness& y) {
    return *x.a == *y.a && *x.b == *y.b && x.map == y.map && x.L == y.L && x.M == y.M;
  }
};

/// Axioms "map", "strategy" (A with projection f is a strategy on B),
/// "L-homomorphism", "M-homomorphism", "negative-square"
/// (f ∘ L(α) = α ∘ f), "positive-square" (f ∘ β = M(β) ∘ f) and "hexagon".
Report validate_lift_witness(const LiftWitness& w);

/// The same witness with both games dualised: the colift of f is the lift
/// of f⊥ transported along cc_{A⊥} ≅ cc_A.
LiftWitness dual_witness(const LiftWitness& w);
/// validate_lift_witness(dual_witness(w)).
Report validate_colift_witness(const LiftWitness& w);

/// cc_A on A⊥ ∥ B with projection (id ∥ f). Throws PreconditionError with
/// the violating configuration when f is not a strategy on B.
Strategy lift_strategy(const LiftWitness& w);

/// φ translated along (id × L) and (id × M) around uniform_copycat(A).
/// Throws PreconditionError naming each violated witness axiom.
UniformStrategy uniform_lift(const LiftWitness& w);

/// cc_A on B⊥ ∥ A with projection (f⊥ ∥ id).
Strategy colift_strategy(const LiftWitness& w);

/// uniform_lift of dual_witness(w), transported to colift_strategy(w).
UniformStrategy uniform_colift(const LiftWitness& w);

}  // namespace esgames
