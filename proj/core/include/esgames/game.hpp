#pragma once

#include "esgames/symmetry.hpp"

namespace esgames {

/// An event structure with a negative action of N, a positive action of P
/// and a distributive law permuting them.
struct Game {
  EventStructurePtr es;
  GroupAction n_action;
  GroupAction p_action;
  DistributiveLaw law;

  const FiniteGroup& n_group() const { return *n_action.group; }
  const FiniteGroup& p_group() const { return *p_action.group; }

  friend bool operator==(const Game& a, const Game& b) {
    return *a.es == *b.es && a.n_action == b.n_action && a.p_action == b.p_action && a.law == b.law;
  }
};

using GamePtr = std::shared_ptr<const Game>;

/// Axioms checked, each under its own name: "event-structure", "groups",
/// "actions", "negative-action", "positive-action", "law" and
/// "permutation-square" (act(α) ∘ act(β) = act(β') ∘ act(α') whenever
/// λ(α, β) = (β', α')).
Report validate_game(const Game& game);

/// Both groups trivial.
Game trivial_game(const EventStructurePtr& es);

/// Polarity flipped, N and P exchanged, λ replaced by isw ∘ λ ∘ isw.
Game dual_game(const Game& game);

/// Events "0:a" and "1:b"; N and P are direct products acting per
/// component, λ is λ_A × λ_B.
Game parallel_game(const Game& a, const Game& b);

/// n-fold truncation of !A for a negative game A. N is the wreath product
/// S_n ≀ N_A, elements (π, (α_i)) acting by (i, a) ↦ (π(i), α_i(a)); P is
/// P_A^n acting per copy. Throws PreconditionError when A is not negative or
/// copies == 0, BoundExceeded when N grows past limits.max_group_order.
Game bang_game(const Game& a, std::size_t copies, const Limits& limits = Limits::defaults());

struct GamePolarity {
  bool negative = false;
  bool positive = false;

  bool vacuous() const { return negative && positive; }
  bool mixed() const { return !negative && !positive; }
};

/// negative iff every minimal event is negative; positive dually.
GamePolarity polarity_of_game(const Game& game);

/// Event permutation of S_n at index i of the canonical enumeration used by
/// bang_game: all permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> permutations_of(std::size_t n);

}  // namespace esgames
