#pragma once

#include <string>
#include <vector>

#include "esgames/io.hpp"

namespace esgames {

/// Two causal pairs o0 -> p0, o1 -> p1; N generated by the column swap "s",
/// P trivial, λ derived from the factorization.
GamePtr pairs_game();

/// n negative tokens o0..o(n-1) and n positive tokens p0..p(n-1), all
/// concurrent. N = S_n on negatives (generators "s<i>" swap o_i, o_{i+1}),
/// P = S_n on positives ("t<i>"), commuting law. Throws PreconditionError
/// for n == 0.
GamePtr token_game(std::size_t n);

/// Blue strategies on token_game(n), with internal events named after the
/// game events they project to:
///   1  o_i -> p_i
///   2  negatives only
///   3  p0 alone, then o0 -> p1, p2; o1 -> p3, p4; ... while tokens last
///   4  o2 -> p2
///   5  o1 -> p0; o2 -> p1, p2 (then o_k -> the next k tokens, while they last)
/// Throws PreconditionError for k outside 1..5 or n too small (4 and 5 need
/// n >= 3).
Strategy token_strategy(int k, std::size_t n);

/// A strategy on `game` whose events are copies of the listed game events,
/// ordered by the game's causality plus `links`.
Strategy sub_strategy(const GamePtr& game, const std::vector<std::string>& events,
                      const std::vector<std::pair<std::string, std::string>>& links = {});

struct TwinSwap {
  GamePtr game;
  /// φ_α = β ∘ α with response β: uniform, not local.
  UniformStrategy nonlocal;
  /// φ_α = α with unit responses: uniform and local.
  UniformStrategy local;
};

/// Two negative and two positive concurrent events; N = {id, alpha}
/// swapping the negatives, P = {id, beta} swapping the positives, trivial
/// law; σ is the identity strategy.
TwinSwap twin_swap();

/// a, b negative and in conflict, c above a, d above b, conflict inherited;
/// N swaps the two branches, P trivial.
GamePtr conflict_game();

/// A single negative event "o" with trivial symmetry.
GamePtr single_negative_game();

/// bang(⊖, 2) ∥ (bang(⊖, 2))⊥: two exchangeable tokens per player.
GamePtr token_bang_game();

struct NamedGame {
  std::string name;
  GamePtr game;
};

/// Every game the suites quantify over "all fixture games".
std::vector<NamedGame> fixture_games();

/// The swap A ∥ B -> B ∥ A with L and M exchanging components.
LiftWitness swap_witness(const GamePtr& a, const GamePtr& b);
/// Injection of A as copy 0 of bang(A, 2); L projects N onto copy 0's
/// factor and M includes P_A as copy 0's factor.
LiftWitness bang_injection_witness(const GamePtr& a);
/// The same injection read as a colift (counit): L' : P_A^2 -> P_A
/// projects to copy 0, M' : N_A -> N_{!A} is α ↦ (id; α, e).
LiftWitness bang_counit_witness(const GamePtr& a);

struct CatalogEntry {
  std::string name;
  Bundle bundle;
};

/// The shipped document bundles, one per file under data/fixtures.
std::vector<CatalogEntry> fixture_catalog();

}  // namespace esgames
