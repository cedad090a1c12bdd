#pragma once

// Randomized checks over small event structures, shared by the unit suite
// and the acceptance driver.

#include <random>
#include <string>
#include <vector>

#include "esgames/tcg.hpp"
#include "oracles.hpp"

namespace props {

using namespace esgames;

struct Outcome {
  std::size_t structures = 0;
  std::size_t actions = 0;
  std::size_t triples = 0;
  std::vector<std::string> failures;
};

inline Outcome run(std::uint32_t seed, std::size_t count, std::size_t max_events = 6) {
  Outcome out;
  std::mt19937 rng(seed);
  auto fail = [&](std::size_t i, const std::string& what) {
    out.failures.push_back("#" + std::to_string(i) + " (seed " + std::to_string(seed) + "): " + what);
  };
  for (std::size_t i = 0; i < count; ++i) {
    const EventStructurePtr es = share(oracle::random_es(rng, max_events));
    ++out.structures;
    if (!validate_event_structure(*es).ok()) {
      fail(i, "generator produced an invalid structure");
      continue;
    }
    if (es->configurations() != oracle::configurations(*es)) fail(i, "configurations differ from subset filter");

    const auto autos = oracle::automorphisms(*es);
    if (enumerate_automorphisms(*es).size() != autos.size()) fail(i, "automorphism count differs");

    // A random subgroup of the automorphisms.
    std::vector<EventMap> gens;
    std::bernoulli_distribution pick(0.5);
    for (const auto& a : autos)
      if (pick(rng)) gens.push_back(a);
    const GeneratedGroup g = group_from_generators(es, gens);
    ++out.actions;
    if (!validate_group(*g.group).ok()) fail(i, "generated group: " + validate_group(*g.group).str());
    if (!validate_action(g.action).ok()) fail(i, "generated action: " + validate_action(g.action).str());
    const Report fam = validate_iso_family(family_from_action(g.action));
    if (!fam.ok()) fail(i, "family_from_action: " + fam.str());

    // Weak maps σ → σ on a game whose P is the generated group.
    const GamePtr game = share(Game{es, trivial_action(es), g.action, commuting_law(share(FiniteGroup::trivial()), g.group)});
    const Strategy s = identity_strategy(game);
    const std::size_t nc = es->configurations().size();
    std::uniform_int_distribution<std::size_t> elem(0, g.group->order() - 1);
    auto random_map = [&] {
      const Elem f = static_cast<Elem>(elem(rng));
      WeakMap w{s, s, g.action(f), std::vector<Elem>(nc)};
      for (auto& r : w.responses) r = static_cast<Elem>(elem(rng));
      return w;
    };
    for (int t = 0; t < 3; ++t) {
      const WeakMap a = random_map(), b = random_map(), c = random_map();
      ++out.triples;
      if (!(compose_weak_maps(c, compose_weak_maps(b, a)) == compose_weak_maps(compose_weak_maps(c, b), a)))
        fail(i, "weak-map composition is not associative");
    }
  }
  return out;
}

}  // namespace props
