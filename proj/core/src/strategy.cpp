#include "esgames/strategy.hpp"

#include "esgames/errors.hpp"

namespace esgames {

Strategy identity_strategy(const GamePtr& game) {
  return Strategy{game->es, game, identity_map(game->es->size())};
}

Report validate_strategy(const Strategy& s) {
  Report r;
  const EventStructure& sigma = *s.internal;
  const EventStructure& a = *s.game->es;
  const Report map_report = validate_map(sigma, a, s.proj);
  for (const auto& v : map_report.violations()) r.add("projection-map", v.axiom + ": " + v.message);
  if (!map_report.ok()) return r;

  for (EventSet x : sigma.configurations()) {
    const EventSet px = s.display(x);

    // Negative extensions of p x must lift uniquely above x.
    for_each_configuration_between(a, px, px | a.negative_events(), [&](EventSet z) {
      if (z == px) return true;
      const EventSet room = x | (preimage(s.proj, z - px, sigma.size()));
      std::size_t lifts = 0;
      for_each_configuration_between(sigma, x, room, [&](EventSet y) {
        if (y.size() == z.size() && s.display(y) == z) ++lifts;
        return lifts < 2;
      });
      if (lifts != 1)
        r.add("receptivity", (lifts == 0 ? "no configuration above " : "several configurations above ") +
                                 format_set(sigma, x) + " projects to " + format_set(a, z));
      return true;
    });

    // Positive retractions of p x must be reached from below x.
    for_each_configuration_between(a, px & a.negative_events(), px, [&](EventSet z) {
      if (!a.is_configuration(z)) return true;
      const EventSet room = x & preimage(s.proj, z, sigma.size());
      std::size_t found = 0;
      for_each_configuration_between(sigma, EventSet{}, room, [&](EventSet y) {
        if (y.size() == z.size() && s.display(y) == z) ++found;
        return found < 2;
      });
      if (found == 0)
        r.add("courtesy", "no configuration below " + format_set(sigma, x) + " projects to " + format_set(a, z));
      else if (found > 1)
        r.add("uniqueness", "several configurations below " + format_set(sigma, x) + " project to " +
                                format_set(a, z));
      return true;
    });
  }
  return r;
}

namespace {

bool same_game(const Strategy& s, const Strategy& t) { return s.game == t.game || *s.game == *t.game; }

}  // namespace

Report validate_strict_map(const EventMap& f, const Strategy& s, const Strategy& t) {
  Report r;
  if (!same_game(s, t)) {
    r.add("same-game", "strategies are on different games");
    return r;
  }
  const Report m = validate_map(*s.internal, *t.internal, f);
  for (const auto& v : m.violations()) r.add("map", v.axiom + ": " + v.message);
  if (!m.ok()) return r;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto e = static_cast<EventIndex>(i);
    if (t.proj[f[e]] != s.proj[e])
      r.add("strict", "p(f(" + s.internal->id(e) + ")) = " + s.game->es->id(t.proj[f[e]]) + " but p(" +
                          s.internal->id(e) + ") = " + s.game->es->id(s.proj[e]));
  }
  return r;
}

Report validate_weak_map(const WeakMap& w) {
  Report r;
  if (!same_game(w.source, w.target)) {
    r.add("same-game", "strategies are on different games");
    return r;
  }
  const EventStructure& sigma = *w.source.internal;
  const Report m = validate_map(sigma, *w.target.internal, w.f);
  for (const auto& v : m.violations()) r.add("map", v.axiom + ": " + v.message);
  if (!m.ok()) return r;
  const auto& configs = sigma.configurations();
  const GroupAction& p_action = w.source.game->p_action;
  if (w.responses.size() != configs.size()) {
    r.add("responses", "response table has " + std::to_string(w.responses.size()) + " entries for " +
                           std::to_string(configs.size()) + " configurations");
    return r;
  }
  for (std::size_t xi = 0; xi < configs.size(); ++xi) {
    if (w.responses[xi] >= p_action.group->order()) {
      r.add("responses", "response at " + format_set(sigma, configs[xi]) + " is not an element of P");
      continue;
    }
    const EventMap& beta = p_action(w.responses[xi]);
    for (EventIndex e : configs[xi]) {
      if (w.source.proj[e] != beta[w.target.proj[w.f[e]]]) {
        r.add("square", "square fails at " + format_set(sigma, configs[xi]) + " on event " + sigma.id(e) +
                            " with response " + p_action.group->name(w.responses[xi]));
        break;
      }
    }
  }
  return r;
}

WeakMap global_weak_map(const Strategy& s, const Strategy& t, EventMap f, Elem beta) {
  return WeakMap{s, t, std::move(f), std::vector<Elem>(s.internal->configurations().size(), beta)};
}

WeakMap strict_as_weak(const Strategy& s, const Strategy& t, EventMap f) {
  return global_weak_map(s, t, std::move(f), s.game->p_group().unit());
}

WeakMap identity_weak_map(const Strategy& s) { return strict_as_weak(s, s, identity_map(s.internal->size())); }

Strategy act_on_strategy(Elem alpha, const Strategy& s) {
  return Strategy{s.internal, s.game, compose(s.game->n_action(alpha), s.proj)};
}

KleisliMap weak_map_to_kleisli(const WeakMap& w) {
  const auto& configs = w.source.internal->configurations();
  KleisliMap k(configs.size());
  for (std::size_t xi = 0; xi < configs.size(); ++xi) k[xi] = {w.responses[xi], image(w.f, configs[xi])};
  return k;
}

KleisliMap compose_kleisli(const KleisliMap& k2, const KleisliMap& k1, const Strategy& middle,
                           const FiniteGroup& p) {
  KleisliMap out(k1.size());
  for (std::size_t xi = 0; xi < k1.size(); ++xi) {
    const auto [r1, y1] = k1[xi];
    const auto yi = middle.internal->configuration_index(y1);
    if (!yi) throw InputError("Kleisli map leaves the configurations of the middle strategy");
    const auto [r2, y2] = k2[*yi];
    out[xi] = {p.mul(r1, r2), y2};
  }
  return out;
}

WeakMap compose_weak_maps(const WeakMap& w2, const WeakMap& w1) {
  if (!(w1.target == w2.source)) throw InputError("cannot compose weak maps: endpoints differ");
  const FiniteGroup& p = w1.source.game->p_group();
  const auto& configs = w1.source.internal->configurations();
  WeakMap out{w1.source, w2.target, compose(w2.f, w1.f), std::vector<Elem>(configs.size())};
  for (std::size_t xi = 0; xi < configs.size(); ++xi) {
    const auto yi = w1.target.internal->configuration_index(image(w1.f, configs[xi]));
    if (!yi) throw InputError("first map does not preserve configurations");
    out.responses[xi] = p.mul(w1.responses[xi], w2.responses[*yi]);
  }
  return out;
}

}  // namespace esgames
