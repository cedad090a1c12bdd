#include "esgames/copycat.hpp"

#include <algorithm>

#include "esgames/errors.hpp"

namespace esgames {

EventStructure copycat_es(const EventStructure& a, Report* log) {
  const EventStructure base = parallel_es(dual_es(a), a);
  const std::size_t n = a.size();
  std::vector<EventSet> preds(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) preds[i] = base.predecessors(static_cast<EventIndex>(i));
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = static_cast<EventIndex>(i);
    const auto dual_side = static_cast<EventIndex>(i);
    const auto orig_side = static_cast<EventIndex>(n + i);
    if (a.polarity(e) == Polarity::positive)
      preds[orig_side] = preds[orig_side].with(dual_side);
    else
      preds[dual_side] = preds[dual_side].with(orig_side);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& p : preds) {
      EventSet closed = p;
      for (EventIndex d : p) closed |= preds[d];
      if (closed != p) {
        p = closed;
        changed = true;
      }
    }
  }
  for (std::size_t i = 0; i < preds.size(); ++i)
    if (preds[i].contains(static_cast<EventIndex>(i)))
      throw InternalError("copycat order has a cycle through " + base.id(static_cast<EventIndex>(i)));

  std::vector<EventSet> conflicts(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    const EventSet down_i = preds[i].with(static_cast<EventIndex>(i));
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (i == j) continue;
      const EventSet down_j = preds[j].with(static_cast<EventIndex>(j));
      bool clash = false;
      for (EventIndex c : down_i)
        if (base.conflicts(c).intersects(down_j)) {
          clash = true;
          break;
        }
      if (!clash) continue;
      conflicts[i] = conflicts[i].with(static_cast<EventIndex>(j));
      if (log && i < j && !base.in_conflict(static_cast<EventIndex>(i), static_cast<EventIndex>(j)))
        log->add("conflict-closure", "added " + base.id(static_cast<EventIndex>(i)) + " # " +
                                         base.id(static_cast<EventIndex>(j)));
    }
  }
  return EventStructure(base.events(), std::move(preds), std::move(conflicts));
}

Game copycat_game(const Game& a) { return parallel_game(dual_game(a), a); }

Strategy copycat_strategy(const GamePtr& a) {
  auto internal = share(copycat_es(*a->es));
  return Strategy{internal, share(copycat_game(*a)), identity_map(internal->size())};
}

EventMap copycat_functor(const EventMap& f, std::size_t a_size, std::size_t b_size) {
  EventMap m(2 * a_size);
  for (std::size_t i = 0; i < a_size; ++i) {
    m[i] = f[i];
    m[a_size + i] = static_cast<EventIndex>(b_size + f[i]);
  }
  return m;
}

UniformStrategy uniform_copycat(const GamePtr& a) {
  const Strategy cc = copycat_strategy(a);
  const FiniteGroup& na = a->n_group();
  const FiniteGroup& pa = a->p_group();
  const FiniteGroup& n = cc.game->n_group();
  const std::size_t size = a->es->size();
  std::vector<EventMap> maps(n.order());
  std::vector<std::vector<Elem>> responses(n.order());
  const std::size_t configs = cc.internal->configurations().size();
  for (Elem g = 0; g < n.order(); ++g) {
    const auto [beta, alpha] = product_components(na, g);
    const auto [gamma_inv, delta] = a->law(alpha, pa.inv(beta));
    const Elem gamma = pa.inv(gamma_inv);
    const EventMap eps = compose(a->n_action(delta), a->p_action(beta));
    if (eps != compose(a->p_action(gamma), a->n_action(alpha)))
      throw InternalError("delta.beta != gamma.alpha for (" + pa.name(beta) + ", " + na.name(alpha) +
                          "): the distributive law does not permute the actions");
    maps[g] = copycat_functor(eps, size, size);
    responses[g].assign(configs, product_index(pa, na.inv(delta), gamma_inv));
  }
  return uniform_from_slices(cc, maps, responses);
}

Report validate_lift_witness(const LiftWitness& w) {
  Report r;
  const Game& a = *w.a;
  const Game& b = *w.b;
  const Report m = validate_map(*a.es, *b.es, w.map);
  for (const auto& v : m.violations()) r.add("map", v.axiom + ": " + v.message);
  if (!m.ok()) return r;
  const Report s = validate_strategy(Strategy{a.es, w.b, w.map});
  for (const auto& v : s.violations()) r.add("strategy", v.axiom + ": " + v.message);

  auto table_ok = [](const std::vector<Elem>& t, const FiniteGroup& from, const FiniteGroup& to) {
    return t.size() == from.order() && std::all_of(t.begin(), t.end(), [&](Elem x) { return x < to.order(); });
  };
  const bool l_ok = table_ok(w.L, b.n_group(), a.n_group());
  const bool m_ok = table_ok(w.M, a.p_group(), b.p_group());
  if (!l_ok || !is_homomorphism(b.n_group(), a.n_group(), w.L))
    r.add("L-homomorphism", "L not a homomorphism N_B -> N_A");
  if (!m_ok || !is_homomorphism(a.p_group(), b.p_group(), w.M))
    r.add("M-homomorphism", "M not a homomorphism P_A -> P_B");
  if (!l_ok || !m_ok) return r;

  for (Elem alpha = 0; alpha < b.n_group().order(); ++alpha)
    if (compose(w.map, a.n_action(w.L[alpha])) != compose(b.n_action(alpha), w.map))
      r.add("negative-square", "f . L(" + b.n_group().name(alpha) + ") != " + b.n_group().name(alpha) + " . f");
  for (Elem beta = 0; beta < a.p_group().order(); ++beta)
    if (compose(w.map, a.p_action(beta)) != compose(b.p_action(w.M[beta]), w.map))
      r.add("positive-square", "f . " + a.p_group().name(beta) + " != M(" + a.p_group().name(beta) + ") . f");

  for (Elem alpha = 0; alpha < b.n_group().order(); ++alpha)
    for (Elem beta = 0; beta < a.p_group().order(); ++beta) {
      const auto [top_p, top_n] = b.law(alpha, w.M[beta]);
      const auto [bot_p, bot_n] = a.law(w.L[alpha], beta);
      if (top_p != w.M[bot_p] || w.L[top_n] != bot_n)
        r.add("hexagon", "paths from (" + b.n_group().name(alpha) + ", " + a.p_group().name(beta) +
                             ") disagree: (" + b.p_group().name(top_p) + ", " + a.n_group().name(w.L[top_n]) +
                             ") vs (" + b.p_group().name(w.M[bot_p]) + ", " + a.n_group().name(bot_n) + ")");
    }
  return r;
}

LiftWitness dual_witness(const LiftWitness& w) {
  return LiftWitness{share(dual_game(*w.a)), share(dual_game(*w.b)), w.map, w.L, w.M};
}

Report validate_colift_witness(const LiftWitness& w) { return validate_lift_witness(dual_witness(w)); }

namespace {

void require_strategy(const EventStructurePtr& es, const GamePtr& game, const EventMap& map) {
  const Report r = validate_strategy(Strategy{es, game, map});
  if (!r.ok()) throw PreconditionError("map is not a strategy on the target game: " + r.violations().front().message);
}

void require_witness(const Report& r) {
  if (r.ok()) return;
  std::string msg = "lift witness invalid:";
  const char* sep = " ";
  for (const auto& axiom : r.failed_axioms()) {
    msg += sep + ("[" + axiom + "] " + r.witness(axiom));
    sep = "; ";
  }
  throw PreconditionError(msg);
}

}  // namespace

Strategy lift_strategy(const LiftWitness& w) {
  require_strategy(w.a->es, w.b, w.map);
  const std::size_t n = w.a->es->size();
  auto internal = share(copycat_es(*w.a->es));
  EventMap proj(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    proj[i] = static_cast<EventIndex>(i);
    proj[n + i] = static_cast<EventIndex>(n + w.map[i]);
  }
  return Strategy{internal, share(parallel_game(dual_game(*w.a), *w.b)), std::move(proj)};
}

UniformStrategy uniform_lift(const LiftWitness& w) {
  require_witness(validate_lift_witness(w));
  const UniformStrategy cc = uniform_copycat(w.a);
  Strategy lifted = lift_strategy(w);
  const FiniteGroup& na = w.a->n_group();
  const FiniteGroup& pa = w.a->p_group();
  const FiniteGroup& nb = w.b->n_group();
  const FiniteGroup& pb = w.b->p_group();
  const std::size_t order = lifted.game->n_group().order();
  const std::size_t c = cc.configuration_count();
  UniformStrategy u{std::move(lifted), std::vector<PhiEntry>(order * c)};
  for (Elem g = 0; g < order; ++g) {
    const auto [nu, alpha] = product_components(nb, g);
    const Elem through = product_index(na, nu, w.L[alpha]);
    for (std::size_t xi = 0; xi < c; ++xi) {
      const PhiEntry e = cc.at(through, xi);
      const auto [left, right] = product_components(pa, e.response);
      u.phi[g * c + xi] = {product_index(pb, left, w.M[right]), e.image};
    }
  }
  return u;
}

Strategy colift_strategy(const LiftWitness& w) {
  require_strategy(share(dual_es(*w.a->es)), share(dual_game(*w.b)), w.map);
  const std::size_t n = w.a->es->size();
  const std::size_t m = w.b->es->size();
  auto internal = share(copycat_es(*w.a->es));
  EventMap proj(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    proj[i] = w.map[i];
    proj[n + i] = static_cast<EventIndex>(m + i);
  }
  return Strategy{internal, share(parallel_game(dual_game(*w.b), *w.a)), std::move(proj)};
}

UniformStrategy uniform_colift(const LiftWitness& w) {
  const UniformStrategy lifted = uniform_lift(dual_witness(w));
  Strategy target = colift_strategy(w);
  const std::size_t n = w.a->es->size();

  // cc_A → cc_{A⊥}: (0,a) ↦ (1,a) and (1,a) ↦ (0,a).
  EventMap swap(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    swap[i] = static_cast<EventIndex>(n + i);
    swap[n + i] = static_cast<EventIndex>(i);
  }
  const EventStructure& here = *target.internal;
  const EventStructure& there = *lifted.strategy.internal;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    const auto e = static_cast<EventIndex>(i);
    if (image(swap, here.predecessors(e)) != there.predecessors(swap[e]) ||
        image(swap, here.conflicts(e)) != there.conflicts(swap[e]))
      throw InternalError("tag swap is not an isomorphism cc_A -> cc_(A dual)");
  }
  const EventMap unswap = inverse(swap);

  const FiniteGroup& na = w.a->n_group();
  const FiniteGroup& pa = w.a->p_group();
  const FiniteGroup& nb = w.b->n_group();
  const FiniteGroup& pb = w.b->p_group();
  const auto& configs = here.configurations();
  const auto& lifted_configs = there.configurations();
  const std::size_t order = target.game->n_group().order();
  UniformStrategy u{std::move(target), std::vector<PhiEntry>(order * configs.size())};
  for (Elem g = 0; g < order; ++g) {
    const auto [nu, alpha] = product_components(na, g);  // P_B × N_A
    const Elem lg = product_index(pb, alpha, nu);        // N_A × P_B
    for (std::size_t xi = 0; xi < configs.size(); ++xi) {
      const auto li = there.configuration_index(image(swap, configs[xi]));
      if (!li) throw InternalError("tag swap does not preserve configurations");
      const PhiEntry e = lifted.at(lg, *li);
      const auto [p, m] = product_components(nb, e.response);  // P_A × N_B
      const auto back = here.configuration_index(image(unswap, lifted_configs[e.image]));
      u.phi[g * configs.size() + xi] = {product_index(pa, m, p), static_cast<std::uint32_t>(*back)};
    }
  }
  return u;
}

}  // namespace esgames
